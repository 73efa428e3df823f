"""Presentations of representations: Z-forms, L-forms and ordered products."""

from __future__ import annotations

from collections import Counter
from collections.abc import Iterable
from dataclasses import dataclass, field
from typing import Union

from .segcore import CuspidalPoint, Multisegment, Segment

__all__ = [
    "Lform",
    "Product",
    "RepForm",
    "Zform",
    "form_support",
    "form_weight",
    "leaves",
    "point_form",
    "single_point",
    "single_segment",
]


@dataclass(frozen=True)
class Zform:
    """``Z(m)``: the unique irreducible submodule attached to ``m``."""

    m: Multisegment

    @property
    def weight(self) -> int:
        return self.m.weight


@dataclass(frozen=True)
class Lform:
    """``L(m)``: the unique irreducible quotient attached to ``m``."""

    m: Multisegment

    @property
    def weight(self) -> int:
        return self.m.weight


@dataclass(frozen=True)
class Product:
    """Ordered parabolic induction ``f1 x f2 x ...``.

    ``status`` is bookkeeping set by normalization (``"reducible"`` or
    ``"unnormalized"``) and does not take part in equality.
    """

    factors: tuple[RepForm, ...]
    status: str = field(default="raw", compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "factors", tuple(self.factors))

    @property
    def weight(self) -> int:
        return sum(f.weight for f in self.factors)


RepForm = Union[Zform, Lform, Product]


def point_form(p: CuspidalPoint) -> Zform:
    return Zform(Multisegment([Segment.point(p)]))


def leaves(f: RepForm) -> list[Zform | Lform]:
    """Flatten nested products, dropping empty factors."""
    if isinstance(f, Product):
        out: list[Zform | Lform] = []
        for g in f.factors:
            out.extend(leaves(g))
        return out
    return [f] if f.m else []


def form_weight(f: RepForm) -> int:
    return f.weight


def form_support(f: RepForm) -> Counter[CuspidalPoint]:
    total: Counter[CuspidalPoint] = Counter()
    for leaf in leaves(f):
        total.update(leaf.m.support)
    return total


def single_segment(f: RepForm) -> Segment | None:
    """The segment of a one-segment Z- or L-form, else ``None``."""
    if isinstance(f, (Zform, Lform)) and len(f.m) == 1:
        return f.m.segments[0]
    return None


def single_point(f: RepForm) -> CuspidalPoint | None:
    seg = single_segment(f)
    if seg is not None and seg.length == 1:
        return CuspidalPoint(seg.label, seg.start)
    return None


def product_of(forms: Iterable[RepForm]) -> RepForm:
    forms = list(forms)
    if len(forms) == 1:
        return forms[0]
    return Product(tuple(forms))
