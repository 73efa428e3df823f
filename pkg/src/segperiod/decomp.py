"""Products of two segment representations and normalization of products."""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

from .duality import l_parameter, z_parameter
from .forms import Lform, Product, RepForm, Zform, leaves, single_segment
from .segcore import Multisegment, Segment, intersection, linked, precedes, union

__all__ = [
    "PairDecomposition",
    "canonical",
    "cross_unlinked",
    "decompose_pair_L",
    "decompose_pair_Z",
    "is_irreducible_product",
    "normalize",
]


@dataclass(frozen=True)
class PairDecomposition:
    irreducible: bool
    sub: RepForm | None
    quotient: RepForm | None
    subquotients: frozenset[RepForm]


def _merged(d1: Segment, d2: Segment) -> Multisegment:
    meet = intersection(d1, d2)
    return Multisegment([union(d1, d2)] + ([meet] if meet is not None else []))


def decompose_pair_Z(d1: Segment, d2: Segment) -> PairDecomposition:
    """Composition factors of ``Z(d1) x Z(d2)``.

    The product has length two exactly when the segments are linked; the
    socle is ``Z{d1, d2}`` when ``d2`` precedes ``d1`` and the merged
    multisegment otherwise.
    """
    plain = Zform(Multisegment([d1, d2]))
    if not linked(d1, d2):
        return PairDecomposition(True, None, None, frozenset({plain}))
    merged = Zform(_merged(d1, d2))
    sub, quotient = (plain, merged) if precedes(d2, d1) else (merged, plain)
    return PairDecomposition(False, sub, quotient, frozenset({sub, quotient}))


def decompose_pair_L(d1: Segment, d2: Segment) -> PairDecomposition:
    """Composition factors of ``L(d1) x L(d2)`` (orientation left open)."""
    plain = Lform(Multisegment([d1, d2]))
    if not linked(d1, d2):
        return PairDecomposition(True, None, None, frozenset({plain}))
    merged = Lform(_merged(d1, d2))
    return PairDecomposition(False, None, None, frozenset({plain, merged}))


def is_irreducible_product(factors: Sequence[RepForm]) -> bool:
    """Pairwise criterion for a product of single-segment forms."""
    segs: list[Segment] = []
    for f in factors:
        seg = single_segment(f)
        if seg is None:
            raise ValueError("every factor must be a single segment")
        segs.append(seg)
    return not any(linked(a, b) for i, a in enumerate(segs) for b in segs[i + 1 :])


def cross_unlinked(params: Sequence[Multisegment]) -> bool:
    """No segment of one parameter is linked to a segment of another."""
    for i, a in enumerate(params):
        for b in params[i + 1 :]:
            if any(linked(x, y) for x in a for y in b):
                return False
    return True


def canonical(f: Zform | Lform) -> Zform | Lform:
    """Record a single cuspidal point as a Z-form."""
    if isinstance(f, Lform) and len(f.m) == 1 and f.m.segments[0].length == 1:
        return Zform(f.m)
    return f


def _is_point(f: Zform | Lform) -> bool:
    seg = single_segment(f)
    return seg is not None and seg.length == 1


def normalize(f: RepForm) -> RepForm:
    """Merge a product into one Z- or L-form when it is irreducible.

    A product whose factors fail the merge test is returned as a ``Product``
    with status ``"reducible"`` when single-segment factors of one presentation
    are linked, and ``"unnormalized"`` otherwise.
    """
    parts = leaves(f)
    if not parts:
        return Product(())
    if len(parts) == 1:
        return canonical(parts[0])
    kinds = {type(p) for p in parts if not _is_point(p)}
    order = (Lform, Zform) if kinds == {Lform} else (Zform, Lform)
    for kind in order:
        params = [z_parameter(p) if kind is Zform else l_parameter(p) for p in parts]
        if cross_unlinked(params):
            merged = Multisegment(s for m in params for s in m)
            return canonical(kind(merged))
    single = all(single_segment(p) is not None for p in parts)
    status = "reducible" if single and len(kinds) <= 1 else "unnormalized"
    return Product(tuple(canonical(p) for p in parts), status=status)
