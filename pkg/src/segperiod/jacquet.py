"""Jacquet restriction of segment representations and their products."""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from itertools import product as cartesian

from .duality import mw_dual
from .errors import UnsupportedError
from .forms import Lform, Product, RepForm, Zform, leaves, single_segment
from .decomp import canonical
from .segcore import Multisegment, Segment

__all__ = ["JacquetTerm", "jacquet", "jacquet_product", "jacquet_segment", "segment_factors"]


@dataclass(frozen=True)
class JacquetTerm:
    left: RepForm
    right: RepForm
    multiplicity: int = 1


EMPTY = Product(())


def _piece(kind: type, label, start, length: int) -> RepForm:
    if length == 0:
        return EMPTY
    return canonical(kind(Multisegment([Segment(label, start, length)])))


def _cut(form: Zform | Lform, k: int) -> tuple[RepForm, RepForm] | None:
    seg = single_segment(form)
    if seg is None:
        raise UnsupportedError("Jacquet cuts apply to single-segment forms only")
    if not 0 <= k <= seg.weight:
        raise ValueError(f"cut {k} out of range 0..{seg.weight}")
    r = seg.label.group_size
    if k % r:
        return None
    j = k // r
    rest = seg.length - j
    if isinstance(form, Zform):
        # Ascending: the first j points go left.
        return (
            _piece(Zform, seg.label, seg.start, j),
            _piece(Zform, seg.label, seg.start + j * seg.step, rest),
        )
    # Descending: the last j points go left.
    return (
        _piece(Lform, seg.label, seg.start + rest * seg.step, j),
        _piece(Lform, seg.label, seg.start, rest),
    )


def jacquet_segment(form: Zform | Lform, k: int) -> list[JacquetTerm]:
    """``r_(k, n-k)`` of ``Z(seg)`` or ``L(seg)``; empty when ``k`` is off the block size."""
    cut = _cut(form, k)
    return [] if cut is None else [JacquetTerm(*cut)]


def _join(pieces: Sequence[RepForm]) -> RepForm:
    kept = [p for p in pieces if p != EMPTY]
    if not kept:
        return EMPTY
    return kept[0] if len(kept) == 1 else Product(tuple(kept))


def jacquet_product(factors: Sequence[Zform | Lform], k: int) -> list[JacquetTerm]:
    """Geometric-lemma expansion over all splittings ``k = k1 + ... + kt``."""
    n = sum(f.weight for f in factors)
    if not 0 <= k <= n:
        raise ValueError(f"cut {k} out of range 0..{n}")
    options = []
    for f in factors:
        seg = single_segment(f)
        if seg is None:
            raise UnsupportedError("Jacquet cuts apply to single-segment factors only")
        r = seg.label.group_size
        options.append(range(0, seg.weight + 1, r))
    merged: dict[tuple[RepForm, RepForm], int] = {}
    for ks in cartesian(*options):
        if sum(ks) != k:
            continue
        cuts = [_cut(f, ki) for f, ki in zip(factors, ks)]
        key = (_join([c[0] for c in cuts]), _join([c[1] for c in cuts]))
        merged[key] = merged.get(key, 0) + 1
    return [JacquetTerm(left, right, mult) for (left, right), mult in merged.items()]


def segment_factors(f: Zform | Lform) -> list[Zform | Lform]:
    """Write an irreducible form as a product of single-segment forms.

    Possible when its Z-parameter or its L-parameter is pairwise unlinked.
    """
    own = f.m
    if len(own) <= 1:
        return [f]
    if own.is_pairwise_unlinked():
        kind = type(f)
        return [canonical(kind(Multisegment([s]))) for s in own]
    other = mw_dual(own)
    if other.is_pairwise_unlinked():
        kind = Lform if isinstance(f, Zform) else Zform
        return [canonical(kind(Multisegment([s]))) for s in other]
    raise UnsupportedError(
        "Jacquet modules of this multisegment presentation are not supported"
    )


def jacquet(form: RepForm, k: int) -> list[JacquetTerm]:
    """Jacquet restriction of any form expressible through segment products."""
    factors: list[Zform | Lform] = []
    for leaf in leaves(form):
        factors.extend(segment_factors(leaf))
    return jacquet_product(factors, k)
