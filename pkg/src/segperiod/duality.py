"""The Moeglin-Waldspurger involution, exchanging Z- and L-parameters."""

from __future__ import annotations

from collections import defaultdict
from fractions import Fraction
from functools import lru_cache

from .forms import Lform, RepForm, Zform
from .segcore import Multisegment, Segment, lattice_class
from .support import CuspidalLabel

__all__ = ["mw_dual", "to_Lform", "to_Zform", "z_parameter", "l_parameter"]


def _dual_on_lattice(segs: list[list[int]]) -> list[tuple[int, int]]:
    """Dual of integer segments ``[begin, end]`` on one lattice."""
    segs = [list(s) for s in segs]
    out: list[tuple[int, int]] = []
    while segs:
        top = max(e for _, e in segs)
        # Among segments ending at the current end, take the shortest one;
        # each next pick ends one step lower and begins strictly earlier.
        pick = max((i for i, s in enumerate(segs) if s[1] == top), key=lambda i: segs[i][0])
        chain = [pick]
        while True:
            b, e = segs[chain[-1]]
            options = [
                i for i, s in enumerate(segs) if i not in chain and s[1] == e - 1 and s[0] < b
            ]
            if not options:
                break
            chain.append(max(options, key=lambda i: segs[i][0]))
        out.append((top - len(chain) + 1, top))
        for i in chain:
            segs[i][1] -= 1
        segs = [s for s in segs if s[1] >= s[0]]
    return out


@lru_cache(maxsize=65536)
def mw_dual(m: Multisegment) -> Multisegment:
    """The Moeglin-Waldspurger dual, computed lattice by lattice."""
    buckets: dict[tuple[CuspidalLabel, Fraction], list[list[int]]] = defaultdict(list)
    for seg in m:
        base = lattice_class(seg.label, seg.start)[1]
        b = int((seg.start - base) / seg.label.step)
        buckets[(seg.label, base)].append([b, b + seg.length - 1])
    out: list[Segment] = []
    for (label, base), segs in buckets.items():
        for b, e in _dual_on_lattice(segs):
            out.append(Segment(label, base + b * label.step, e - b + 1))
    return Multisegment(out)


def to_Lform(f: Zform) -> Lform:
    return Lform(mw_dual(f.m))


def to_Zform(f: Lform) -> Zform:
    return Zform(mw_dual(f.m))


def z_parameter(f: RepForm) -> Multisegment:
    """Zelevinsky parameter of an irreducible Z- or L-form."""
    if isinstance(f, Zform):
        return f.m
    if isinstance(f, Lform):
        return mw_dual(f.m)
    raise TypeError("only Z- and L-forms have a parameter")


def l_parameter(f: RepForm) -> Multisegment:
    if isinstance(f, Lform):
        return f.m
    if isinstance(f, Zform):
        return mw_dual(f.m)
    raise TypeError("only Z- and L-forms have a parameter")
