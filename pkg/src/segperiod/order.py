"""Elementary operations and the partial order on multisegments."""

from __future__ import annotations

from collections import deque
from functools import lru_cache

from .segcore import Multisegment, intersection, linked, union

__all__ = ["elementary_successors", "enumerate_below", "leq", "minimal_elements"]


def elementary_successors(m: Multisegment) -> frozenset[Multisegment]:
    """Replace one linked pair by its union and intersection, in every way."""
    segs = m.segments
    out: set[Multisegment] = set()
    seen_pairs: set[tuple] = set()
    for i in range(len(segs)):
        for j in range(i + 1, len(segs)):
            d1, d2 = segs[i], segs[j]
            if (d1, d2) in seen_pairs or not linked(d1, d2):
                continue
            seen_pairs.add((d1, d2))
            meet = intersection(d1, d2)
            added = [union(d1, d2)] + ([meet] if meet is not None else [])
            out.add(m.replace([d1, d2], added))
    return frozenset(out)


@lru_cache(maxsize=65536)
def enumerate_below(a: Multisegment) -> frozenset[Multisegment]:
    """All ``b <= a``: multisegments reachable by elementary operations."""
    seen = {a}
    queue = deque([a])
    while queue:
        for nxt in elementary_successors(queue.popleft()):
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return frozenset(seen)


def leq(b: Multisegment, a: Multisegment) -> bool:
    """``b <= a`` in the order generated by elementary operations."""
    if b == a:
        return True
    # An elementary operation never increases the number of segments.
    if b.support != a.support or len(b) > len(a):
        return False
    return b in enumerate_below(a)


def minimal_elements(a: Multisegment) -> frozenset[Multisegment]:
    """The minimal elements of the down-set of ``a``."""
    return frozenset(b for b in enumerate_below(a) if not elementary_successors(b))
