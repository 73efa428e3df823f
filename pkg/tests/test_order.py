from __future__ import annotations

from collections import defaultdict

from segperiod.order import elementary_successors, enumerate_below, leq, minimal_elements
from segperiod.segcore import Multisegment, Segment
from segperiod.support import default_registry

from helpers import ms, to_intervals
from oracles import multisegments_up_to, rank_leq

MU = default_registry()["mu"]
CHI = default_registry()["chi"]


def test_elementary_successors_of_linked_pair():
    m = ms(MU, (0, 1), (1, 2))
    assert elementary_successors(m) == {ms(MU, (0, 2), (1, 1))}
    assert elementary_successors(ms(MU, (0, 2), (1, 1))) == frozenset()


def test_enumerate_below_of_points():
    pts = ms(MU, (0, 0), (1, 1), (2, 2))
    below = {to_intervals(m) for m in enumerate_below(pts)}
    assert below == {
        ((0, 0), (1, 1), (2, 2)),
        ((0, 1), (2, 2)),
        ((0, 0), (1, 2)),
        ((0, 2),),
    }
    assert minimal_elements(pts) == {ms(MU, (0, 2))}


def test_leq_on_character_lattice():
    big = ms(CHI, (0, 1), (2, 2))
    small = ms(CHI, (0, 2))
    assert leq(small, big) and not leq(big, small)


def test_leq_requires_same_support():
    assert not leq(ms(MU, (0, 1)), ms(MU, (0, 0), (2, 2)))


def test_leq_matches_rank_criterion():
    groups: dict = defaultdict(list)
    for iv in multisegments_up_to(5, 0, 4):
        m = ms(MU, *iv)
        groups[frozenset(m.support.items())].append((iv, m))
    checked = 0
    for items in groups.values():
        for iv_a, a in items:
            for iv_b, b in items:
                assert leq(b, a) == rank_leq(iv_b, iv_a), (iv_b, iv_a)
                checked += 1
    assert checked > 2000
