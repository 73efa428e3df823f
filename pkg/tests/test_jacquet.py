from __future__ import annotations

import pytest

from segperiod.errors import UnsupportedError
from segperiod.forms import Product
from segperiod.jacquet import jacquet, jacquet_segment
from segperiod.support import default_registry
from segperiod.textio import format_form, parse_expr

REG = default_registry()


def P(text):
    return parse_expr(text, REG)


def terms(text, k):
    return [(format_form(t.left), format_form(t.right), t.multiplicity) for t in jacquet(P(text), k)]


def test_Z_segment_cuts_from_the_bottom():
    assert terms("Z([chi*v^-1 .. chi*v^3])", 1) == [("chi*v^-1", "Z([chi*v^1 .. chi*v^3])", 1)]
    assert terms("Z([chi*v^-1 .. chi*v^3])", 2) == [("Z([chi*v^-1 .. chi*v^1])", "chi*v^3", 1)]


def test_L_segment_cuts_from_the_top():
    assert terms("L([mu*v^-1/2 .. mu*v^3/2])", 1) == [("mu*v^3/2", "L([mu*v^-1/2 .. mu*v^1/2])", 1)]


def test_trivial_cuts():
    assert terms("Z([mu .. mu*v^2])", 0) == [("1", "Z([mu .. mu*v^2])", 1)]
    assert terms("Z([mu .. mu*v^2])", 3) == [("Z([mu .. mu*v^2])", "1", 1)]


def test_cuspidal_blocks():
    assert jacquet(P("rho3"), 1) == [] and jacquet(P("rho3"), 2) == []
    assert terms("Z([rho2 .. rho2*v^1])", 2) == [("rho2", "rho2*v^1", 1)]
    assert jacquet(P("Z([rho2 .. rho2*v^1])"), 1) == []
    assert jacquet(P("Z([rho2 .. rho2*v^1])"), 3) == []


def test_product_shuffles_factors():
    got = terms("L([mu*v^-1/2 .. mu*v^1/2]) x mu", 1)
    assert sorted(got) == sorted(
        [("mu", "L([mu*v^-1/2 .. mu*v^1/2])", 1), ("mu*v^1/2", "mu*v^-1/2 x mu", 1)]
    )


def test_repeated_terms_collect_multiplicity():
    got = jacquet(P("mu x mu"), 1)
    assert len(got) == 1 and got[0].multiplicity == 2


def test_unlinked_multisegments_go_through_factors():
    # L of three points in a row is the segment character Z([mu .. mu*v^2]).
    assert terms("L([mu];[mu*v^2];[mu*v^1])", 1) == [("mu", "Z([mu*v^1 .. mu*v^2])", 1)]


def test_linked_multisegment_unsupported():
    with pytest.raises(UnsupportedError):
        jacquet(P("Z([mu .. mu*v^1];[mu*v^1 .. mu*v^2])"), 1)


def test_cut_out_of_range():
    with pytest.raises(ValueError):
        jacquet_segment(P("Z([mu .. mu*v^1])"), 3)


def test_empty_product():
    assert jacquet(Product(()), 0)[0].left == Product(())
