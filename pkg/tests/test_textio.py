from __future__ import annotations

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from segperiod.forms import Lform, Product, Zform
from segperiod.segcore import Multisegment, Segment
from segperiod.support import default_registry
from segperiod.textio import (
    ParseError,
    format_form,
    format_multisegment,
    parse_expr,
    parse_multisegment,
    parse_pattern_atoms,
)

from helpers import random_form

REG = default_registry()
CHI, MU, RHO2 = REG["chi"], REG["mu"], REG["rho2"]


def test_parse_point_and_segment_forms():
    assert parse_expr("Z([rho2*v^0 .. rho2*v^1])", REG) == Zform(Multisegment([Segment(RHO2, 0, 2)]))
    assert parse_expr("L([chi*v^-1 .. chi*v^1]) x chi", REG) == Product(
        (Lform(Multisegment([Segment(CHI, -1, 2)])), Zform(Multisegment([Segment(CHI, 0, 1)])))
    )
    assert parse_expr("mu*v^-3/2", REG) == Zform(Multisegment([Segment(MU, Fraction(-3, 2), 1)]))
    assert parse_expr("1", REG) == Product(())


def test_whitespace_is_insignificant():
    a = parse_expr("Z( [ mu*v^1/2 .. mu*v^5/2 ] ; [mu] )x mu", REG)
    b = parse_expr("Z([mu*v^1/2 .. mu*v^5/2];[mu]) x mu", REG)
    assert a == b


def test_format_examples():
    f = Zform(Multisegment([Segment(MU, Fraction(-1, 2), 2)]))
    assert format_form(f) == "Z([mu*v^-1/2 .. mu*v^1/2])"
    assert format_form(Product(())) == "1"
    assert format_form(Lform(Multisegment([Segment(MU, 0, 1)]))) == "L([mu])"


@pytest.mark.parametrize(
    "text, message, span",
    [
        ("Z([chi*v^0 .. chi*v^1])", "off-lattice", (14, 21)),
        ("Z([chi .. mu*v^1])", "different labels", (10, 16)),
        ("eta x chi", "unknown label", (0, 3)),
        ("mu*v^1/0", "zero denominator", (5, 8)),
        ("mu*v^1.5", "malformed rational", (5, 8)),
        ("mu*v^x", "malformed rational", (5, 6)),
        ("mu*w^1", "expected 'v^'", (3, 5)),
        ("Z([mu]", "expected ')'", (5, 6)),
        ("chi chi", "unexpected input", (4, 7)),
        ("", "expected a representation", (0, 0)),
        ("Z([mu] mu)", "expected ')'", (7, 8)),
    ],
)
def test_errors_carry_spans(text, message, span):
    with pytest.raises(ParseError) as info:
        parse_expr(text, REG)
    err = info.value
    assert message in err.message
    assert (err.span.start, err.span.end) == span
    assert 0 <= err.span.start <= err.span.end <= len(text)
    assert "^" in err.render() or not text


def test_multisegment_parse_and_format():
    m = parse_multisegment("[mu*v^-1/2 .. mu*v^1/2];[mu*v^3/2 .. mu*v^5/2]", REG)
    assert format_multisegment(m) == "[mu*v^3/2 .. mu*v^5/2];[mu*v^-1/2 .. mu*v^1/2]"
    with pytest.raises(ParseError):
        parse_multisegment("[mu] junk", REG)


def test_pattern_atoms():
    from segperiod.textio import Wildcard

    var = {"$c": CHI}
    atoms = parse_pattern_atoms("<char> x L([$c*v^-1 .. $c*v^1]) x <dist:2>", var)
    assert isinstance(atoms[0], Wildcard) and atoms[0].kind == "char"
    assert isinstance(atoms[1], Lform)
    assert atoms[2].weight == 2
    with pytest.raises(ParseError):
        parse_pattern_atoms("<char", var)
    with pytest.raises(ParseError):
        parse_expr("<char>", REG)


@settings(max_examples=200)
@given(st.randoms(use_true_random=False))
def test_round_trip(rng):
    f = random_form(rng, [CHI, MU, RHO2, REG["rho3"]])
    assert parse_expr(format_form(f), REG) == f


def test_format_is_deterministic():
    rng = random.Random(5)
    for _ in range(50):
        f = random_form(rng, [CHI, MU])
        assert format_form(f) == format_form(parse_expr(format_form(f), REG))
