from __future__ import annotations

import pytest

from segperiod.distinction import (
    TriBool,
    closed_orbit_p13,
    closed_orbit_p21,
    ext1_gl1,
    ext_vanishes_p13,
    ext_vanishes_p21,
    hom_gl1,
    induced_has_period_p21,
    induced_has_period_p22,
    middle_orbit_p22,
)
from segperiod.distinction.verdict import Status
from segperiod.forms import single_point
from segperiod.jacquet import jacquet


def always(value):
    return lambda form: value


def pt(parse, text):
    return single_point(parse(text))


def test_hom_and_ext_on_gl1(parse):
    a, b = pt(parse, "chi"), pt(parse, "chi*v^2")
    assert hom_gl1(a, a) == 1 and hom_gl1(a, b) == 0
    assert ext1_gl1(a, a) == 1 and ext1_gl1(a, b) == 0
    with pytest.raises(ValueError):
        ext1_gl1(pt(parse, "rho2"), a)


def test_closed_orbit_p21(parse):
    st2 = parse("L([chi*v^-1 .. chi*v^1])")
    assert closed_orbit_p21(st2, pt(parse, "chi"))
    assert not closed_orbit_p21(st2, pt(parse, "chi2"))
    # Steinberg of a higher point: the remaining factor is never a character.
    assert not closed_orbit_p21(parse("L([mu*v^-1/2 .. mu*v^1/2])"), pt(parse, "mu*v^-1/2"))


def test_ext_vanishes_p21(parse):
    speh = parse("Z([chi*v^-1 .. chi*v^1])")
    terms = jacquet(speh, 1)
    assert ext_vanishes_p21(pt(parse, "chi2"), terms, always(TriBool.YES)) is TriBool.YES
    # chi*v^-1 = s2 nu with s2 = chi*v^-2: a matched term.
    assert ext_vanishes_p21(pt(parse, "chi*v^-2"), terms, always(TriBool.UNKNOWN)) is TriBool.UNKNOWN
    assert ext_vanishes_p21(pt(parse, "chi*v^-2"), terms, always(TriBool.YES)) is TriBool.NO


def test_induced_p21_paths(parse, clf):
    st2 = parse("L([chi*v^-1 .. chi*v^1])")
    closed = induced_has_period_p21(st2, parse("chi"), clf.sp_hom)
    assert (closed.value, closed.orbit) == (TriBool.YES, "closed")
    none = induced_has_period_p21(st2, parse("chi2"), clf.sp_hom)
    assert (none.value, none.orbit) == (TriBool.NO, "none")
    opened = induced_has_period_p21(parse("Z([chi*v^-1 .. chi*v^1])"), parse("chi*v^3"), clf.sp_hom)
    assert (opened.value, opened.orbit) == (TriBool.YES, "open")
    with pytest.raises(ValueError):
        induced_has_period_p21(parse("chi"), parse("chi"), clf.sp_hom)


def test_closed_orbit_p13(parse, clf):
    lam2 = parse("chi x chi2 x chi3")
    # The term (chi2 x chi3) (x) chi pairs with chi nu, and chi2 x chi3 is distinguished.
    assert closed_orbit_p13(pt(parse, "chi*v^1"), lam2, clf.sp_hom)
    assert not closed_orbit_p13(pt(parse, "chi*v^5"), lam2, clf.sp_hom)
    # chi x chi2 (x) chi3 pairs with chi3 nu, but chi x mu is not distinguished.
    assert not closed_orbit_p13(pt(parse, "chi3*v^1"), parse("chi x mu x chi3"), clf.sp_hom)


def test_ext_vanishes_p13_cuspidal(parse):
    assert ext_vanishes_p13(pt(parse, "chi"), jacquet(parse("rho3d"), 2), always(TriBool.UNKNOWN)) is TriBool.YES


def test_p22(parse, clf):
    res = induced_has_period_p22(parse("rho2*v^1"), parse("rho2"), clf.sp_hom)
    assert (res.value, res.orbit) == (TriBool.YES, "closed")
    res = induced_has_period_p22(parse("rho2"), parse("rho2*v^1"), clf.sp_hom)
    assert (res.value, res.orbit) == (TriBool.NO, "none")
    res = induced_has_period_p22(parse("chi x chi2"), parse("chi3 x chi*v^4"), clf.sp_hom)
    assert (res.value, res.orbit) == (TriBool.YES, "open")


def test_middle_orbit_twist_is_configurable(parse):
    p1, p2 = parse("chi*v^1 x chi2"), parse("chi3 x chi")
    assert middle_orbit_p22(p1, p2, 1)
    assert not middle_orbit_p22(p1, p2, 0)


def test_tribool_logic():
    Y, N, U = TriBool.YES, TriBool.NO, TriBool.UNKNOWN
    assert (Y & U) is U and (N & U) is N and (Y | U) is Y and (N | U) is U
    assert Y.to_status() is Status.DISTINGUISHED and U.to_status() is Status.INCONCLUSIVE
    assert TriBool.from_status(Status.NOT_DISTINGUISHED) is N
