"""Hom/Ext oracles and the orbit conditions for maximal parabolic induction.

Each ``induced_has_period_*`` function returns an :class:`OrbitResult`
recording the three-valued answer and which orbit decided it.  The
``sp_hom`` argument answers whether a representation of a smaller group
carries a symplectic period; the classifier supplies it.
"""

from __future__ import annotations

from collections.abc import Callable, Sequence
from dataclasses import dataclass
from fractions import Fraction

from ..duality import z_parameter
from ..errors import UnsupportedError
from ..forms import Lform, RepForm, Zform, form_weight, single_point
from ..jacquet import JacquetTerm, jacquet
from ..segcore import CuspidalPoint, twist
from .verdict import TriBool

__all__ = [
    "OrbitResult",
    "closed_orbit_p13",
    "closed_orbit_p21",
    "ext1_gl1",
    "ext_vanishes_p13",
    "ext_vanishes_p21",
    "hom_gl1",
    "induced_has_period_p13",
    "induced_has_period_p21",
    "induced_has_period_p22",
    "middle_orbit_p22",
]

SpHom = Callable[[RepForm], TriBool]


@dataclass(frozen=True)
class OrbitResult:
    value: TriBool
    orbit: str
    reason: str


def _gl1(x: CuspidalPoint) -> None:
    if x.label.group_size != 1:
        raise ValueError(f"{x.label.id} is not a GL(1) label")


def hom_gl1(x: CuspidalPoint, y: CuspidalPoint) -> int:
    """Dimension of ``Hom(x, y)`` between irreducibles of ``GL_1(D)``."""
    _gl1(x)
    _gl1(y)
    return int(x == y)


def ext1_gl1(x: CuspidalPoint, y: CuspidalPoint) -> int:
    """Dimension of ``Ext^1(x, y)`` over ``GL_1(D)``: one exactly when ``x = y``."""
    _gl1(x)
    _gl1(y)
    return int(x == y)


def _check_weight(f: RepForm, expected: int, name: str) -> None:
    if form_weight(f) != expected:
        raise ValueError(f"{name} must have weight {expected}, got {form_weight(f)}")


def _point(f: RepForm | CuspidalPoint, name: str) -> CuspidalPoint:
    if isinstance(f, CuspidalPoint):
        return f
    p = single_point(f)
    if p is None:
        raise ValueError(f"{name} must be a single cuspidal point")
    return p


def _is_character_point(f: RepForm) -> bool:
    p = single_point(f)
    return p is not None and p.label.is_character


def _twist_point(p: CuspidalPoint, e: int | Fraction) -> CuspidalPoint:
    return twist(p, e)


# -- P(2,1) -----------------------------------------------------------------


def _terms_21(s1: RepForm) -> list[JacquetTerm]:
    _check_weight(s1, 2, "s1")
    return jacquet(s1, 1)


def closed_orbit_p21(s1: RepForm, s2: CuspidalPoint | RepForm) -> bool:
    """Some term ``A (x) B`` of ``r_(1,1)(s1)`` has ``A = s2 nu`` and ``B`` a character."""
    target = _twist_point(_point(s2, "s2"), 1)
    return any(
        single_point(t.left) == target and _is_character_point(t.right) for t in _terms_21(s1)
    )


def _ext_vanishes(
    matched: Sequence[JacquetTerm], other: Callable[[JacquetTerm], RepForm], sp_hom: SpHom
) -> TriBool:
    if not matched:
        return TriBool.YES
    if any(sp_hom(other(t)) is TriBool.YES for t in matched):
        return TriBool.NO
    return TriBool.UNKNOWN


def ext_vanishes_p21(
    s2: CuspidalPoint | RepForm, terms: Sequence[JacquetTerm], sp_hom: SpHom
) -> TriBool:
    """Vanishing of the open-orbit Ext group for ``s1 x s2``.

    ``terms`` are the ``r_(1,1)`` terms of ``s1``.  Only terms whose GL(1)
    part equals ``s2 nu`` can contribute.
    """
    target = _twist_point(_point(s2, "s2"), 1)
    matched = [t for t in terms if single_point(t.left) == target]
    return _ext_vanishes(matched, lambda t: t.right, sp_hom)


def induced_has_period_p21(s1: RepForm, s2: CuspidalPoint | RepForm, sp_hom: SpHom) -> OrbitResult:
    p2 = _point(s2, "s2")
    _gl1(p2)
    terms = _terms_21(s1)
    if closed_orbit_p21(s1, p2):
        return OrbitResult(TriBool.YES, "closed", "a Jacquet term pairs with s2 nu")
    open_ok = sp_hom(s1) & TriBool.of(p2.label.is_character)
    if open_ok is TriBool.YES:
        ext = ext_vanishes_p21(p2, terms, sp_hom)
        if ext is TriBool.YES:
            return OrbitResult(TriBool.YES, "open", "both factors distinguished, Ext vanishes")
        return OrbitResult(TriBool.UNKNOWN, "open", f"both factors distinguished, Ext {ext.value}")
    if open_ok is TriBool.NO:
        return OrbitResult(TriBool.NO, "none", "closed condition fails and a factor is not distinguished")
    return OrbitResult(TriBool.UNKNOWN, "open", "distinction of a factor is unknown")


# -- P(1,3) -----------------------------------------------------------------


def _terms_13(l2: RepForm) -> list[JacquetTerm]:
    _check_weight(l2, 3, "l2")
    return jacquet(l2, 2)


def closed_orbit_p13(l1: CuspidalPoint | RepForm, l2: RepForm, sp_hom: SpHom) -> bool:
    """Some term ``A (x) B`` of ``r_(2,1)(l2)`` has ``l1 = B nu`` and ``A`` distinguished."""
    p1 = _point(l1, "l1")
    return any(
        (b := single_point(t.right)) is not None
        and _twist_point(b, 1) == p1
        and sp_hom(t.left) is TriBool.YES
        for t in _terms_13(l2)
    )


def ext_vanishes_p13(
    l1: CuspidalPoint | RepForm, terms: Sequence[JacquetTerm], sp_hom: SpHom
) -> TriBool:
    """Vanishing of the open-orbit Ext group for ``l1 x l2`` from the ``r_(2,1)`` terms of ``l2``."""
    p1 = _point(l1, "l1")
    matched = [
        t
        for t in terms
        if (b := single_point(t.right)) is not None and _twist_point(b, 1) == p1
    ]
    return _ext_vanishes(matched, lambda t: t.left, sp_hom)


def induced_has_period_p13(l1: CuspidalPoint | RepForm, l2: RepForm, sp_hom: SpHom) -> OrbitResult:
    p1 = _point(l1, "l1")
    _gl1(p1)
    terms = _terms_13(l2)
    if closed_orbit_p13(p1, l2, sp_hom):
        return OrbitResult(TriBool.YES, "closed", "a Jacquet term pairs with l1")
    open_ok = TriBool.of(p1.label.is_character) & sp_hom(l2)
    if open_ok is TriBool.YES:
        ext = ext_vanishes_p13(p1, terms, sp_hom)
        if ext is TriBool.YES:
            return OrbitResult(TriBool.YES, "open", "both factors distinguished, Ext vanishes")
        return OrbitResult(TriBool.UNKNOWN, "open", f"both factors distinguished, Ext {ext.value}")
    if open_ok is TriBool.NO:
        return OrbitResult(TriBool.NO, "none", "closed condition fails and a factor is not distinguished")
    return OrbitResult(TriBool.UNKNOWN, "open", "distinction of a factor is unknown")


# -- P(2,2) -----------------------------------------------------------------


def middle_orbit_p22(p1: RepForm, p2: RepForm, t: int | Fraction = 1) -> bool:
    """Terms ``A (x) B`` of ``r(p1)`` and ``C (x) D`` of ``r(p2)`` with ``A = D nu^t``.

    ``B`` and ``C`` must be characters.
    """
    _check_weight(p1, 2, "p1")
    _check_weight(p2, 2, "p2")
    left = [
        single_point(x.left)
        for x in jacquet(p1, 1)
        if _is_character_point(x.right) and single_point(x.left) is not None
    ]
    right = [
        single_point(y.right)
        for y in jacquet(p2, 1)
        if _is_character_point(y.left) and single_point(y.right) is not None
    ]
    return any(a == _twist_point(d, t) for a in left for d in right)  # type: ignore[arg-type]


def _shift(f: RepForm, e: int) -> RepForm | None:
    if isinstance(f, (Zform, Lform)):
        return type(f)(twist(f.m, e))
    return None


def _same_irreducible(a: RepForm, b: RepForm) -> bool:
    try:
        return z_parameter(a) == z_parameter(b)
    except TypeError:
        return False


def induced_has_period_p22(
    p1: RepForm, p2: RepForm, sp_hom: SpHom, middle_twist: int | Fraction = 1
) -> OrbitResult:
    _check_weight(p1, 2, "p1")
    _check_weight(p2, 2, "p2")
    shifted = _shift(p2, 1)
    if shifted is not None and _same_irreducible(p1, shifted):
        return OrbitResult(TriBool.YES, "closed", "p1 = p2 nu")
    both = sp_hom(p1) & sp_hom(p2)
    if both is TriBool.YES:
        return OrbitResult(TriBool.YES, "open", "both factors distinguished")
    try:
        middle = middle_orbit_p22(p1, p2, middle_twist)
    except UnsupportedError:
        return OrbitResult(TriBool.UNKNOWN, "middle", "middle orbit not computable")
    if middle:
        return OrbitResult(TriBool.UNKNOWN, "middle", "middle-orbit pairing present")
    if both is TriBool.NO:
        return OrbitResult(TriBool.NO, "none", "no orbit condition holds")
    return OrbitResult(TriBool.UNKNOWN, "open", "distinction of a factor is unknown")
