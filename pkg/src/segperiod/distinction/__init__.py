"""Symplectic-period engine: oracles, orbit conditions and the classifier."""

from __future__ import annotations

from ..forms import RepForm
from ..support import Registry
from .classifier import Classifier, form_contragredient
from .orbits import (
    OrbitResult,
    closed_orbit_p13,
    closed_orbit_p21,
    ext1_gl1,
    ext_vanishes_p13,
    ext_vanishes_p21,
    hom_gl1,
    induced_has_period_p13,
    induced_has_period_p21,
    induced_has_period_p22,
    middle_orbit_p22,
)
from .rules import Rule, RuleTable, load_rules, parse_rules
from .verdict import Status, TriBool, Verdict

__all__ = [
    "Classifier",
    "OrbitResult",
    "Rule",
    "RuleTable",
    "Status",
    "TriBool",
    "Verdict",
    "classify",
    "classify_induced",
    "closed_orbit_p13",
    "closed_orbit_p21",
    "ext1_gl1",
    "ext_vanishes_p13",
    "ext_vanishes_p21",
    "form_contragredient",
    "hom_gl1",
    "induced_has_period_p13",
    "induced_has_period_p21",
    "induced_has_period_p22",
    "load_rules",
    "middle_orbit_p22",
    "parse_rules",
    "sp_hom",
]

_default: dict[int, Classifier] = {}


def _classifier(registry: Registry | None) -> Classifier:
    if registry is not None:
        return Classifier(registry)
    if 0 not in _default:
        _default[0] = Classifier()
    return _default[0]


def classify(rep: RepForm, registry: Registry | None = None) -> Verdict:
    return _classifier(registry).classify(rep)


def classify_induced(rep: RepForm, registry: Registry | None = None) -> Verdict:
    return _classifier(registry).classify_induced(rep)


def sp_hom(rep: RepForm, registry: Registry | None = None) -> TriBool:
    return _classifier(registry).sp_hom(rep)
