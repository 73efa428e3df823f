"""The verdict classifier for representations of ``GL_n(D)``, ``n <= 4``."""

from __future__ import annotations

from collections.abc import Sequence
from fractions import Fraction

from ..decomp import decompose_pair_L, decompose_pair_Z, normalize
from ..duality import z_parameter
from ..errors import UnsupportedError
from ..forms import Lform, Product, RepForm, Zform, form_weight, leaves, single_point, single_segment
from ..segcore import Multisegment, contragredient
from ..support import Registry, SpStatus, default_registry
from .orbits import (
    OrbitResult,
    induced_has_period_p13,
    induced_has_period_p21,
    induced_has_period_p22,
)
from .rules import Match, RuleTable, load_rules
from .verdict import Status, TriBool, Verdict

__all__ = ["Classifier", "form_contragredient"]

MAX_WEIGHT = 4

_ORBIT_CITATIONS = {
    (2, 1, "closed"): ("P21.closed", "Proposition 26(1)"),
    (2, 1, "open"): ("P21.open", "Proposition 26(2), Theorem 27, Lemma 11"),
    (2, 1, "none"): ("P21.none", "Proposition 25"),
    (1, 3, "closed"): ("P13.closed", "Proposition 33(1)"),
    (1, 3, "open"): ("P13.open", "Proposition 33(2), Theorem 34, Lemma 11"),
    (1, 3, "none"): ("P13.none", "Proposition 32"),
    (2, 2, "closed"): ("P22.closed", "Proposition 36(1)"),
    (2, 2, "open"): ("P22.open", "Proposition 36(2)"),
    (2, 2, "middle"): ("P22.middle", "Proposition 36(3)"),
    (2, 2, "none"): ("P22.none", "Proposition 36"),
}


def form_contragredient(f: RepForm, registry: Registry | None = None) -> RepForm:
    """Contragredient, factor by factor; products keep their order."""
    if isinstance(f, Product):
        return Product(tuple(form_contragredient(g, registry) for g in f.factors), f.status)
    return type(f)(contragredient(f.m, registry))


def _combine_status(labels: Sequence) -> Status:
    statuses = {label.sp_status for label in labels}
    if SpStatus.NOT_DISTINGUISHED in statuses:
        return Status.NOT_DISTINGUISHED
    if SpStatus.UNKNOWN in statuses or not statuses:
        return Status.INCONCLUSIVE
    return Status.DISTINGUISHED


class Classifier:
    """Rule-table classifier bound to a label registry.

    ``middle_twist`` is the exponent ``t`` of the middle-orbit pairing used
    for ``GL_2 x GL_2`` induction.
    """

    def __init__(
        self,
        registry: Registry | None = None,
        rules: RuleTable | None = None,
        *,
        middle_twist: int | Fraction = 1,
    ):
        self.registry = registry if registry is not None else default_registry()
        self.rules = rules if rules is not None else RuleTable(load_rules())
        self.middle_twist = Fraction(middle_twist)
        self._cache: dict[Multisegment, Verdict] = {}

    # -- irreducible representations -----------------------------------
    def classify(self, rep: RepForm) -> Verdict:
        """Verdict for ``rep``; reducible products are treated as induced representations."""
        weight = form_weight(rep)
        if weight > MAX_WEIGHT:
            raise UnsupportedError(f"weight {weight} exceeds {MAX_WEIGHT}")
        if weight == 0:
            raise UnsupportedError("the empty product has no group to classify over")
        f = normalize(rep)
        if isinstance(f, Product):
            note = "reducible product: verdict is for the induced representation"
            if weight <= 2:
                status = self.sp_hom(f).to_status()
                return Verdict(status, (("INDUCED", "Lemma 9"), ("L13", "Lemma 13")), (note,))
            inner = self.classify_induced(f)
            return Verdict(
                inner.status,
                (("INDUCED", "Lemma 9"),) + inner.justification,
                (note,) + inner.notes,
            )
        return self._classify_param(z_parameter(f))

    def _classify_param(self, zparam: Multisegment) -> Verdict:
        cached = self._cache.get(zparam)
        if cached is not None:
            return cached
        match = self.rules.match(zparam, self._sub_classify)
        verdict = self._verdict_from(match, zparam)
        self._cache[zparam] = verdict
        return verdict

    def _sub_classify(self, f: RepForm) -> tuple[Status, tuple[tuple[str, str], ...]]:
        v = self._classify_param(z_parameter(f))
        return v.status, v.justification

    def _verdict_from(self, match: Match | None, zparam: Multisegment) -> Verdict:
        if match is None:
            near = ", ".join(f"{r.id} ({r.pattern})" for r in self.rules.nearest(zparam))
            return Verdict(Status.INCONCLUSIVE, (), (f"no rule matched; nearest: {near}",))
        rule = match.rule
        if rule.verdict == "status":
            status = _combine_status(match.cusp_labels)
            note = ", ".join(f"{lab.id}: {lab.sp_status.value}" for lab in match.cusp_labels)
            notes = (f"cuspidal status {note}",)
        else:
            status = Status(rule.verdict)
            notes = ()
        return Verdict(status, ((rule.id, rule.citation),) + match.sub_justification, notes)

    # -- Hom over smaller symplectic groups ----------------------------
    def sp_hom(self, rep: RepForm) -> TriBool:
        """Whether a representation of ``GL_r(D)``, ``r <= 3``, has a symplectic period."""
        weight = form_weight(rep)
        if not 1 <= weight <= 3:
            raise ValueError(f"sp_hom needs weight 1..3, got {weight}")
        f = normalize(rep)
        if not isinstance(f, Product):
            return TriBool.from_status(self._classify_param(z_parameter(f)).status)
        parts = leaves(f)
        if len(parts) == 2 and all(single_segment(p) is not None for p in parts):
            kinds = {type(p) for p in parts if single_point(p) is None}
            d1, d2 = (single_segment(p) for p in parts)
            dec = decompose_pair_L(d1, d2) if kinds == {Lform} else decompose_pair_Z(d1, d2)
            if dec.quotient is not None:
                if self._classify_param(z_parameter(dec.quotient)).status is Status.DISTINGUISHED:
                    return TriBool.YES
            statuses = {self._classify_param(z_parameter(g)).status for g in dec.subquotients}
            if statuses == {Status.NOT_DISTINGUISHED}:
                return TriBool.NO
        return TriBool.UNKNOWN

    # -- induced representations ---------------------------------------
    def _orbit(self, left: RepForm, right: RepForm) -> tuple[tuple[int, int], OrbitResult] | None:
        split = (form_weight(left), form_weight(right))
        if split == (2, 1):
            return split, induced_has_period_p21(left, right, self.sp_hom)
        if split == (1, 3):
            return split, induced_has_period_p13(left, right, self.sp_hom)
        if split == (2, 2):
            return split, induced_has_period_p22(left, right, self.sp_hom, self.middle_twist)
        if split in ((1, 2), (3, 1)):
            # pi -> contragredient composed with transpose-inverse swaps the blocks.
            swapped_left = form_contragredient(right, self.registry)
            swapped_right = form_contragredient(left, self.registry)
            return self._orbit(swapped_left, swapped_right)
        return None

    def classify_induced(self, rep: RepForm) -> Verdict:
        """Verdict for the ordered parabolic induction of the factors of ``rep``."""
        parts = leaves(rep)
        weight = sum(p.weight for p in parts)
        if weight not in (3, 4):
            raise UnsupportedError(f"induced classification needs weight 3 or 4, got {weight}")
        outcomes: list[tuple[tuple[int, int], OrbitResult]] = []
        for cut in range(1, len(parts)):
            left = normalize(Product(tuple(parts[:cut])))
            right = normalize(Product(tuple(parts[cut:])))
            if isinstance(left, Product) or isinstance(right, Product):
                continue
            try:
                got = self._orbit(left, right)
            except UnsupportedError:
                continue
            if got is not None:
                outcomes.append(got)
        whole = normalize(Product(tuple(parts)))
        if not outcomes:
            if not isinstance(whole, Product):
                v = self._classify_param(z_parameter(whole))
                return Verdict(v.status, v.justification, ("irreducible product classified directly",) + v.notes)
            raise UnsupportedError("no maximal parabolic split with irreducible blocks")

        def cite(split: tuple[int, int], res: OrbitResult) -> tuple[str, str]:
            return _ORBIT_CITATIONS[(split[0], split[1], res.orbit)]

        notes = tuple(f"split {s[0]}+{s[1]}: {r.value.value} via {r.orbit} orbit ({r.reason})" for s, r in outcomes)
        yes = [(s, r) for s, r in outcomes if r.value is TriBool.YES]
        no = [(s, r) for s, r in outcomes if r.value is TriBool.NO]
        if yes and no:
            return Verdict(
                Status.INCONCLUSIVE,
                tuple(cite(s, r) for s, r in yes + no),
                notes + ("orbit conditions disagree between splits",),
            )
        if yes:
            return Verdict(Status.DISTINGUISHED, (cite(*yes[0]),), notes)
        if no:
            return Verdict(Status.NOT_DISTINGUISHED, (cite(*no[0]),), notes)
        if not isinstance(whole, Product):
            v = self._classify_param(z_parameter(whole))
            return Verdict(
                v.status,
                v.justification,
                notes + ("orbit conditions undecided; the product is irreducible and was classified directly",),
            )
        return Verdict(Status.INCONCLUSIVE, tuple(cite(s, r) for s, r in outcomes), notes)
