"""Rule tables: loading and matching patterns against irreducible parameters.

A rule file is line oriented::

    @var $c character
    T3.5 | Z([$m*v^-1/2 .. $m*v^5/2]) | distinguished | Theorem 3(5)

Patterns use the expression grammar with ``$name`` labels and wildcard atoms.
A pattern with several atoms matches an irreducible representation when its
Z-parameter (or its L-parameter) splits into groups, one per atom, whose
forms match the atoms and are pairwise unlinked across groups, so that the
product of the groups is the representation itself.
"""

from __future__ import annotations

from collections.abc import Callable, Iterable, Iterator, Sequence
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources
from itertools import product as cartesian

from ..decomp import canonical, cross_unlinked
from ..duality import mw_dual, z_parameter
from ..forms import Lform, RepForm, Zform
from ..segcore import Multisegment, Segment
from ..support import ConfigError, CuspidalLabel, DimClass, SpStatus
from ..textio import ParseError, Wildcard, parse_pattern_atoms
from .verdict import Status

__all__ = ["Match", "Rule", "RuleTable", "load_rules", "parse_rules"]

VERDICTS = {"distinguished", "not_distinguished", "status"}
WILDCARD_KINDS = {"char": 1, "higher": 1, "cusp": None, "dist": None, "any": None}


def _placeholder(name: str, kind: str) -> CuspidalLabel:
    if kind == "character":
        return CuspidalLabel(name, 1, 2, name, SpStatus.DISTINGUISHED, DimClass.CHARACTER)
    if kind == "higher":
        return CuspidalLabel(name, 1, 1, name, SpStatus.NOT_DISTINGUISHED, DimClass.HIGHER)
    if kind.startswith("cusp") and kind[4:].isdigit() and int(kind[4:]) >= 2:
        return CuspidalLabel(name, int(kind[4:]), 1, name, SpStatus.UNKNOWN)
    raise ConfigError(f"unknown variable kind {kind!r}")


def _var_accepts(var: CuspidalLabel, label: CuspidalLabel) -> bool:
    if var.dim_class is not None:
        return label.group_size == 1 and label.dim_class is var.dim_class
    return label.group_size == var.group_size


@dataclass(frozen=True)
class Rule:
    id: str
    pattern: str
    atoms: tuple[RepForm | Wildcard, ...]
    verdict: str
    citation: str
    weight: int

    @property
    def variables(self) -> frozenset[CuspidalLabel]:
        out: set[CuspidalLabel] = set()
        for atom in self.atoms:
            if not isinstance(atom, Wildcard):
                out.update(atom.m.labels())
        return frozenset(out)


@dataclass(frozen=True)
class Match:
    rule: Rule
    cusp_labels: tuple[CuspidalLabel, ...]
    sub_justification: tuple[tuple[str, str], ...] = ()


def _atom_weight(atom: RepForm | Wildcard) -> int:
    if isinstance(atom, Wildcard):
        return atom.weight  # type: ignore[return-value]
    return atom.weight


def _check_wildcard(atom: RepForm | Wildcard, where: str) -> RepForm | Wildcard:
    if not isinstance(atom, Wildcard):
        return atom
    if atom.kind not in WILDCARD_KINDS:
        raise ConfigError(f"{where}: unknown wildcard <{atom.kind}>")
    fixed = WILDCARD_KINDS[atom.kind]
    if fixed is not None:
        return Wildcard(atom.kind, fixed, atom.span)
    if atom.weight is None:
        raise ConfigError(f"{where}: wildcard <{atom.kind}> needs a weight")
    return atom


def parse_rules(text: str, source: str = "<rules>") -> list[Rule]:
    variables: dict[str, CuspidalLabel] = {}
    rules: list[Rule] = []
    seen: set[str] = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        where = f"{source}:{lineno}"
        if line.startswith("@var"):
            parts = line.split()
            if len(parts) != 3 or not parts[1].startswith("$"):
                raise ConfigError(f"{where}: expected '@var $name kind'")
            variables[parts[1]] = _placeholder(parts[1], parts[2])
            continue
        fields = [f.strip() for f in line.split("|")]
        if len(fields) != 4:
            raise ConfigError(f"{where}: expected 'id | pattern | verdict | citation'")
        rid, pattern, verdict, citation = fields
        if rid in seen:
            raise ConfigError(f"{where}: duplicate rule id {rid!r}")
        if verdict not in VERDICTS:
            raise ConfigError(f"{where}: unknown verdict {verdict!r}")
        try:
            atoms = tuple(parse_pattern_atoms(pattern, variables))
        except ParseError as exc:
            raise ConfigError(f"{where}: {exc}") from None
        atoms = tuple(_check_wildcard(a, where) for a in atoms)
        seen.add(rid)
        weight = sum(_atom_weight(a) for a in atoms)
        rules.append(Rule(rid, pattern, atoms, verdict, citation, weight))
    return rules


def load_rules(path: str | None = None) -> list[Rule]:
    """Load a rule file, or the table shipped with the package."""
    if path is None:
        text = resources.files("segperiod").joinpath("data/rules.txt").read_text("utf-8")
        return parse_rules(text, "rules.txt")
    with open(path, encoding="utf-8") as fh:
        return parse_rules(fh.read(), path)


def _assignments(
    segments: Sequence[Segment], weights: Sequence[int]
) -> Iterator[list[list[Segment]]]:
    """Split ``segments`` into ordered groups with the given total weights."""
    groups: list[list[Segment]] = [[] for _ in weights]
    loads = [0] * len(weights)
    seen: set[tuple] = set()

    def rec(i: int) -> Iterator[list[list[Segment]]]:
        if i == len(segments):
            if loads == list(weights):
                key = tuple(tuple(g) for g in groups)
                if key not in seen:
                    seen.add(key)
                    yield [list(g) for g in groups]
            return
        seg = segments[i]
        for j, w in enumerate(weights):
            if loads[j] + seg.weight <= w:
                groups[j].append(seg)
                loads[j] += seg.weight
                yield from rec(i + 1)
                loads[j] -= seg.weight
                groups[j].pop()

    yield from rec(0)


def _instantiate(atom: Zform | Lform, binding: dict[CuspidalLabel, tuple]) -> Zform | Lform:
    segs = []
    for seg in atom.m:
        label, offset = binding[seg.label]
        segs.append(Segment(label, seg.start + offset, seg.length))
    return type(atom)(Multisegment(segs))


def _bind(pairs: Sequence[tuple[Zform | Lform, Zform | Lform]]) -> bool:
    """Find label/offset values for the ``$`` variables making every pair agree."""
    candidates: dict[CuspidalLabel, set[tuple[CuspidalLabel, Fraction]]] = {}
    for template, actual in pairs:
        pts = list(actual.m.support)
        for seg in template.m:
            options = {
                (p.label, p.exponent - seg.start)
                for p in pts
                if _var_accepts(seg.label, p.label)
            }
            prev = candidates.get(seg.label)
            candidates[seg.label] = options if prev is None else prev & options
    if any(not c for c in candidates.values()):
        return False
    names = list(candidates)
    targets = [z_parameter(actual) for _, actual in pairs]
    for choice in cartesian(*(sorted(candidates[v], key=repr) for v in names)):
        binding = dict(zip(names, choice))
        try:
            if all(
                z_parameter(_instantiate(t, binding)) == target
                for (t, _), target in zip(pairs, targets)
            ):
                return True
        except ValueError:
            continue
    return False


class RuleTable:
    """Ordered rules; the first match decides."""

    def __init__(self, rules: Iterable[Rule]):
        self.rules = list(rules)
        self._by_weight: dict[int, list[Rule]] = {}
        for rule in self.rules:
            self._by_weight.setdefault(rule.weight, []).append(rule)

    def for_weight(self, weight: int) -> list[Rule]:
        return self._by_weight.get(weight, [])

    def match(
        self,
        zparam: Multisegment,
        classify: Callable[[RepForm], tuple[Status, tuple[tuple[str, str], ...]]],
    ) -> Match | None:
        lparam = mw_dual(zparam)
        for rule in self.for_weight(zparam.weight):
            found = match_rule(rule, zparam, lparam, classify)
            if found is not None:
                return found
        return None

    def nearest(self, zparam: Multisegment, limit: int = 3) -> list[Rule]:
        """Rules of the right weight whose atom count is closest to the input."""
        sizes = {len(zparam), len(mw_dual(zparam))}
        pool = self.for_weight(zparam.weight)
        return sorted(pool, key=lambda r: min(abs(len(r.atoms) - s) for s in sizes))[:limit]


def _wild_ok(
    atom: Wildcard,
    form: Zform | Lform,
    classify: Callable[[RepForm], tuple[Status, tuple[tuple[str, str], ...]]],
    cusps: list[CuspidalLabel],
    subs: list[tuple[str, str]],
) -> bool:
    if form.weight != atom.weight:
        return False
    seg = form.m.segments[0] if len(form.m) == 1 else None
    is_point = seg is not None and seg.length == 1
    if atom.kind == "char":
        return is_point and seg.label.is_character  # type: ignore[union-attr]
    if atom.kind == "higher":
        return is_point and seg.label.is_higher  # type: ignore[union-attr]
    if atom.kind == "cusp":
        if is_point and seg.label.group_size == atom.weight:  # type: ignore[union-attr]
            cusps.append(seg.label)  # type: ignore[union-attr]
            return True
        return False
    if atom.kind == "dist":
        status, just = classify(form)
        if status is Status.DISTINGUISHED:
            subs.extend(just)
            return True
        return False
    return True  # any


def match_rule(
    rule: Rule,
    zparam: Multisegment,
    lparam: Multisegment,
    classify: Callable[[RepForm], tuple[Status, tuple[tuple[str, str], ...]]],
) -> Match | None:
    if rule.weight != zparam.weight:
        return None
    weights = [_atom_weight(a) for a in rule.atoms]
    for kind, param in ((Zform, zparam), (Lform, lparam)):
        for groups in _assignments(param.segments, weights):
            if any(not g for g in groups):
                continue
            msegs = [Multisegment(g) for g in groups]
            if len(msegs) > 1 and not cross_unlinked(msegs):
                continue
            forms = [canonical(kind(m)) for m in msegs]
            cusps: list[CuspidalLabel] = []
            subs: list[tuple[str, str]] = []
            pairs = []
            ok = True
            for atom, form in zip(rule.atoms, forms):
                if isinstance(atom, Wildcard):
                    if not _wild_ok(atom, form, classify, cusps, subs):
                        ok = False
                        break
                else:
                    pairs.append((atom, form))
            if ok and (not pairs or _bind(pairs)):
                return Match(rule, tuple(cusps), tuple(subs))
    return None
