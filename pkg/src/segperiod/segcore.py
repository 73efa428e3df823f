"""Segments and multisegments of cuspidal labels.

Exponents are exact rationals in units of ``nu``.  A segment ``[a, b]_rho``
runs through ``a, a + s, ..., b`` where ``s`` is the label's step.
"""

from __future__ import annotations

import math
from collections import Counter
from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import TYPE_CHECKING, TypeVar, Union

from .support import CuspidalLabel

if TYPE_CHECKING:
    from .support import Registry

__all__ = [
    "CuspidalPoint",
    "Segment",
    "Multisegment",
    "Rational",
    "as_fraction",
    "contragredient",
    "intersection",
    "lattice_class",
    "linked",
    "precedes",
    "same_lattice",
    "twist",
    "union",
]

Rational = Union[int, Fraction, str]


def as_fraction(x: Rational) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("floating-point exponents are not accepted")
    return Fraction(x)


@dataclass(frozen=True)
class CuspidalPoint:
    """The twisted cuspidal ``label * nu^exponent``."""

    label: CuspidalLabel
    exponent: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "exponent", as_fraction(self.exponent))

    def sort_key(self) -> tuple[str, Fraction]:
        return (self.label.id, self.exponent)


@dataclass(frozen=True)
class Segment:
    """``(label, start, length)`` with points spaced by ``label.step``."""

    label: CuspidalLabel
    start: Fraction
    length: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "start", as_fraction(self.start))
        if self.length < 1:
            raise ValueError(f"segment length must be positive, got {self.length}")

    @classmethod
    def from_ends(cls, label: CuspidalLabel, start: Rational, end: Rational) -> Segment:
        a, b = as_fraction(start), as_fraction(end)
        span = (b - a) / label.step
        if span.denominator != 1 or span < 0:
            raise ValueError(f"[{a}, {b}] is not a segment on a step-{label.step} lattice")
        return cls(label, a, int(span) + 1)

    @classmethod
    def point(cls, p: CuspidalPoint) -> Segment:
        return cls(p.label, p.exponent, 1)

    @property
    def step(self) -> int:
        return self.label.step

    @property
    def end(self) -> Fraction:
        return self.start + (self.length - 1) * self.label.step

    @property
    def weight(self) -> int:
        return self.length * self.label.group_size

    def exponents(self) -> list[Fraction]:
        return [self.start + i * self.label.step for i in range(self.length)]

    def points(self) -> list[CuspidalPoint]:
        return [CuspidalPoint(self.label, e) for e in self.exponents()]

    def sort_key(self) -> tuple[str, Fraction, Fraction]:
        # Descending ends: the order in which no segment precedes a later one.
        return (self.label.id, -self.end, -self.start)


def lattice_class(label: CuspidalLabel, exponent: Fraction) -> tuple[str, Fraction]:
    """Canonical representative of the lattice ``exponent + step * Z``."""
    return (label.id, exponent - label.step * math.floor(exponent / label.step))


def same_lattice(p: CuspidalPoint, q: CuspidalPoint) -> bool:
    if p.label != q.label:
        return False
    return ((p.exponent - q.exponent) / p.label.step).denominator == 1


def _segments_on_same_lattice(d1: Segment, d2: Segment) -> bool:
    return d1.label == d2.label and ((d1.start - d2.start) / d1.label.step).denominator == 1


def precedes(d1: Segment, d2: Segment) -> bool:
    """True when ``d1 u d2`` is a segment and ``d2`` sits strictly to the right."""
    if not _segments_on_same_lattice(d1, d2):
        return False
    return d2.start > d1.start and d2.end > d1.end and d2.start <= d1.end + d1.step


def linked(d1: Segment, d2: Segment) -> bool:
    return precedes(d1, d2) or precedes(d2, d1)


def union(d1: Segment, d2: Segment) -> Segment:
    if not linked(d1, d2):
        raise ValueError("union is only defined for linked segments")
    return Segment.from_ends(d1.label, min(d1.start, d2.start), max(d1.end, d2.end))


def intersection(d1: Segment, d2: Segment) -> Segment | None:
    """Overlap of two linked segments; ``None`` when they are juxtaposed."""
    if not linked(d1, d2):
        raise ValueError("intersection is only defined for linked segments")
    a, b = max(d1.start, d2.start), min(d1.end, d2.end)
    if a > b:
        return None
    return Segment.from_ends(d1.label, a, b)


class Multisegment:
    """A finite multiset of segments, stored in canonical order."""

    def __init__(self, segments: Iterable[Segment] = ()):
        self.segments: tuple[Segment, ...] = tuple(sorted(segments, key=Segment.sort_key))
        self._hash = hash(self.segments)

    @classmethod
    def of_points(cls, points: Iterable[CuspidalPoint]) -> Multisegment:
        return cls(Segment.point(p) for p in points)

    def __iter__(self) -> Iterator[Segment]:
        return iter(self.segments)

    def __len__(self) -> int:
        return len(self.segments)

    def __bool__(self) -> bool:
        return bool(self.segments)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Multisegment):
            return NotImplemented
        return self._hash == other._hash and self.segments == other.segments

    def __hash__(self) -> int:
        return self._hash

    def __add__(self, other: Multisegment) -> Multisegment:
        return Multisegment(self.segments + other.segments)

    def __repr__(self) -> str:
        body = ", ".join(
            f"{s.label.id}[{s.start}..{s.end}]" if s.length > 1 else f"{s.label.id}[{s.start}]"
            for s in self.segments
        )
        return f"Multisegment({body})"

    @cached_property
    def weight(self) -> int:
        return sum(s.weight for s in self.segments)

    @cached_property
    def support(self) -> Counter[CuspidalPoint]:
        return Counter(p for s in self.segments for p in s.points())

    def labels(self) -> set[CuspidalLabel]:
        return {s.label for s in self.segments}

    def is_pairwise_unlinked(self) -> bool:
        segs = self.segments
        return not any(
            linked(segs[i], segs[j]) for i in range(len(segs)) for j in range(i + 1, len(segs))
        )

    def replace(self, remove: Iterable[Segment], add: Iterable[Segment]) -> Multisegment:
        rest = list(self.segments)
        for s in remove:
            rest.remove(s)
        return Multisegment([*rest, *add])


T = TypeVar("T", CuspidalPoint, Segment, Multisegment)


def twist(x: T, e: Rational) -> T:
    """Shift every exponent by ``e``."""
    e = as_fraction(e)
    if isinstance(x, CuspidalPoint):
        return CuspidalPoint(x.label, x.exponent + e)
    if isinstance(x, Segment):
        return Segment(x.label, x.start + e, x.length)
    if isinstance(x, Multisegment):
        return Multisegment(Segment(s.label, s.start + e, s.length) for s in x)
    raise TypeError(f"cannot twist {type(x).__name__}")


def contragredient(x: T, registry: Registry | None = None) -> T:
    """``[a, b]_rho -> [-b, -a]_{dual rho}``.

    ``registry`` resolves dual labels; without one every label is treated as
    self-dual and a non-self-dual label raises ``ValueError``.
    """

    def dual(label: CuspidalLabel) -> CuspidalLabel:
        if label.is_self_dual:
            return label
        if registry is None:
            raise ValueError(f"label {label.id!r} is not self-dual; a registry is required")
        return registry[label.dual_id]

    if isinstance(x, CuspidalPoint):
        return CuspidalPoint(dual(x.label), -x.exponent)
    if isinstance(x, Segment):
        return Segment(dual(x.label), -x.end, x.length)
    if isinstance(x, Multisegment):
        return Multisegment(Segment(dual(s.label), -s.end, s.length) for s in x)
    raise TypeError(f"cannot take the contragredient of {type(x).__name__}")
