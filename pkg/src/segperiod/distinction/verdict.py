"""Verdicts and three-valued answers."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

__all__ = ["Status", "TriBool", "Verdict"]


class Status(str, Enum):
    DISTINGUISHED = "distinguished"
    NOT_DISTINGUISHED = "not_distinguished"
    INCONCLUSIVE = "inconclusive"


class TriBool(str, Enum):
    """Answer to a Hom/Ext question that may not be computable."""

    YES = "yes"
    NO = "no"
    UNKNOWN = "unknown"

    @classmethod
    def of(cls, value: bool) -> TriBool:
        return cls.YES if value else cls.NO

    def __and__(self, other: TriBool) -> TriBool:  # type: ignore[override]
        if self is TriBool.NO or other is TriBool.NO:
            return TriBool.NO
        if self is TriBool.YES and other is TriBool.YES:
            return TriBool.YES
        return TriBool.UNKNOWN

    def __or__(self, other: TriBool) -> TriBool:  # type: ignore[override]
        if self is TriBool.YES or other is TriBool.YES:
            return TriBool.YES
        if self is TriBool.NO and other is TriBool.NO:
            return TriBool.NO
        return TriBool.UNKNOWN

    def to_status(self) -> Status:
        return {
            TriBool.YES: Status.DISTINGUISHED,
            TriBool.NO: Status.NOT_DISTINGUISHED,
            TriBool.UNKNOWN: Status.INCONCLUSIVE,
        }[self]

    @classmethod
    def from_status(cls, status: Status) -> TriBool:
        return {
            Status.DISTINGUISHED: cls.YES,
            Status.NOT_DISTINGUISHED: cls.NO,
            Status.INCONCLUSIVE: cls.UNKNOWN,
        }[status]


@dataclass(frozen=True)
class Verdict:
    """Classification outcome with the ordered rules that produced it.

    ``notes`` carries free-text diagnostics (nearest rules, orbit details).
    """

    status: Status
    justification: tuple[tuple[str, str], ...] = ()
    notes: tuple[str, ...] = field(default=(), compare=False)

    @property
    def rule_ids(self) -> list[str]:
        return [rid for rid, _ in self.justification]
