"""Verdict fixtures shipped with the package."""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources

from .support import ConfigError, Registry, parse_registry_text

__all__ = ["Fixture", "fixture_registry", "load_fixtures", "parse_fixtures"]

KINDS = {"irreducible", "induced"}
EXPECTED = {"distinguished", "not_distinguished", "inconclusive"}


@dataclass(frozen=True)
class Fixture:
    kind: str
    expr: str
    expected: str
    citation: str
    line: int


def _data(name: str) -> str:
    return resources.files("segperiod").joinpath(f"data/{name}").read_text("utf-8")


def fixture_registry() -> Registry:
    """The label registry the fixture expressions are written against."""
    return parse_registry_text(_data("fixture_support.toml"))


def parse_fixtures(text: str, source: str = "<fixtures>") -> list[Fixture]:
    out: list[Fixture] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = [f.strip() for f in line.split("|")]
        if len(fields) != 4:
            raise ConfigError(f"{source}:{lineno}: expected 'kind | expr | expected | citation'")
        kind, expr, expected, citation = fields
        if kind not in KINDS:
            raise ConfigError(f"{source}:{lineno}: unknown kind {kind!r}")
        if expected not in EXPECTED:
            raise ConfigError(f"{source}:{lineno}: unknown verdict {expected!r}")
        out.append(Fixture(kind, expr, expected, citation, lineno))
    return out


def load_fixtures() -> list[Fixture]:
    return parse_fixtures(_data("fixtures.txt"), "fixtures.txt")
