from __future__ import annotations

import re

import pytest

from segperiod.distinction import Classifier
from segperiod.fixtures import fixture_registry
from segperiod.support import Registry
from segperiod.textio import parse_expr


@pytest.fixture(scope="session")
def freg() -> Registry:
    return fixture_registry()


@pytest.fixture(scope="session")
def clf(freg: Registry) -> Classifier:
    return Classifier(freg)


@pytest.fixture(scope="session")
def parse(freg: Registry):
    return lambda text: parse_expr(text, freg)



# -- acceptance summary --------------------------------------------------------

_ACCEPTANCE: dict[str, list] = {}
_CRITERION = re.compile(r"test_acceptance\.py::test_(A\d+)_(\w+)")


def pytest_runtest_logreport(report: pytest.TestReport) -> None:
    found = _CRITERION.search(report.nodeid)
    if not found or (report.when != "call" and report.passed):
        return
    key, name = found.groups()
    entry = _ACCEPTANCE.setdefault(key, [name.replace("_", " "), True])
    entry[1] = entry[1] and report.passed


def pytest_terminal_summary(terminalreporter) -> None:
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(_ACCEPTANCE, key=lambda k: int(k[1:])):
        name, ok = _ACCEPTANCE[key]
        terminalreporter.write_line(f"{key:<4} {'PASS' if ok else 'FAIL'}  {name}")
