import json
from pathlib import Path

import pytest

from adlvdim.extended import ExtendedSemiModule, cyclic_of
from adlvdim.semimodule import SemiModule, SlopeDatum, from_type

FIXTURES = Path(__file__).parent / "fixtures"

# criterion number -> (passed, detail); filled by test_acceptance.py
ACCEPTANCE = {}


@pytest.fixture(scope="session")
def values():
    return json.loads((FIXTURES / "values.json").read_text())


@pytest.fixture
def s45():
    return SlopeDatum(4, 5)


@pytest.fixture
def s23():
    return SlopeDatum(2, 3)


@pytest.fixture
def b1(s45):
    """The semi-module of type (0,0,1,2,1): B = {-2,-1,2,5,6}."""
    return SemiModule(s45, (-2, -1, 2, 5, 6))


@pytest.fixture
def ex_noncyclic(b1):
    """phi(-1) = 0, phi = phi_max elsewhere; an extended semi-module for (0,0,0,2,2)."""
    return ExtendedSemiModule.from_values(b1, {-1: 0}, (0, 0, 0, 2, 2))


@pytest.fixture
def ex_cyclic(s45):
    return cyclic_of(from_type((0, 0, 1, 2, 1), s45))


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[n]
        terminalreporter.write_line(f"criterion {n}: {'PASS' if ok else 'FAIL'}  {detail}")
