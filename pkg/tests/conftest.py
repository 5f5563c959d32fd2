import json
import sys
from pathlib import Path

import pytest

from nearcontact.forces import RecipeSet, recipe_checksum
from nearcontact.quadrature import build_constant_table

DATA = Path(__file__).parent / "data"


@pytest.fixture(scope="session")
def oracle():
    return json.loads((DATA / "oracle.json").read_text())


@pytest.fixture(scope="session")
def table():
    return build_constant_table(abs_tol=1e-10)


# Ten coefficients with the right shape (series-valued, finite, eta-dependent)
# but no physical meaning; they exercise the force plumbing until the real
# transcription exists.
FIXTURE_RECIPES = [
    {"id": 1, "expression": ["*", ["eta"], ["series", "T0k1"]]},
    {"id": 2, "expression": ["*", ["q", "1/2"], ["eta"], ["series", "U0k1"]]},
    {"id": 3, "expression": ["-", ["*", ["eta"], ["eta"], ["series", "T1k2"]]]},
    {"id": 4, "expression": ["/", ["series", "T0k2"], ["series", "T0k1"]]},
    {"id": 5, "expression": ["*", ["eta"], ["series", "U0k2"]]},
    {"id": 6, "expression": ["-", ["*", ["eta"], ["series", "T0k3"]], ["q", "1/3"]]},
    {"id": 7, "expression": ["log", ["series", "U1k1"]]},
    {"id": 8, "expression": ["*", ["^", ["eta"], 2], ["series", "U1k3"]]},
    {"id": 9, "expression": ["tanh", ["*", ["eta"], ["series", "T2k1"]]]},
    {"id": 10, "expression": ["+", 0.25, ["*", ["eta"], ["series", "U2k2"]]]},
]


def fixture_mapping(recipes=FIXTURE_RECIPES):
    return {"version": "fixture", "status": "test fixture", "source": "tests",
            "recipes": recipes, "checksum": recipe_checksum(recipes)}


@pytest.fixture(scope="session")
def fixture_recipes():
    return RecipeSet.from_mapping(fixture_mapping())


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = [mod.RESULTS[n] for n in sorted(mod.RESULTS)] if mod else []
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
