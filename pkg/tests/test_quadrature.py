import json
import math

import numpy as np
import pytest

from nearcontact.errors import ConfigurationError, DomainError
from nearcontact.kernels import AGGREGATES, INTEGRALS
from nearcontact.quadrature import (
    M_SWITCH,
    PRINT_ANOMALIES,
    build_constant_table,
    eval_constant,
    printed_half_unit,
    subtracted_integrand,
    subtracted_series,
)


@pytest.mark.parametrize("label", sorted(INTEGRALS))
def test_constant_matches_oracle(label, table, oracle):
    assert table[label].computed == pytest.approx(float(oracle["constants"][label]), abs=1e-9)


@pytest.mark.parametrize("label", sorted(AGGREGATES))
def test_aggregate_is_sum_of_parts(label, table):
    parts = [table[p].computed for p in AGGREGATES[label].parts]
    assert abs(table[label].computed - math.fsum(parts)) <= 1e-12


@pytest.mark.parametrize("label", [lab for lab, s in sorted(INTEGRALS.items()) if s.domain != "1-inf"])
def test_branches_agree_at_switch(label):
    m = np.array([0.5 * M_SWITCH, M_SWITCH, 1.5 * M_SWITCH])
    s = subtracted_integrand(label, m, "series")
    d = subtracted_integrand(label, m, "direct")
    scale = max(1.0, float(np.max(np.abs(d))))
    assert np.max(np.abs(s - d)) <= 1e-10 * scale


def test_no_leftover_poles():
    for label, spec in INTEGRALS.items():
        if spec.domain == "1-inf":
            continue
        _, singular = subtracted_series(label)
        assert all(abs(v) < 1e-8 for v in singular.values()), label


def test_auto_branch_mixes():
    m = np.array([0.01, 0.05, 0.5, 2.0])
    a = subtracted_integrand("C_13", m)
    s = subtracted_integrand("C_13", m[:2], "series")
    d = subtracted_integrand("C_13", m[2:], "direct")
    np.testing.assert_allclose(a, np.concatenate([s, d]), rtol=0, atol=0)


@pytest.mark.parametrize("tol", [1e-6, 1e-8, 1e-11])
def test_tolerance_is_met(tol, oracle):
    for label in ("C_13", "C_246", "C_173"):
        assert abs(eval_constant(label, tol) - float(oracle["constants"][label])) <= tol


def test_result_independent_of_switch(oracle):
    for label in ("C_25", "C_76", "C_169"):
        for ms in (0.05, 0.2):
            assert eval_constant(label, 1e-10, ms) == pytest.approx(float(oracle["constants"][label]), abs=1e-9)


def test_known_values(table):
    assert table["K_11"].computed == pytest.approx(-1 / 24, abs=1e-12)
    assert table["K_11"].rational == "-1/24"
    assert abs(table["K_43"].computed) < 1e-10
    assert table["C_37"].rational == "1/144"


def test_anomalies_are_flagged(table):
    for label, note in PRINT_ANOMALIES.items():
        assert table[label].note == note
    strict = {e.label for e in table.failures()}
    assert set(PRINT_ANOMALIES) - {"K_43"} <= strict
    assert table.failures(printed_rounding=True, include_anomalies=False) == []


def test_printed_half_unit():
    assert printed_half_unit(10.9156) == pytest.approx(5e-5)
    assert printed_half_unit(-0.0416667) == pytest.approx(5e-8)


def test_sources_and_overrides(table):
    assert table.value("C_13") == table["C_13"].computed
    assert table.value("C_13", "printed") == table["C_13"].printed
    p = table.with_source("printed")
    assert p.value("C_13") == table["C_13"].printed
    with pytest.raises(ConfigurationError):
        table.with_source("nonsense")
    with pytest.raises(ConfigurationError):
        table["C_999"]


def test_json_round_trip(table):
    data = json.loads(table.to_json())
    assert len(data["entries"]) == len(INTEGRALS) + len(AGGREGATES)
    labels = [e["label"] for e in data["entries"]]
    assert labels.index("C_11") < labels.index("K_11") < labels.index("C_21")


def test_errors():
    with pytest.raises(DomainError):
        eval_constant("C_13", 1e-3)
    with pytest.raises(ConfigurationError):
        eval_constant("C_000")


def test_full_table_runtime():
    t = build_constant_table(1e-9)
    assert t.elapsed < 30.0
