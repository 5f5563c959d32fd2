import math

import numpy as np
import pytest

from nearcontact.errors import ConfigurationError, DomainError, IncompleteInputError
from nearcontact.model import ALL_SERIES, SeriesId
from nearcontact.sweep import (
    REFERENCE_ERRORS,
    ErrorRow,
    SweepConfig,
    agrees_to_sig_figs,
    categorize,
    category_of,
    check_reference,
    emit_reports,
    fmt,
    run_error_sweep,
    xi_grid,
)


@pytest.fixture(scope="module")
def small():
    return run_error_sweep(SweepConfig(xi_min=1e-4, xi_max=1e-2, points=9))


def test_config_validation():
    for bad in ({"xi_min": 1e-2, "xi_max": 1e-3}, {"points": 1}, {"points": 2.5}, {"rel_tol": 0.0},
                {"workers": 0}, {"xi_min": -1.0}):
        with pytest.raises(DomainError):
            SweepConfig(**bad)
    with pytest.raises(ConfigurationError):
        SweepConfig(profile="nope")
    with pytest.raises(ConfigurationError):
        SweepConfig.from_mapping({"pionts": 5})


def test_config_files(tmp_path):
    t = tmp_path / "s.toml"
    t.write_text('[sweep]\nxi_min = 1e-5\npoints = 7\nseries_filter = ["T0k1", "U2(3)"]\n'
                 'fields = [{alpha = 1.0, beta = 0.5, theta = 0.0}]\n')
    c = SweepConfig.load(t)
    assert c.points == 7 and [s.label for s in c.series] == ["T0k1", "U2k3"]
    assert c.field_list[0].beta == 0.5
    j = tmp_path / "s.json"
    j.write_text('{"points": 4, "profile": "exact"}')
    assert SweepConfig.load(j).profile == "exact"
    bad = tmp_path / "bad.toml"
    bad.write_text("points = ")
    with pytest.raises(ConfigurationError):
        SweepConfig.load(bad)
    with pytest.raises(ConfigurationError):
        SweepConfig.load(tmp_path / "missing.toml")


def test_grid():
    g = xi_grid(SweepConfig())
    assert g.size == 101 and g[0] == 1e-6 and g[-1] == 1e-2
    assert np.any(g == 1e-3) and np.all(np.diff(g) > 0)
    g = xi_grid(SweepConfig(xi_min=1e-3, xi_max=1e-2, points=2))
    assert list(g) == [1e-3, 1e-2]
    # 1e-3 already on the grid (to rounding) is not appended twice
    assert xi_grid(SweepConfig(xi_min=1e-4, xi_max=1e-2, points=9)).size == 9


def test_rows_sorted_and_complete(small):
    labels = [r.series.label for r in small.rows]
    assert len(small.rows) == 24 * 9 and not small.failures
    order = [(ALL_SERIES.index(r.series), r.xi) for r in small.rows]
    assert order == sorted(order)
    assert labels[0] == "T0k1" and labels[-1] == "U3k3"
    assert all(r.pct_error >= 0.0 for r in small.rows)


def test_parallel_matches_serial(small):
    par = run_error_sweep(SweepConfig(xi_min=1e-4, xi_max=1e-2, points=9, workers=4))
    assert par.rows == small.rows


def test_spot_values(small):
    assert small.at("T0k1", 1e-2).pct_error == pytest.approx(1.28e-3, rel=0.04)
    assert small.at("T2k1", 1e-2).pct_error == pytest.approx(0.444, rel=0.02)
    assert small.at("U0k2", 1e-2).pct_error == pytest.approx(1.62, rel=0.02)
    with pytest.raises(IncompleteInputError):
        small.at("T0k1", 5e-3)


def test_categories(small):
    cats = categorize(small)
    assert cats[SeriesId.parse("T0k1")] == 1
    assert cats[SeriesId.parse("U1k1")] == 2
    assert cats[SeriesId.parse("U0k3")] == 3
    assert {s.label: c for s, c in cats.items()} == {k: v[2] for k, v in REFERENCE_ERRORS.items()}


def test_categorize_incomplete(small):
    with pytest.raises(IncompleteInputError, match="U3k3"):
        categorize([r for r in small.rows if r.series.label != "U3k3"])


@pytest.mark.parametrize("pct,cat", [(0.0, 1), (0.0999, 1), (0.1, 2), (0.5, 2), (0.5001, 3), (7.0, 3)])
def test_thresholds(pct, cat):
    assert category_of(pct) == cat


def test_sig_figs():
    assert agrees_to_sig_figs(1.284e-3, 1.28e-3) and agrees_to_sig_figs(0.4449, 0.444)
    assert not agrees_to_sig_figs(0.83, 0.555)
    assert agrees_to_sig_figs(0.0, 0.0) and not agrees_to_sig_figs(1e-9, 0.0)


def test_fmt():
    assert fmt(1 / 3) == "0.333333333" and fmt(7) == "7" and fmt(math.nan) == "nan"
    assert fmt(np.int64(3)) == "3" and fmt(1e-20) == "1e-20"


def test_emit(tmp_path, small, table):
    out = emit_reports(small, categorize(small), table, tmp_path)
    plots = sorted(p.name for p in (tmp_path / "plots").iterdir())
    assert len([p for p in plots if p.endswith(".csv")]) == 24
    assert len([p for p in plots if p.endswith(".py")]) == 24
    assert sorted(p.name for p in tmp_path.glob("*.csv")) == ["categories.csv", "constants.csv", "errors.csv"]
    errors = (tmp_path / "errors.csv").read_bytes()
    assert b"\r" not in errors and errors.count(b"\n") == 1 + len(small.rows)
    assert "forces" not in out
    compile((tmp_path / "plots" / "plot_T0k1.py").read_text(), "plot_T0k1.py", "exec")


def test_emit_forces(tmp_path, small, table):
    from nearcontact.sweep import ForceRow
    rows = [ForceRow(1e-3, 1.0, b, 0.7, c, 1.0, 1.0, 0.0) for b in (0.1, 1, 10) for c in ("fz", "fx")]
    emit_reports(small, categorize(small), table, tmp_path, rows)
    assert (tmp_path / "forces.csv").read_text().count("\n") == 7


def test_emit_unwritable(tmp_path, small, table):
    blocker = tmp_path / "file"
    blocker.write_text("")
    with pytest.raises(OSError, match="file"):
        emit_reports(small, categorize(small), table, blocker / "out")


def test_force_sweep_row_count(fixture_recipes):
    from nearcontact.sweep import run_force_sweep
    cfg = SweepConfig(xi_min=1e-4, xi_max=1e-2, points=5)
    rows = run_force_sweep(cfg, fixture_recipes)
    assert len(rows) == 3 * 5 * 2


def test_reference_check_shape(small):
    checks = check_reference(small)
    assert len(checks) == 48
    assert checks[0].series == "T0k1" and checks[0].xi == 1e-3


def test_error_growth():
    # |error| grows with xi once the signed error has stopped changing sign
    res = run_error_sweep(SweepConfig(xi_min=1e-4, xi_max=1e-2, points=40, profile="exact"))
    by = {}
    for r in res.rows:
        by.setdefault(r.series.label, []).append(r)
    for label, rows in by.items():
        signed = [r.asymptotic - r.direct for r in rows]
        start = max((i + 1 for i in range(len(signed) - 1) if signed[i] * signed[i + 1] < 0), default=0)
        pct = [r.pct_error for r in rows[start:]]
        assert all(b - a >= -1e-5 for a, b in zip(pct, pct[1:])), label


def test_row_failure_is_logged(monkeypatch, caplog):
    import nearcontact.sweep as sw
    from nearcontact.errors import ConvergenceError

    real = sw.eval_series_direct

    def flaky(sid, eta, tol):
        if sid.label == "T1k1" and eta > 0.05:
            raise ConvergenceError("boom")
        return real(sid, eta, tol)

    monkeypatch.setattr(sw, "eval_series_direct", flaky)
    res = run_error_sweep(SweepConfig(xi_min=1e-3, xi_max=1e-2, points=2))
    assert res.failures == [("T1k1", 1e-2, "boom")]
    assert len(res.rows) == 47 and "boom" in caplog.text


def test_error_row_type():
    r = ErrorRow(SeriesId.parse("T0k1"), 1e-3, 0.03, 1.0, 1.0, 0.0, 3)
    assert r.series.label == "T0k1"
