import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nearcontact.errors import ConvergenceError, DomainError
from nearcontact.model import ALL_SERIES, SeriesId
from nearcontact.series import Method, eval_series_direct, ratio_bound, series_term, series_terms

labels = [s.label for s in ALL_SERIES]


@pytest.mark.parametrize("label", labels)
def test_against_oracle(label, oracle):
    for eta, ref in oracle["series"][label].items():
        r = eval_series_direct(label, float(eta), rel_tol=1e-14)
        assert r.method is Method.DIRECT and r.in_window
        assert r.value == pytest.approx(float(ref), rel=3e-14)


@pytest.mark.parametrize("rel_tol", [1e-6, 1e-10, 1e-13])
def test_tail_bound_is_honest(oracle, rel_tol):
    for label in ("T3k3", "U0k1", "T0k2"):
        ref = float(oracle["series"][label]["0.01"])
        r = eval_series_direct(label, 0.01, rel_tol)
        assert r.tail_bound <= rel_tol * r.value
        # truncation error is positive (all terms positive) and within the bound
        assert 0.0 <= ref - r.value <= r.tail_bound * (1 + 1e-9) + 1e-15 * ref


def test_terms_scalar_and_vector_agree():
    for sid in ALL_SERIES[::5]:
        v = series_terms(sid, 0.07, 0, 40)
        s = np.array([series_term(sid, 0.07, n) for n in range(40)])
        np.testing.assert_allclose(v, s, rtol=1e-14)


def test_no_overflow_at_large_eta():
    r = eval_series_direct("T3k3", 50.0)
    assert math.isfinite(r.value) and r.value > 0.0
    # first term dominates completely
    assert r.value == pytest.approx(series_term("T3k3", 50.0, 0), rel=1e-12)


def test_small_eta_term_count():
    r = eval_series_direct("T0k1", 1e-3, 1e-10)
    assert 1_000 < r.terms_used < 100_000


@pytest.mark.parametrize("bad", [0.0, -1.0, math.nan, math.inf])
def test_domain(bad):
    with pytest.raises(DomainError):
        eval_series_direct("T0k1", bad)


@pytest.mark.parametrize("tol", [0.0, 0.1, -1e-9])
def test_rel_tol_domain(tol):
    with pytest.raises(DomainError):
        eval_series_direct("T0k1", 0.1, tol)


def test_budget_exhaustion_carries_partial():
    with pytest.raises(ConvergenceError) as exc:
        eval_series_direct("T0k1", 1e-4, 1e-12, max_terms=500)
    assert exc.value.partial > 0 and exc.value.diagnostics["terms"] == 500


def test_series_term_index_domain():
    with pytest.raises(DomainError):
        series_term("T0k1", 0.1, -1)
    with pytest.raises(DomainError):
        series_term("T0k1", 0.1, 1.5)


@settings(max_examples=60, deadline=None)
@given(idx=st.integers(0, 23), eta=st.floats(1e-3, 2.0), n=st.integers(0, 5000))
def test_ratio_bound_holds(idx, eta, n):
    sid = ALL_SERIES[idx]
    t0, t1 = series_term(sid, eta, n), series_term(sid, eta, n + 1)
    if t0 > 0.0:
        assert t1 / t0 <= ratio_bound(sid, eta, n) * (1 + 1e-12)


@settings(max_examples=40, deadline=None)
@given(idx=st.integers(0, 23), eta=st.floats(5e-3, 1.0))
def test_monotone_in_eta(idx, eta):
    # every summand decreases with eta, so the sum does too
    sid = ALL_SERIES[idx]
    a = eval_series_direct(sid, eta, 1e-13).value
    b = eval_series_direct(sid, eta * 1.01, 1e-13).value
    assert b < a


@settings(max_examples=30, deadline=None)
@given(m=st.integers(0, 3), eta=st.floats(5e-3, 1.0))
def test_u_below_t(m, eta):
    # (e^{2(a+2)eta} - 1) > (e^{2a eta} - 1) termwise
    for k in (1, 2, 3):
        t = eval_series_direct(SeriesId("T", m, k), eta, 1e-13).value
        u = eval_series_direct(SeriesId("U", m, k), eta, 1e-13).value
        assert u < t
