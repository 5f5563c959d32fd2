import pytest

from nearcontact.kernels import AGGREGATES, INTEGRALS, KERNELS, SERIES_CONSTANTS
from nearcontact.quadrature import NUMPY_BACKEND, laurent_coefficients

CORRECTED = {"T1k1.f3", "T2k1.f4", "T2k2.f3", "T3k2.f5", "T3k3.f5", "U2k1.g4", "U2k2.g4"}


def test_registry_sizes():
    assert len(KERNELS) == 72
    assert all(spec.kernel in KERNELS for spec in INTEGRALS.values())
    assert all(p in INTEGRALS for agg in AGGREGATES.values() for p in agg.parts)


@pytest.mark.parametrize("name", sorted(KERNELS))
def test_kernel_at_one(name, oracle):
    assert KERNELS[name](1.0, NUMPY_BACKEND) == pytest.approx(float(oracle["kernels_at_1"][name]), rel=1e-13)


def test_corrected_kernels_keep_printed_text():
    got = {n for n, k in KERNELS.items() if k.corrected}
    assert got == CORRECTED
    for n in got:
        assert KERNELS[n].printed and KERNELS[n].printed != KERNELS[n].text


@pytest.mark.parametrize("label", sorted(INTEGRALS))
def test_counterterms_remove_the_pole(label):
    # for integrals touching m = 0 the counterterms must equal the singular
    # Laurent part exactly, or the integral diverges
    spec = INTEGRALS[label]
    if spec.domain == "1-inf":
        return
    c = laurent_coefficients(spec.kernel)
    want = {6 - j: c[j] for j in range(6) if abs(c[j]) > 1e-9}
    got = {p: float(q) for q, p in spec.counterterms if p > 0}
    for p in set(want) | set(got):
        assert got.get(p, 0.0) == pytest.approx(want.get(p, 0.0), abs=1e-9), (label, p)


def test_every_series_has_its_constants():
    assert len(SERIES_CONSTANTS) == 24
    for labels in SERIES_CONSTANTS.values():
        for lab in labels:
            assert lab in INTEGRALS or lab in AGGREGATES
