import math

import pytest

from nearcontact.errors import DomainError
from nearcontact.model import ALL_SERIES, EtaMap, Family, FieldConfig, NearContactGeometry, SeriesId, eta_from_xi


def test_all_series_order_and_count():
    assert len(ALL_SERIES) == 24 == len(set(ALL_SERIES))
    assert ALL_SERIES[0].label == "T0k1" and ALL_SERIES[3].label == "T3k1"
    assert ALL_SERIES[4].label == "T0k2" and ALL_SERIES[12].label == "U0k1"
    assert ALL_SERIES[-1].label == "U3k3"


@pytest.mark.parametrize("text,label", [
    ("T0k1", "T0k1"), ("T_0k1", "T0k1"), ("U2(3)", "U2k3"), ("T1(2eta)", "T1k2"), (" u3k2 ".upper(), "U3k2"),
])
def test_parse_spellings(text, label):
    assert SeriesId.parse(text).label == label


@pytest.mark.parametrize("bad", ["T4k1", "V0k1", "T0k4", "T0k0", "", "T0"])
def test_parse_rejects(bad):
    with pytest.raises(DomainError):
        SeriesId.parse(bad)


def test_series_id_validation_and_text():
    with pytest.raises(DomainError):
        SeriesId(Family.T, 5, 1)
    with pytest.raises(DomainError):
        SeriesId("U", 0, 4)
    s = SeriesId("U", 0, 2)
    assert s.family is Family.U and s.pretty == "U0(2eta)" and str(s) == "U0k2"
    assert SeriesId.parse(s) is s


def test_eta_maps():
    assert eta_from_xi(1e-4) == pytest.approx(1e-2, rel=1e-15)
    # cosh(eta) = 1 + xi/2, so eta = sqrt(xi) to leading order
    assert eta_from_xi(1e-8, EtaMap.EXACT_ARCCOSH) == pytest.approx(1e-4, rel=1e-8)
    assert eta_from_xi(0.5, "arccosh") == pytest.approx(math.acosh(1.25), rel=1e-15)


@pytest.mark.parametrize("xi", [0.0, -1e-3, math.inf, math.nan, "abc"])
def test_eta_from_xi_domain(xi):
    with pytest.raises(DomainError):
        eta_from_xi(xi)


def test_geometry():
    g = NearContactGeometry.from_xi(1e-6)
    assert g.eta1 == pytest.approx(1e-3) and g.eta_map is EtaMap.SQRT_APPROX
    with pytest.raises(DomainError):
        NearContactGeometry(1e-3, -1.0)


def test_field_config():
    FieldConfig(1.0, 0.0, -math.pi)
    with pytest.raises(DomainError):
        FieldConfig(1.0, math.nan, 0.0)
