"""Geometry, drive parameters and series identifiers for two equal spheres.

Separation ``xi = 2s/(r1 + r2)``.  Near contact the bispherical coordinate of
either sphere is close to ``sqrt(xi)``; the exact equal-sphere relation is
``cosh(eta) = 1 + xi/2``.
"""

from __future__ import annotations

import enum
import math
import re
from dataclasses import dataclass

from .errors import DomainError

__all__ = [
    "EtaMap",
    "Family",
    "SeriesId",
    "ALL_SERIES",
    "NearContactGeometry",
    "FieldConfig",
    "eta_from_xi",
]


class EtaMap(str, enum.Enum):
    SQRT_APPROX = "sqrt"
    EXACT_ARCCOSH = "arccosh"


class Family(str, enum.Enum):
    T = "T"
    U = "U"


_ID_RE = re.compile(r"^\s*([TU])\s*_?\s*([0-3])\s*[kK(]?\s*([123])\s*(?:eta\)?|\))?\s*$")


@dataclass(frozen=True, order=True)
class SeriesId:
    """One of the 24 series: family T/U, moment m, argument p = k*eta."""

    family: Family
    moment: int
    multiplier: int

    def __post_init__(self):
        object.__setattr__(self, "family", Family(self.family))
        if self.moment not in (0, 1, 2, 3):
            raise DomainError(f"moment must be 0..3, got {self.moment!r}")
        if self.multiplier not in (1, 2, 3):
            raise DomainError(f"multiplier must be 1..3, got {self.multiplier!r}")

    @property
    def label(self) -> str:
        """Compact key, e.g. ``T0k1``."""
        return f"{self.family.value}{self.moment}k{self.multiplier}"

    @property
    def pretty(self) -> str:
        k = "" if self.multiplier == 1 else str(self.multiplier)
        return f"{self.family.value}{self.moment}({k}eta)"

    @classmethod
    def parse(cls, text) -> "SeriesId":
        """Accept ``T0k1``, ``T_0k1``, ``U2(3)`` and similar spellings."""
        if isinstance(text, SeriesId):
            return text
        m = _ID_RE.match(str(text))
        if not m:
            raise DomainError(f"unrecognised series id {text!r}")
        return cls(Family(m.group(1)), int(m.group(2)), int(m.group(3)))

    def __str__(self):
        return self.label


# T block first, then U; within a block ordered by k, then m (the layout of the
# closed-form tables).
ALL_SERIES: tuple[SeriesId, ...] = tuple(
    SeriesId(fam, m, k) for fam in (Family.T, Family.U) for k in (1, 2, 3) for m in range(4)
)


def eta_from_xi(xi: float, policy: EtaMap = EtaMap.SQRT_APPROX) -> float:
    """Bispherical parameter of either sphere for separation ``xi``."""
    try:
        xi = float(xi)
    except (TypeError, ValueError) as exc:
        raise DomainError(f"xi must be a real number, got {xi!r}") from exc
    if not math.isfinite(xi) or xi <= 0.0:
        raise DomainError(f"xi must be finite and > 0, got {xi!r}")
    policy = EtaMap(policy)
    if policy is EtaMap.SQRT_APPROX:
        return math.sqrt(xi)
    # acosh(1 + x) = log1p(x + sqrt(x(x + 2))), stable for small x
    half = 0.5 * xi
    return math.log1p(half + math.sqrt(half * (half + 2.0)))


@dataclass(frozen=True)
class NearContactGeometry:
    xi: float
    eta1: float
    eta_map: EtaMap = EtaMap.SQRT_APPROX

    def __post_init__(self):
        if not (math.isfinite(self.xi) and self.xi > 0):
            raise DomainError(f"xi must be finite and > 0, got {self.xi!r}")
        if not (math.isfinite(self.eta1) and self.eta1 > 0):
            raise DomainError(f"eta1 must be finite and > 0, got {self.eta1!r}")
        object.__setattr__(self, "eta_map", EtaMap(self.eta_map))

    @classmethod
    def from_xi(cls, xi: float, policy: EtaMap = EtaMap.SQRT_APPROX) -> "NearContactGeometry":
        return cls(float(xi), eta_from_xi(xi, policy), EtaMap(policy))


@dataclass(frozen=True)
class FieldConfig:
    """Charge ratio ``alpha = q1/q2``, field ratio ``beta``, field angle ``theta``
    (radians from the line of centres; any finite angle is accepted)."""

    alpha: float
    beta: float
    theta: float

    def __post_init__(self):
        for name in ("alpha", "beta", "theta"):
            v = getattr(self, name)
            if not math.isfinite(v):
                raise DomainError(f"{name} must be finite, got {v!r}")
