"""Counterterm-subtracted integrals of the outer-expansion kernels.

Each integral is split at ``m_switch``.  Below it the subtracted integrand is
replaced by its Maclaurin series (the singular monomials cancel exactly), which
is integrated term by term.  Above it the integrand is evaluated directly and
handed to QUADPACK.  Semi-infinite ranges stop at ``m_max`` where the kernel
is below 1e-16; the counterterm tails beyond ``m_max`` are added analytically.

The Laurent coefficients of a kernel are obtained once from a discrete Cauchy
integral of ``m**6 * f(m)`` on a circle of radius 1/2.  Every kernel has poles
only at ``m = i*pi*j/2``, so the circle lies well inside the disc of
analyticity and the trapezoid rule converges geometrically.
"""

from __future__ import annotations

import json
import math
import time
import warnings
from dataclasses import asdict, dataclass, field
from decimal import Decimal
from fractions import Fraction
from functools import lru_cache

import numpy as np
from scipy import integrate

from .errors import ConfigurationError, ConvergenceError, DomainError
from .kernels import AGGREGATES, INTEGRALS, KERNELS, IntegrandSpec

__all__ = [
    "NUMPY_BACKEND",
    "M_SWITCH",
    "laurent_coefficients",
    "subtracted_series",
    "subtracted_integrand",
    "eval_constant",
    "ConstantEntry",
    "ConstantTable",
    "build_constant_table",
    "PRINT_ANOMALIES",
    "printed_half_unit",
]


class _Backend:
    def __init__(self, exp, expm1):
        self.exp = exp
        self.expm1 = expm1


NUMPY_BACKEND = _Backend(np.exp, np.expm1)

M_SWITCH = 0.1
KERNEL_FLOOR = 1e-16  # neglected tail ~ f(m_max)/2, far below the smallest abs_tol
_M_CAP = 28.0  # (e^{4m} - 1)^6 overflows a double just past m = 29.5
_POLE = 6  # every kernel has at most (e^{4m}-1)^6 in the denominator
_NCOEF = 40
_RADIUS = 0.5
_NODES = 256

# Printed values known to disagree with their own definitions; see
# build_constant_table.  label -> short reason.
PRINT_ANOMALIES: dict[str, str] = {
    "C_37": "integral is exactly 1/144; printed value is off in the third digit",
    "K_43": "printed 1.9893e-9 for a sum whose parts are printed as +/-0.00322628",
    "C_48": "integral is exactly -1/192; printed value is off in the third digit",
    "C_93": "integral is 1/48 (as used in the closed form); printed with the wrong sign",
    "C_105": "integral is -1/96 (as used in the closed form); printed as +1/32",
    "C_117": "integral is exactly 1/144; printed value has the wrong sign",
    "C_128": "integral is exactly -1/192; printed value has the wrong sign",
    "C_169": "printed counterterm sign makes the integrand non-integrable; value with corrected sign",
    "K_164": "inherits the C_169 difference",
    "C_173": "integral is exactly -1/3; printed value disagrees",
    "C_209": "independent high-precision quadrature agrees with the computed value",
    "K_204": "inherits the C_209 difference",
}


@lru_cache(maxsize=None)
def laurent_coefficients(kernel: str) -> np.ndarray:
    """c[j] such that f(m) = sum_j c[j] m^(j - 6) near m = 0."""
    try:
        fn = KERNELS[kernel]
    except KeyError:
        raise ConfigurationError(f"unknown kernel {kernel!r}") from None
    theta = 2.0 * np.pi * np.arange(_NODES) / _NODES
    z = _RADIUS * np.exp(1j * theta)
    h = z ** _POLE * fn(z, NUMPY_BACKEND)
    c = np.fft.fft(h) / _NODES
    c = c[:_NCOEF].real / _RADIUS ** np.arange(_NCOEF)
    c.setflags(write=False)
    return c


@lru_cache(maxsize=None)
def subtracted_series(label: str) -> tuple[np.ndarray, dict[int, float]]:
    """Maclaurin coefficients of kernel - counterterms, plus the leftover
    coefficients of negative powers (should all be round-off)."""
    spec = _spec(label)
    c = np.array(laurent_coefficients(spec.kernel))
    for coef, power in spec.counterterms:
        c[_POLE - power] -= float(coef)
    singular = {j - _POLE: float(c[j]) for j in range(_POLE)}
    regular = c[_POLE:].copy()
    regular.setflags(write=False)
    return regular, singular


def _spec(label: str) -> IntegrandSpec:
    try:
        return INTEGRALS[label]
    except KeyError:
        raise ConfigurationError(f"no integral registered under {label!r}") from None


def _counterterm_sum(spec, m):
    out = 0.0
    for coef, power in spec.counterterms:
        out = out + float(coef) / m ** power
    return out


def subtracted_integrand(label: str, m, branch: str = "auto", m_switch: float = M_SWITCH):
    """Kernel minus counterterms at m (scalar or array).

    branch: "direct", "series" or "auto" (series below m_switch).
    """
    spec = _spec(label)
    m = np.asarray(m, dtype=np.float64)
    if branch == "series" or (branch == "auto" and np.all(m < m_switch)):
        regular, _ = subtracted_series(label)
        return np.polynomial.polynomial.polyval(m, regular)
    if branch == "auto" and np.any(m < m_switch):
        small = m < m_switch
        out = np.empty_like(m)
        out[small] = subtracted_integrand(label, m[small], "series")
        out[~small] = subtracted_integrand(label, m[~small], "direct")
        return out
    return KERNELS[spec.kernel](m, NUMPY_BACKEND) - _counterterm_sum(spec, m)


@lru_cache(maxsize=None)
def _m_max(kernel: str) -> float:
    """First integer m >= 8 past which the kernel stays below KERNEL_FLOOR.

    Every kernel behaves like a cubic times e^{-2m} for m >= 8, so once two
    consecutive samples are below the floor and decreasing the remaining
    integral is about half the last sample.
    """
    fn = KERNELS[kernel]
    m = 8.0
    while m < _M_CAP:
        a = abs(float(fn(np.float64(m), NUMPY_BACKEND)))
        b = abs(float(fn(np.float64(m + 1.0), NUMPY_BACKEND)))
        if a < KERNEL_FLOOR and b < a:
            return m
        m += 1.0
    raise ConvergenceError(f"kernel {kernel} does not decay below {KERNEL_FLOOR}")


def _quad(label, a, b, abs_tol):
    fn = lambda x: float(subtracted_integrand(label, x, "direct"))  # noqa: E731
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", integrate.IntegrationWarning)
        val, err, info = integrate.quad(fn, a, b, epsabs=abs_tol, epsrel=0.0, limit=400, full_output=1)[:3]
    if not (err <= abs_tol and math.isfinite(val)):
        raise ConvergenceError(
            f"{label}: quadrature on [{a}, {b}] reached error estimate {err:.3g} > {abs_tol:.3g}",
            partial=val,
            diagnostics={"interval": (a, b), "abserr": err, "neval": info.get("neval")},
        )
    return val, err


def _series_part(label, upper, abs_tol):
    regular, singular = subtracted_series(label)
    scale = max(1.0, max(abs(float(c)) for c, _ in _spec(label).counterterms) if _spec(label).counterterms else 1.0)
    bad = {p: v for p, v in singular.items() if abs(v) > 1e-9 * scale}
    if bad:
        raise ConfigurationError(
            f"{label}: counterterms leave non-integrable terms "
            + ", ".join(f"{v:+.6g}*m^{p}" for p, v in sorted(bad.items()))
        )
    q = np.arange(regular.size)
    terms = regular * upper ** (q + 1) / (q + 1)
    if abs(terms[-1]) > abs_tol * 1e-3:
        raise ConvergenceError(f"{label}: Maclaurin series not converged at m={upper}")
    return math.fsum(terms.tolist())


def _tail_part(spec, abs_tol):
    m_max = _m_max(spec.kernel)
    val, err = 0.0, 0.0
    for a, b in ((1.0, 4.0), (4.0, m_max)):
        v, e = _quad(spec.label, a, b, abs_tol / 4)
        val += v
        err += e
    # counterterms on [m_max, inf); powers 0 and 1 would diverge
    for coef, power in spec.counterterms:
        if power < 2:
            raise ConfigurationError(f"{spec.label}: counterterm m^-{power} is not integrable at infinity")
        val -= float(coef) / ((power - 1) * m_max ** (power - 1))
    return val, err


def eval_constant(label: str, abs_tol: float = 1e-10, m_switch: float = M_SWITCH) -> float:
    """Value of an integral constant (C label) or aggregate (K label)."""
    return _eval(label, abs_tol, m_switch)[0]


def _eval(label, abs_tol, m_switch):
    if not (1e-12 <= abs_tol <= 1e-6):
        raise DomainError(f"abs_tol must lie in [1e-12, 1e-6], got {abs_tol!r}")
    if label in AGGREGATES:
        vals = [_eval(p, abs_tol, m_switch) for p in AGGREGATES[label].parts]
        return math.fsum(v for v, _ in vals), sum(e for _, e in vals)
    spec = _spec(label)
    val, err = 0.0, 0.0
    if spec.domain in ("0-1", "0-inf"):
        val += _series_part(label, m_switch, abs_tol)
        v, e = _quad(label, m_switch, 1.0, abs_tol / 4)
        val += v
        err += e
    if spec.domain in ("1-inf", "0-inf"):
        v, e = _tail_part(spec, abs_tol)
        val += v
        err += e
    if spec.domain not in ("0-1", "1-inf", "0-inf"):
        raise ConfigurationError(f"{label}: unknown domain {spec.domain!r}")
    return val, err


def printed_half_unit(x: float) -> float:
    """Half a unit in the last decimal place of the shortest repr of ``x``."""
    digits = Decimal(repr(float(x))).as_tuple().exponent
    return 0.5 * 10.0 ** digits if isinstance(digits, int) else 0.0


def _rational_hint(x: float, max_den: int = 192, tol: float = 1e-9) -> str | None:
    if abs(x) < tol:
        return "0"
    f = Fraction(x).limit_denominator(max_den)
    if abs(float(f) - x) <= tol:
        return f"{f.numerator}/{f.denominator}" if f.denominator != 1 else str(f.numerator)
    return None


@dataclass(frozen=True)
class ConstantEntry:
    label: str
    kind: str  # "integral" or "aggregate"
    computed: float
    printed: float | None
    abs_err: float | None
    quad_error: float
    rational: str | None
    parts: tuple[str, ...] = ()
    note: str | None = None


@dataclass
class ConstantTable:
    entries: dict[str, ConstantEntry]
    abs_tol: float
    elapsed: float = 0.0
    source: str = "computed"  # which value value() returns by default
    overrides: dict[str, float] = field(default_factory=dict)

    def __contains__(self, label):
        return label in self.entries

    def __getitem__(self, label) -> ConstantEntry:
        try:
            return self.entries[label]
        except KeyError:
            raise ConfigurationError(f"constant {label!r} missing from table") from None

    def value(self, label: str, source: str | None = None) -> float:
        if label in self.overrides:
            return self.overrides[label]
        e = self[label]
        src = source or self.source
        if src == "printed":
            if e.printed is None:
                raise ConfigurationError(f"{label} has no printed value")
            return e.printed
        if src != "computed":
            raise ConfigurationError(f"unknown constant source {src!r}")
        return e.computed

    def with_source(self, source: str) -> "ConstantTable":
        if source not in ("computed", "printed"):
            raise ConfigurationError(f"unknown constant source {source!r}")
        return ConstantTable(self.entries, self.abs_tol, self.elapsed, source, dict(self.overrides))

    def failures(self, tol: float = 5e-6, *, printed_rounding: bool = False,
                 include_anomalies: bool = True) -> list[ConstantEntry]:
        """Entries whose printed value is further than ``tol`` from the computed
        one.  With ``printed_rounding`` the tolerance widens to half a unit in
        the last printed digit for values printed to fewer decimals."""
        out = []
        for e in self.rows():
            if e.abs_err is None or (not include_anomalies and e.label in PRINT_ANOMALIES):
                continue
            limit = max(tol, printed_half_unit(e.printed)) if printed_rounding else tol
            if e.abs_err > limit:
                out.append(e)
        return out

    def rows(self):
        for label in sorted(self.entries, key=_label_key):
            yield self.entries[label]

    def to_json(self) -> str:
        data = {
            "abs_tol": self.abs_tol,
            "entries": [
                {k: v for k, v in asdict(e).items() if k != "parts"} | {"parts": list(e.parts)}
                for e in self.rows()
            ],
        }
        return json.dumps(data, indent=2, sort_keys=True)


def _label_key(label: str):
    # C_ab / K_ab belong to series a (one or two digits), item b
    num = label.split("_")[1]
    return (int(num[:-1]), label[0] == "K", int(num))


def build_constant_table(abs_tol: float = 1e-10, m_switch: float = M_SWITCH) -> ConstantTable:
    """Evaluate every registered constant and compare with its printed value."""
    t0 = time.perf_counter()
    raw: dict[str, tuple[float, float]] = {}
    for label in INTEGRALS:
        try:
            raw[label] = _eval(label, abs_tol, m_switch)
        except Exception as exc:  # attach the failing id
            raise type(exc)(f"[{label}] {exc}") from exc
    entries: dict[str, ConstantEntry] = {}
    for label, spec in INTEGRALS.items():
        v, e = raw[label]
        entries[label] = ConstantEntry(
            label, "integral", v, spec.printed,
            None if spec.printed is None else abs(v - spec.printed),
            e, _rational_hint(v), note=PRINT_ANOMALIES.get(label),
        )
    for label, agg in AGGREGATES.items():
        v = math.fsum(raw[p][0] for p in agg.parts)
        e = sum(raw[p][1] for p in agg.parts)
        entries[label] = ConstantEntry(
            label, "aggregate", v, agg.printed,
            None if agg.printed is None else abs(v - agg.printed),
            e, _rational_hint(v), agg.parts, PRINT_ANOMALIES.get(label),
        )
    return ConstantTable(entries, abs_tol, time.perf_counter() - t0)
