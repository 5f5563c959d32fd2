"""Outer-expansion kernels and the integral constants built from them.

Every kernel is written against a tiny backend (``exp``/``expm1``) so the same
expression serves double precision (numpy, real or complex) and mpmath.
``P`` below stands for e^{4m} - 1, always formed with ``expm1``.

A constant is the integral over (0, 1], [1, inf) or (0, inf) of a kernel
minus counterterms.  A counterterm ``(c, p)`` subtracts ``c / m**p``; p = 0
is a constant.  Printed reference values are six significant figures.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

__all__ = ["Kernel", "IntegrandSpec", "Aggregate", "KERNELS", "INTEGRALS", "AGGREGATES", "SERIES_CONSTANTS"]


@dataclass(frozen=True)
class Kernel:
    name: str
    func: object  # (m, backend) -> value
    text: str
    # The as-printed formula when it disagrees with the Taylor coefficient of
    # the summand; ``text``/``func`` then hold the corrected expression.
    printed: str | None = None

    @property
    def corrected(self) -> bool:
        return self.printed is not None

    def __call__(self, m, backend):
        return self.func(m, backend)


@dataclass(frozen=True)
class IntegrandSpec:
    label: str
    kernel: str
    domain: str  # "0-1", "1-inf" or "0-inf"
    counterterms: tuple[tuple[Fraction, int], ...]
    printed: float | None
    # As-printed counterterms, kept only where they do not cancel the
    # kernel's Laurent part at m = 0.
    printed_counterterms: tuple[tuple[Fraction, int], ...] | None = None


@dataclass(frozen=True)
class Aggregate:
    label: str
    parts: tuple[str, ...]
    printed: float | None


KERNELS: dict[str, Kernel] = {}
INTEGRALS: dict[str, IntegrandSpec] = {}
AGGREGATES: dict[str, Aggregate] = {}
# series label -> constant labels used by its closed form
SERIES_CONSTANTS: dict[str, tuple[str, ...]] = {}


def _kernel(name, text, printed=None):
    def deco(fn):
        KERNELS[name] = Kernel(name, fn, text, printed)
        return fn
    return deco


def _ct(*pairs):
    return tuple((Fraction(c), int(p)) for c, p in pairs)


def _int(label, kernel, domain, counterterms, printed, printed_counterterms=None):
    assert kernel in KERNELS, kernel
    pct = None if printed_counterterms is None else _ct(*printed_counterterms)
    INTEGRALS[label] = IntegrandSpec(label, kernel, domain, _ct(*counterterms), printed, pct)


def _agg(label, parts, printed):
    AGGREGATES[label] = Aggregate(label, tuple(parts), printed)


# T0(eta) and U0(eta) --------------------------------------------------------

@_kernel("T0k1.f1", "e^{2m}/P^2")
def _(m, B):
    return B.exp(2 * m) / B.expm1(4 * m) ** 2


@_kernel("T0k1.f2", "e^{2m}(1+3e^{4m})/P^3")
def _(m, B):
    return B.exp(2 * m) * (1 + 3 * B.exp(4 * m)) / B.expm1(4 * m) ** 3


@_kernel("U0k1.g2", "e^{2m}(1+7e^{4m})/P^3")
def _(m, B):
    return B.exp(2 * m) * (1 + 7 * B.exp(4 * m)) / B.expm1(4 * m) ** 3


_int("C_11", "T0k1.f1", "1-inf", [("1/16", 2)], -0.0620776)
_int("C_12", "T0k1.f1", "0-1", [("1/16", 2), ("-1/8", 1), ("1/24", 0)], 0.0204109)
_int("C_13", "T0k1.f2", "0-inf", [("1/16", 3), ("-1/16", 2)], 0.0208333)
_agg("K_11", ["C_11", "C_12"], -0.0416667)
SERIES_CONSTANTS["T0k1"] = ("K_11", "C_13")

_int("C_131", "T0k1.f1", "1-inf", [("1/16", 2)], -0.0620776)
_int("C_132", "T0k1.f1", "0-1", [("1/16", 2), ("-1/8", 1), ("1/24", 0)], 0.0204109)
_int("C_133", "U0k1.g2", "1-inf", [("1/8", 3), ("-1/16", 2)], 0.0029945)
_int("C_134", "U0k1.g2", "0-1", [("1/8", 3), ("-1/16", 2), ("-1/8", 1)], 0.0386722)
_agg("K_131", ["C_131", "C_132"], -0.0416667)
_agg("K_132", ["C_133", "C_134"], 0.0416667)
SERIES_CONSTANTS["U0k1"] = ("K_131", "K_132")

# T1(eta) --------------------------------------------------------------------

@_kernel("T1k1.f1", "2m e^{2m}/P^2")
def _(m, B):
    return 2 * m * B.exp(2 * m) / B.expm1(4 * m) ** 2


@_kernel("T1k1.f2", "e^{2m}(1+2m+(6m-1)e^{4m})/P^3")
def _(m, B):
    return B.exp(2 * m) * (1 + 2 * m + (6 * m - 1) * B.exp(4 * m)) / B.expm1(4 * m) ** 3


@_kernel("T1k1.f3", "e^{2m}(1+m+(14m+2)e^{4m}+(9m-3)e^{8m})/P^4",
         printed="e^{2m}(1+m+(14m+2)e^{4m}-(9m-3)e^{8m})/P^4")
def _(m, B):
    e4 = B.exp(4 * m)
    return B.exp(2 * m) * (1 + m + (14 * m + 2) * e4 + (9 * m - 3) * e4 * e4) / B.expm1(4 * m) ** 4


_int("C_21", "T1k1.f1", "1-inf", [], 0.000984324)
_int("C_22", "T1k1.f1", "0-1", [("1/8", 1), ("-1/4", 0)], 0.06559053)
_int("C_23", "T1k1.f2", "1-inf", [("1/16", 2)], -0.0599279)
_int("C_24", "T1k1.f2", "0-1", [("1/16", 2), ("-1/24", 0)], -0.0234054)
_int("C_25", "T1k1.f3", "0-inf", [("1/32", 3)], -0.0104167)
_agg("K_21", ["C_21", "C_22"], 0.0665749)
_agg("K_22", ["C_23", "C_24"], -0.0833333)
SERIES_CONSTANTS["T1k1"] = ("K_21", "K_22", "C_25")

# T2(eta) --------------------------------------------------------------------

@_kernel("T2k1.f1", "4m^2 e^{2m}/P^2")
def _(m, B):
    return 4 * m * m * B.exp(2 * m) / B.expm1(4 * m) ** 2


@_kernel("T2k1.f2", "4m e^{2m}(1+m+(3m-1)e^{4m})/P^3")
def _(m, B):
    return 4 * m * B.exp(2 * m) * (1 + m + (3 * m - 1) * B.exp(4 * m)) / B.expm1(4 * m) ** 3


@_kernel("T2k1.f3", "e^{2m}(1+4m+2m^2+(28m^2+8m-2)e^{4m}+(18m^2-12m+1)e^{8m})/P^4")
def _(m, B):
    e4 = B.exp(4 * m)
    num = 1 + 4 * m + 2 * m * m + (28 * m * m + 8 * m - 2) * e4 + (18 * m * m - 12 * m + 1) * e4 * e4
    return B.exp(2 * m) * num / B.expm1(4 * m) ** 4


@_kernel("T2k1.f4", "e^{2m}(3+6m+2m^2+(98m^2+78m+3)e^{4m}+(230m^2-30m-15)e^{8m}+(54m^2-54m+9)e^{12m})/(3P^5)",
         printed="e^{2m}(3+6m+2m^2+(94m^2+78m+3)e^{4m}+(230m^2-30m-15)e^{8m}-(54m^2-54m+9)e^{12m})/(3P^5)")
def _(m, B):
    e4 = B.exp(4 * m)
    num = (3 + 6 * m + 2 * m * m + (98 * m * m + 78 * m + 3) * e4
           + (230 * m * m - 30 * m - 15) * e4 ** 2 + (54 * m * m - 54 * m + 9) * e4 ** 3)
    return B.exp(2 * m) * num / (3 * B.expm1(4 * m) ** 5)


_int("C_31", "T2k1.f1", "1-inf", [], 0.00234029)
_int("C_32", "T2k1.f1", "0-1", [("1/4", 0)], -0.16139)
_int("C_33", "T2k1.f2", "1-inf", [], 0.005144)
_int("C_34", "T2k1.f2", "0-1", [("1/4", 0)], -0.130144)
_int("C_35", "T2k1.f3", "1-inf", [], 0.0053361)
_int("C_36", "T2k1.f3", "0-1", [("1/24", 0)], 0.0154972)
_int("C_37", "T2k1.f4", "0-inf", [], 0.00698606)
_agg("K_31", ["C_31", "C_32"], -0.15905)
_agg("K_32", ["C_33", "C_34"], -0.125)
_agg("K_33", ["C_35", "C_36"], 0.0208333)
SERIES_CONSTANTS["T2k1"] = ("K_31", "K_32", "K_33", "C_37")

# T3(eta) --------------------------------------------------------------------

@_kernel("T3k1.f1", "8m^3 e^{2m}/P^2")
def _(m, B):
    return 8 * m ** 3 * B.exp(2 * m) / B.expm1(4 * m) ** 2


@_kernel("T3k1.f2", "4m^2 e^{2m}(3+2m+(6m-3)e^{4m})/P^3")
def _(m, B):
    return 4 * m * m * B.exp(2 * m) * (3 + 2 * m + (6 * m - 3) * B.exp(4 * m)) / B.expm1(4 * m) ** 3


@_kernel("T3k1.f3", "2m e^{2m}(3+6m+2m^2+(28m^2+12m-6)e^{4m}+(18m^2-18m+3)e^{8m})/P^4")
def _(m, B):
    e4 = B.exp(4 * m)
    num = 3 + 6 * m + 2 * m * m + (28 * m * m + 12 * m - 6) * e4 + (18 * m * m - 18 * m + 3) * e4 * e4
    return 2 * m * B.exp(2 * m) * num / B.expm1(4 * m) ** 4


@_kernel("T3k1.f4", "e^{2m}(3+18m+18m^2+4m^3+(196m^3+234m^2+18m-9)e^{4m}"
                       "+(460m^3-90m^2-90m+9)e^{8m}+(108m^3-162m^2+54m-3)e^{12m})/(3P^5)")
def _(m, B):
    e4 = B.exp(4 * m)
    m2, m3 = m * m, m ** 3
    num = (3 + 18 * m + 18 * m2 + 4 * m3 + (196 * m3 + 234 * m2 + 18 * m - 9) * e4
           + (460 * m3 - 90 * m2 - 90 * m + 9) * e4 ** 2 + (108 * m3 - 162 * m2 + 54 * m - 3) * e4 ** 3)
    return B.exp(2 * m) * num / (3 * B.expm1(4 * m) ** 5)


@_kernel("T3k1.f5", "e^{2m}(3+9m+6m^2+m^3+(156m^3+288m^2+108m)e^{4m}+(918m^3+396m^2-162m-18)e^{8m}"
                       "+(764m^3-528m^2-36m+24)e^{12m}+(81m^3-162m^2+81m-9)e^{16m})/(3P^6)")
def _(m, B):
    e4 = B.exp(4 * m)
    m2, m3 = m * m, m ** 3
    num = (3 + 9 * m + 6 * m2 + m3 + (156 * m3 + 288 * m2 + 108 * m) * e4
           + (918 * m3 + 396 * m2 - 162 * m - 18) * e4 ** 2
           + (764 * m3 - 528 * m2 - 36 * m + 24) * e4 ** 3
           + (81 * m3 - 162 * m2 + 81 * m - 9) * e4 ** 4)
    return B.exp(2 * m) * num / (3 * B.expm1(4 * m) ** 6)


_int("C_41", "T3k1.f1", "0-inf", [], 0.0556826)
_int("C_42", "T3k1.f2", "1-inf", [], 0.0102884)
_int("C_43", "T3k1.f2", "0-1", [("-1/4", 0)], 0.239712)
_int("C_44", "T3k1.f3", "1-inf", [], 0.00810024)
_int("C_45", "T3k1.f3", "0-1", [("-1/4", 0)], 0.1794)
_int("C_46", "T3k1.f4", "1-inf", [], 0.00322628)
_int("C_47", "T3k1.f4", "0-1", [("-1/24", 0)], -0.00322628)
_int("C_48", "T3k1.f5", "0-inf", [], -0.005243)
_agg("K_41", ["C_42", "C_43"], 0.25)
_agg("K_42", ["C_44", "C_45"], 0.1875)
_agg("K_43", ["C_46", "C_47"], 1.9893e-9)
SERIES_CONSTANTS["T3k1"] = ("C_41", "K_41", "K_42", "K_43", "C_48")

# T0(2 eta) ------------------------------------------------------------------

@_kernel("T0k2.f1", "e^{4m}/P^2")
def _(m, B):
    return B.exp(4 * m) / B.expm1(4 * m) ** 2


@_kernel("T0k2.f2", "2e^{4m}(1+e^{4m})/P^3")
def _(m, B):
    e4 = B.exp(4 * m)
    return 2 * e4 * (1 + e4) / B.expm1(4 * m) ** 3


_int("C_51", "T0k2.f1", "1-inf", [("1/16", 2)], -0.0578357)
_int("C_52", "T0k2.f1", "0-1", [("1/16", 2), ("-1/12", 0)], 0.016169)
_int("C_53", "T0k2.f2", "0-inf", [("1/16", 3)], -0.0416667)
_agg("K_51", ["C_51", "C_52"], -0.0416667)
SERIES_CONSTANTS["T0k2"] = ("K_51", "C_53")

# T1(2 eta) ------------------------------------------------------------------

@_kernel("T1k2.f1", "2m e^{4m}/P^2")
def _(m, B):
    return 2 * m * B.exp(4 * m) / B.expm1(4 * m) ** 2


@_kernel("T1k2.f2", "e^{4m}(1+4m+(4m-1)e^{4m})/P^3")
def _(m, B):
    e4 = B.exp(4 * m)
    return e4 * (1 + 4 * m + (4 * m - 1) * e4) / B.expm1(4 * m) ** 3


@_kernel("T1k2.f3", "2e^{4m}(1+2m+8m e^{4m}+(2m-1)e^{8m})/P^4")
def _(m, B):
    e4 = B.exp(4 * m)
    return 2 * e4 * (1 + 2 * m + 8 * m * e4 + (2 * m - 1) * e4 * e4) / B.expm1(4 * m) ** 4


_int("C_61", "T1k2.f1", "1-inf", [], 0.0116394)
_int("C_62", "T1k2.f1", "0-1", [("1/8", 1)], -0.0599262)
_int("C_63", "T1k2.f2", "1-inf", [("1/16", 2)], -0.0434945)
_int("C_64", "T1k2.f2", "0-1", [("1/16", 2), ("1/12", 0)], -0.0398388)
_int("C_65", "T1k2.f3", "0-inf", [("1/32", 3)], 0.0208333)
_agg("K_61", ["C_61", "C_62"], -0.0482868)
_agg("K_62", ["C_63", "C_64"], -0.0833333)
SERIES_CONSTANTS["T1k2"] = ("K_61", "K_62", "C_65")

# T2(2 eta) ------------------------------------------------------------------

@_kernel("T2k2.f1", "4m^2 e^{4m}/P^2")
def _(m, B):
    return 4 * m * m * B.exp(4 * m) / B.expm1(4 * m) ** 2


@_kernel("T2k2.f2", "4m e^{4m}(1+2m+(2m-1)e^{4m})/P^3")
def _(m, B):
    e4 = B.exp(4 * m)
    return 4 * m * e4 * (1 + 2 * m + (2 * m - 1) * e4) / B.expm1(4 * m) ** 3


@_kernel("T2k2.f3", "e^{4m}(1+8m+8m^2+(32m^2-2)e^{4m}+(8m^2-8m+1)e^{8m})/P^4",
         printed="e^{4m}(1+8m+8m^2+(32m^2-1)e^{4m}+(8m^2-8m+1)e^{8m})/P^4")
def _(m, B):
    e4 = B.exp(4 * m)
    num = 1 + 8 * m + 8 * m * m + (32 * m * m - 2) * e4 + (8 * m * m - 8 * m + 1) * e4 * e4
    return e4 * num / B.expm1(4 * m) ** 4


@_kernel("T2k2.f4", "2e^{4m}(3+12m+8m^2+(88m^2+36m-3)e^{4m}+(88m^2-36m-3)e^{8m}+(8m^2-12m+3)e^{12m})/(3P^5)")
def _(m, B):
    e4 = B.exp(4 * m)
    m2 = m * m
    num = (3 + 12 * m + 8 * m2 + (88 * m2 + 36 * m - 3) * e4
           + (88 * m2 - 36 * m - 3) * e4 ** 2 + (8 * m2 - 12 * m + 3) * e4 ** 3)
    return 2 * e4 * num / (3 * B.expm1(4 * m) ** 5)


_int("C_71", "T2k2.f1", "1-inf", [], 0.0302001)
_int("C_72", "T2k2.f1", "0-1", [("1/4", 0)], -0.0745833)
_int("C_73", "T2k2.f2", "0-inf", [], 0.125)
_int("C_74", "T2k2.f3", "1-inf", [], 0.0204238)
_int("C_75", "T2k2.f3", "0-1", [("-1/12", 0)], 0.0629095)
_int("C_76", "T2k2.f4", "0-inf", [], -0.0138888)
_agg("K_71", ["C_71", "C_72"], -0.0443832)
_agg("K_72", ["C_74", "C_75"], 0.0833333)
SERIES_CONSTANTS["T2k2"] = ("K_71", "C_73", "K_72", "C_76")

# T3(2 eta) ------------------------------------------------------------------

@_kernel("T3k2.f1", "8m^3 e^{4m}/P^2")
def _(m, B):
    return 8 * m ** 3 * B.exp(4 * m) / B.expm1(4 * m) ** 2


@_kernel("T3k2.f2", "4m^2 e^{4m}(3+4m+(4m-3)e^{4m})/P^3")
def _(m, B):
    e4 = B.exp(4 * m)
    return 4 * m * m * e4 * (3 + 4 * m + (4 * m - 3) * e4) / B.expm1(4 * m) ** 3


@_kernel("T3k2.f3", "2m e^{4m}(3+12m+8m^2+(32m^2-6)e^{4m}+(8m^2-12m+3)e^{8m})/P^4")
def _(m, B):
    e4 = B.exp(4 * m)
    num = 3 + 12 * m + 8 * m * m + (32 * m * m - 6) * e4 + (8 * m * m - 12 * m + 3) * e4 * e4
    return 2 * m * e4 * num / B.expm1(4 * m) ** 4


@_kernel("T3k2.f4", "e^{4m}(3+36m+72m^2+32m^3+(352m^3+216m^2-36m-9)e^{4m}"
                       "+(352m^3-216m^2-36m+9)e^{8m}+(32m^3-72m^2+36m-3)e^{12m})/(3P^5)")
def _(m, B):
    e4 = B.exp(4 * m)
    m2, m3 = m * m, m ** 3
    num = (3 + 36 * m + 72 * m2 + 32 * m3 + (352 * m3 + 216 * m2 - 36 * m - 9) * e4
           + (352 * m3 - 216 * m2 - 36 * m + 9) * e4 ** 2 + (32 * m3 - 72 * m2 + 36 * m - 3) * e4 ** 3)
    return e4 * num / (3 * B.expm1(4 * m) ** 5)


@_kernel("T3k2.f5", "2e^{4m}(3+18m+24m^2+8m^3+(208m^3+240m^2+36m-6)e^{4m}+(528m^3-108m)e^{8m}"
                       "+(208m^3-240m^2+36m+6)e^{12m}+(8m^3-24m^2+18m-3)e^{16m})/(3P^6)",
         printed="2e^{4m}(3+18m+24m^2+8m^3+(208m^3+240m^2+36m-6)e^{4m}+(528m^3-108m)e^{8m}"
                 "+(208m^3-240m^2-36m+6)e^{12m}+(8m^3-24m^2+18m-3)e^{16m})/(3P^6)")
def _(m, B):
    e4 = B.exp(4 * m)
    m2, m3 = m * m, m ** 3
    num = (3 + 18 * m + 24 * m2 + 8 * m3 + (208 * m3 + 240 * m2 + 36 * m - 6) * e4
           + (528 * m3 - 108 * m) * e4 ** 2
           + (208 * m3 - 240 * m2 + 36 * m + 6) * e4 ** 3
           + (8 * m3 - 24 * m2 + 18 * m - 3) * e4 ** 4)
    return 2 * e4 * num / (3 * B.expm1(4 * m) ** 6)


_int("C_81", "T3k2.f1", "0-inf", [], 0.225386)
_int("C_82", "T3k2.f2", "1-inf", [], 0.0760218)
_int("C_83", "T3k2.f2", "0-1", [("-1/4", 0)], 0.173978)
_int("C_84", "T3k2.f3", "0-inf", [], -0.0625)
_int("C_85", "T3k2.f4", "1-inf", [], -0.00339257)
_int("C_86", "T3k2.f4", "0-1", [("1/12", 0)], -0.0799408)
_int("C_87", "T3k2.f5", "0-inf", [], 0.010415)
_agg("K_81", ["C_82", "C_83"], 0.25)
_agg("K_82", ["C_85", "C_86"], -0.0833333)
SERIES_CONSTANTS["T3k2"] = ("C_81", "K_81", "C_84", "K_82", "C_87")

# T0(3 eta) ------------------------------------------------------------------

@_kernel("T0k3.f1", "e^{6m}/P^2")
def _(m, B):
    return B.exp(6 * m) / B.expm1(4 * m) ** 2


@_kernel("T0k3.f2", "e^{6m}(3+e^{4m})/P^3")
def _(m, B):
    return B.exp(6 * m) * (3 + B.exp(4 * m)) / B.expm1(4 * m) ** 3


_int("C_91", "T0k3.f1", "1-inf", [("1/16", 2)], 0.00600775)
_int("C_92", "T0k3.f1", "0-1", [("1/16", 2), ("1/8", 1), ("1/24", 0)], -0.0476744)
_int("C_93", "T0k3.f2", "0-inf", [("1/16", 3), ("1/16", 2)], -0.0235338)
_agg("K_91", ["C_91", "C_92"], -0.0416667)
SERIES_CONSTANTS["T0k3"] = ("K_91", "C_93")

# T1(3 eta) ------------------------------------------------------------------

@_kernel("T1k3.f1", "2m e^{6m}/P^2")
def _(m, B):
    return 2 * m * B.exp(6 * m) / B.expm1(4 * m) ** 2


@_kernel("T1k3.f2", "e^{6m}(1+6m+(2m-1)e^{4m})/P^3")
def _(m, B):
    return B.exp(6 * m) * (1 + 6 * m + (2 * m - 1) * B.exp(4 * m)) / B.expm1(4 * m) ** 3


@_kernel("T1k3.f3", "e^{6m}(3+9m+(14m-2)e^{4m}+(m-1)e^{8m})/P^4")
def _(m, B):
    e4 = B.exp(4 * m)
    return B.exp(6 * m) * (3 + 9 * m + (14 * m - 2) * e4 + (m - 1) * e4 * e4) / B.expm1(4 * m) ** 4


_int("C_101", "T1k3.f1", "1-inf", [], 0.204961)
_int("C_102", "T1k3.f1", "0-1", [("1/8", 1), ("1/4", 0)], -0.0215362)
_int("C_103", "T1k3.f2", "1-inf", [("1/16", 2)], 0.0779324)
_int("C_104", "T1k3.f2", "0-1", [("1/16", 2), ("-1/24", 0)], 0.0887343)
_int("C_105", "T1k3.f3", "0-inf", [("1/32", 3)], 0.03125)
_agg("K_101", ["C_101", "C_102"], 0.183425)
_agg("K_102", ["C_103", "C_104"], 0.166667)
SERIES_CONSTANTS["T1k3"] = ("K_101", "K_102", "C_105")

# T2(3 eta) ------------------------------------------------------------------

@_kernel("T2k3.f1", "4m^2 e^{6m}/P^2")
def _(m, B):
    return 4 * m * m * B.exp(6 * m) / B.expm1(4 * m) ** 2


@_kernel("T2k3.f2", "4m e^{6m}(1+3m+(m-1)e^{4m})/P^3")
def _(m, B):
    return 4 * m * B.exp(6 * m) * (1 + 3 * m + (m - 1) * B.exp(4 * m)) / B.expm1(4 * m) ** 3


@_kernel("T2k3.f3", "e^{6m}(1+12m+18m^2+(28m^2-8m-2)e^{4m}+(2m^2-4m+1)e^{8m})/P^4")
def _(m, B):
    e4 = B.exp(4 * m)
    num = 1 + 12 * m + 18 * m * m + (28 * m * m - 8 * m - 2) * e4 + (2 * m * m - 4 * m + 1) * e4 * e4
    return B.exp(6 * m) * num / B.expm1(4 * m) ** 4


@_kernel("T2k3.f4", "e^{6m}(9+54m+54m^2+(230m^2+30m-15)e^{4m}+(98m^2-78m+3)e^{8m}+(2m^2-6m+3)e^{12m})/(3P^5)")
def _(m, B):
    e4 = B.exp(4 * m)
    m2 = m * m
    num = (9 + 54 * m + 54 * m2 + (230 * m2 + 30 * m - 15) * e4
           + (98 * m2 - 78 * m + 3) * e4 ** 2 + (2 * m2 - 6 * m + 3) * e4 ** 3)
    return B.exp(6 * m) * num / (3 * B.expm1(4 * m) ** 5)


_int("C_111", "T2k3.f1", "1-inf", [], 0.681334)
_int("C_112", "T2k3.f1", "0-1", [("1/4", 0)], 0.211416)
_int("C_113", "T2k3.f2", "1-inf", [], 0.280865)
_int("C_114", "T2k3.f2", "0-1", [("-1/4", 0)], 0.0941352)
_int("C_115", "T2k3.f3", "1-inf", [], 0.0104804)
_int("C_116", "T2k3.f3", "0-1", [("1/24", 0)], -0.114647)
_int("C_117", "T2k3.f4", "0-inf", [], -0.0160274)
_agg("K_111", ["C_111", "C_112"], 0.89275)
_agg("K_112", ["C_113", "C_114"], 0.375)
_agg("K_113", ["C_115", "C_116"], -0.104167)
SERIES_CONSTANTS["T2k3"] = ("K_111", "K_112", "K_113", "C_117")

# T3(3 eta) ------------------------------------------------------------------

@_kernel("T3k3.f1", "8m^3 e^{6m}/P^2")
def _(m, B):
    return 8 * m ** 3 * B.exp(6 * m) / B.expm1(4 * m) ** 2


@_kernel("T3k3.f2", "4m^2 e^{6m}(3+6m+(2m-3)e^{4m})/P^3")
def _(m, B):
    return 4 * m * m * B.exp(6 * m) * (3 + 6 * m + (2 * m - 3) * B.exp(4 * m)) / B.expm1(4 * m) ** 3


@_kernel("T3k3.f3", "2m e^{6m}(3+18m+18m^2+(28m^2-12m-6)e^{4m}+(2m^2-6m+3)e^{8m})/P^4")
def _(m, B):
    e4 = B.exp(4 * m)
    num = 3 + 18 * m + 18 * m * m + (28 * m * m - 12 * m - 6) * e4 + (2 * m * m - 6 * m + 3) * e4 * e4
    return 2 * m * B.exp(6 * m) * num / B.expm1(4 * m) ** 4


@_kernel("T3k3.f4", "e^{6m}(3+54m+162m^2+108m^3+(460m^3+90m^2-90m-9)e^{4m}"
                       "+(196m^3-234m^2+18m+9)e^{8m}+(4m^3-18m^2+18m-3)e^{12m})/(3P^5)")
def _(m, B):
    e4 = B.exp(4 * m)
    m2, m3 = m * m, m ** 3
    num = (3 + 54 * m + 162 * m2 + 108 * m3 + (460 * m3 + 90 * m2 - 90 * m - 9) * e4
           + (196 * m3 - 234 * m2 + 18 * m + 9) * e4 ** 2 + (4 * m3 - 18 * m2 + 18 * m - 3) * e4 ** 3)
    return B.exp(6 * m) * num / (3 * B.expm1(4 * m) ** 5)


@_kernel("T3k3.f5", "e^{6m}(9+81m+162m^2+81m^3+(764m^3+528m^2-36m-24)e^{4m}+(918m^3-396m^2-162m+18)e^{8m}"
                       "+(156m^3-288m^2+108m)e^{12m}+(m^3-6m^2+9m-3)e^{16m})/(3P^6)",
         printed="e^{6m}(9+81m+162m^2+81m^3+(764m^3+528m^2-36m-24)e^{4m}+(918m^3-396m^2-162m-18)e^{8m}"
                 "+(156m^3-288m^2+108m)e^{12m}+(m^3-6m^2+9m-3)e^{16m})/(3P^6)")
def _(m, B):
    e4 = B.exp(4 * m)
    m2, m3 = m * m, m ** 3
    num = (9 + 81 * m + 162 * m2 + 81 * m3 + (764 * m3 + 528 * m2 - 36 * m - 24) * e4
           + (918 * m3 - 396 * m2 - 162 * m + 18) * e4 ** 2
           + (156 * m3 - 288 * m2 + 108 * m) * e4 ** 3
           + (m3 - 6 * m2 + 9 * m - 3) * e4 ** 4)
    return B.exp(6 * m) * num / (3 * B.expm1(4 * m) ** 6)


_int("C_121", "T3k3.f1", "0-inf", [], 3.09972)
_int("C_122", "T3k3.f2", "1-inf", [], 0.56173)
_int("C_123", "T3k3.f2", "0-1", [("-1/4", 0)], -0.31173)
_int("C_124", "T3k3.f3", "1-inf", [], -0.119472)
_int("C_125", "T3k3.f3", "0-1", [("1/4", 0)], -0.193028)
_int("C_126", "T3k3.f4", "1-inf", [], -0.0390417)
_int("C_127", "T3k3.f4", "0-1", [("-1/24", 0)], 0.122375)
_int("C_128", "T3k3.f5", "0-inf", [], 0.00588708)
_agg("K_121", ["C_122", "C_123"], 0.25)
_agg("K_122", ["C_124", "C_125"], -0.3125)
_agg("K_123", ["C_126", "C_127"], 0.0833333)
SERIES_CONSTANTS["T3k3"] = ("C_121", "K_121", "K_122", "K_123", "C_128")

# U1(eta) --------------------------------------------------------------------

@_kernel("U1k1.g2", "e^{2m}(1+2m+(14m-1)e^{4m})/P^3")
def _(m, B):
    return B.exp(2 * m) * (1 + 2 * m + (14 * m - 1) * B.exp(4 * m)) / B.expm1(4 * m) ** 3


@_kernel("U1k1.g3", "e^{2m}(1+m+(54m+6)e^{4m}+(49m-7)e^{8m})/P^4")
def _(m, B):
    e4 = B.exp(4 * m)
    return B.exp(2 * m) * (1 + m + (54 * m + 6) * e4 + (49 * m - 7) * e4 * e4) / B.expm1(4 * m) ** 4


_int("C_141", "T1k1.f1", "1-inf", [], 0.000984324)
_int("C_142", "T1k1.f1", "0-1", [("1/8", 1), ("-1/4", 0)], 0.0655905)
_int("C_143", "U1k1.g2", "1-inf", [("3/16", 2)], -0.180949)
_int("C_144", "U1k1.g2", "0-1", [("3/16", 2), ("-7/24", 0)], 0.0391906)
_int("C_145", "U1k1.g3", "1-inf", [("9/32", 3)], -0.118708)
_int("C_146", "U1k1.g3", "0-1", [("9/32", 3), ("-1/12", 1)], -0.0861535)
_agg("K_141", ["C_141", "C_142"], 0.0665749)
_agg("K_142", ["C_143", "C_144"], -0.141758)
_agg("K_143", ["C_145", "C_146"], -0.204861)
SERIES_CONSTANTS["U1k1"] = ("K_141", "K_142", "K_143")

# U2(eta) --------------------------------------------------------------------

@_kernel("U2k1.g2", "4m e^{2m}(1+m+(7m-1)e^{4m})/P^3")
def _(m, B):
    return 4 * m * B.exp(2 * m) * (1 + m + (7 * m - 1) * B.exp(4 * m)) / B.expm1(4 * m) ** 3


@_kernel("U2k1.g3", "e^{2m}(1+4m+2m^2+(108m^2+24m-2)e^{4m}+(98m^2-28m+1)e^{8m})/P^4")
def _(m, B):
    e4 = B.exp(4 * m)
    num = 1 + 4 * m + 2 * m * m + (108 * m * m + 24 * m - 2) * e4 + (98 * m * m - 28 * m + 1) * e4 * e4
    return B.exp(2 * m) * num / B.expm1(4 * m) ** 4


@_kernel("U2k1.g4", "e^{2m}(3+6m+2m^2+(730m^2+318m+15)e^{4m}+(2422m^2-30m-39)e^{8m}+(686m^2-294m+21)e^{12m})/(3P^5)",
         printed="e^{2m}(3+6m+2m^2+(730m^2+318m+15)e^{4m}+(2422m^2-30m-39)e^{8m}+(686m^2-249m+21)e^{12m})/(3P^5)")
def _(m, B):
    e4 = B.exp(4 * m)
    m2 = m * m
    num = (3 + 6 * m + 2 * m2 + (730 * m2 + 318 * m + 15) * e4
           + (2422 * m2 - 30 * m - 39) * e4 ** 2 + (686 * m2 - 294 * m + 21) * e4 ** 3)
    return B.exp(2 * m) * num / (3 * B.expm1(4 * m) ** 5)


_int("C_151", "T2k1.f1", "1-inf", [], 0.00234029)
_int("C_152", "T2k1.f1", "0-1", [("1/4", 0)], -0.16139)
_int("C_153", "U2k1.g2", "1-inf", [], 0.0145974)
_int("C_154", "U2k1.g2", "0-1", [("1/4", 1), ("1/4", 0)], -0.290497)
_int("C_155", "U2k1.g3", "1-inf", [("3/8", 2)], -0.329424)
_int("C_156", "U2k1.g3", "0-1", [("3/8", 2), ("1/8", 0)], -0.144309)
_int("C_157", "U2k1.g4", "1-inf", [("9/16", 3)], -0.185521)
_int("C_158", "U2k1.g4", "0-1", [("9/16", 3), ("-1/6", 1)], 0.11082)
_agg("K_151", ["C_151", "C_152"], -0.15905)
_agg("K_152", ["C_153", "C_154"], -0.2759)
_agg("K_153", ["C_155", "C_156"], -0.473734)
_agg("K_154", ["C_157", "C_158"], -0.0747)
SERIES_CONSTANTS["U2k1"] = ("K_151", "K_152", "K_153", "K_154")

# U3(eta) --------------------------------------------------------------------

@_kernel("U3k1.g2", "4m^2 e^{2m}(3+2m+(14m-3)e^{4m})/P^3")
def _(m, B):
    return 4 * m * m * B.exp(2 * m) * (3 + 2 * m + (14 * m - 3) * B.exp(4 * m)) / B.expm1(4 * m) ** 3


@_kernel("U3k1.g3", "2m e^{2m}(3+6m+2m^2+(108m^2+36m-6)e^{4m}+(98m^2-42m+3)e^{8m})/P^4")
def _(m, B):
    e4 = B.exp(4 * m)
    num = 3 + 6 * m + 2 * m * m + (108 * m * m + 36 * m - 6) * e4 + (98 * m * m - 42 * m + 3) * e4 * e4
    return 2 * m * B.exp(2 * m) * num / B.expm1(4 * m) ** 4


@_kernel("U3k1.g4", "e^{2m}(3+18m+18m^2+4m^3+(1460m^3+954m^2+90m-9)e^{4m}"
                       "+(4844m^3-90m^2-234m+9)e^{8m}+(1372m^3-882m^2+126m-3)e^{12m})/(3P^5)")
def _(m, B):
    e4 = B.exp(4 * m)
    m2, m3 = m * m, m ** 3
    num = (3 + 18 * m + 18 * m2 + 4 * m3 + (1460 * m3 + 954 * m2 + 90 * m - 9) * e4
           + (4844 * m3 - 90 * m2 - 234 * m + 9) * e4 ** 2 + (1372 * m3 - 882 * m2 + 126 * m - 3) * e4 ** 3)
    return B.exp(2 * m) * num / (3 * B.expm1(4 * m) ** 5)


@_kernel("U3k1.g5", "e^{2m}(3+9m+6m^2+m^3+(2476m^3+2184m^2+468m+12)e^{4m}+(20870m^3+5076m^2-522m-54)e^{8m}"
                       "+(20716m^3-5208m^2-396m+60)e^{12m}+(2401m^3-2058m^2+441m-21)e^{16m})/(3P^6)")
def _(m, B):
    e4 = B.exp(4 * m)
    m2, m3 = m * m, m ** 3
    num = (3 + 9 * m + 6 * m2 + m3 + (2476 * m3 + 2184 * m2 + 468 * m + 12) * e4
           + (20870 * m3 + 5076 * m2 - 522 * m - 54) * e4 ** 2
           + (20716 * m3 - 5208 * m2 - 396 * m + 60) * e4 ** 3
           + (2401 * m3 - 2058 * m2 + 441 * m - 21) * e4 ** 4)
    return B.exp(2 * m) * num / (3 * B.expm1(4 * m) ** 6)


_int("C_161", "T3k1.f1", "0-inf", [], 0.0556826)
_int("C_162", "U3k1.g2", "1-inf", [], 0.0332989)
_int("C_163", "U3k1.g2", "0-1", [("1/4", 0)], 0.0452349)
_int("C_164", "U3k1.g3", "1-inf", [], 0.0968758)
_int("C_165", "U3k1.g3", "0-1", [("1/2", 1), ("-1/4", 0)], 0.205491)
_int("C_166", "U3k1.g4", "1-inf", [("3/4", 2)], -0.56128)
_int("C_167", "U3k1.g4", "0-1", [("3/4", 2), ("-11/24", 0)], 0.251585)
_int("C_168", "U3k1.g5", "1-inf", [("9/8", 3)], -0.280511)
_int("C_169", "U3k1.g5", "0-1", [("9/8", 3), ("-1/3", 1)], 0.00467345,
     printed_counterterms=[("9/8", 3), ("1/3", 1)])
_agg("K_161", ["C_162", "C_163"], 0.0785338)
_agg("K_162", ["C_164", "C_165"], 0.302367)
_agg("K_163", ["C_166", "C_167"], -0.309695)
_agg("K_164", ["C_168", "C_169"], -0.275837)
SERIES_CONSTANTS["U3k1"] = ("C_161", "K_161", "K_162", "K_163", "K_164")

# U0(2 eta) ------------------------------------------------------------------

@_kernel("U0k2.g2", "2e^{4m}(1+3e^{4m})/P^3")
def _(m, B):
    e4 = B.exp(4 * m)
    return 2 * e4 * (1 + 3 * e4) / B.expm1(4 * m) ** 3


_int("C_171", "T0k2.f1", "1-inf", [("1/16", 2)], -0.0578357)
_int("C_172", "T0k2.f1", "0-1", [("1/16", 2), ("-1/12", 0)], 0.016169)
_int("C_173", "U0k2.g2", "0-inf", [("1/8", 3), ("1/8", 2)], -0.159166)
_agg("K_171", ["C_171", "C_172"], -0.0416667)
SERIES_CONSTANTS["U0k2"] = ("K_171", "C_173")

# U1(2 eta) ------------------------------------------------------------------

@_kernel("U1k2.g2", "e^{4m}(1+4m+(12m-1)e^{4m})/P^3")
def _(m, B):
    e4 = B.exp(4 * m)
    return e4 * (1 + 4 * m + (12 * m - 1) * e4) / B.expm1(4 * m) ** 3


@_kernel("U1k2.g3", "2e^{4m}(1+2m+(32m+2)e^{4m}+(18m-3)e^{8m})/P^4")
def _(m, B):
    e4 = B.exp(4 * m)
    return 2 * e4 * (1 + 2 * m + (32 * m + 2) * e4 + (18 * m - 3) * e4 * e4) / B.expm1(4 * m) ** 4


_int("C_181", "T1k2.f1", "1-inf", [], 0.0116394)
_int("C_182", "T1k2.f1", "0-1", [("1/8", 1)], -0.0599262)
_int("C_183", "U1k2.g2", "1-inf", [("3/16", 2)], -0.121546)
_int("C_184", "U1k2.g2", "0-1", [("3/16", 2), ("1/4", 1), ("1/12", 0)], -0.183361)
_int("C_185", "U1k2.g3", "1-inf", [("9/32", 3), ("3/8", 2)], -0.327741)
_int("C_186", "U1k2.g3", "0-1", [("9/32", 3), ("3/8", 2), ("1/6", 1)], 0.00641461)
_agg("K_181", ["C_181", "C_182"], -0.0482868)
_agg("K_182", ["C_183", "C_184"], -0.304907)
_agg("K_183", ["C_185", "C_186"], -0.321327)
SERIES_CONSTANTS["U1k2"] = ("K_181", "K_182", "K_183")

# U2(2 eta) ------------------------------------------------------------------

@_kernel("U2k2.g2", "4m e^{4m}(1+2m+(6m-1)e^{4m})/P^3")
def _(m, B):
    e4 = B.exp(4 * m)
    return 4 * m * e4 * (1 + 2 * m + (6 * m - 1) * e4) / B.expm1(4 * m) ** 3


@_kernel("U2k2.g3", "e^{4m}(1+8m+8m^2+(128m^2+16m-2)e^{4m}+(72m^2-24m+1)e^{8m})/P^4")
def _(m, B):
    e4 = B.exp(4 * m)
    num = 1 + 8 * m + 8 * m * m + (128 * m * m + 16 * m - 2) * e4 + (72 * m * m - 24 * m + 1) * e4 * e4
    return e4 * num / B.expm1(4 * m) ** 4


@_kernel("U2k2.g4", "2e^{4m}(3+12m+8m^2+(536m^2+180m+3)e^{4m}+(1160m^2-84m-15)e^{8m}+(216m^2-108m+9)e^{12m})/(3P^5)",
         printed="e^{4m}(3+12m+8m^2+(536m^2+180m+3)e^{4m}+(1160m^2-84m-15)e^{8m}+(216m^2-108m+9)e^{12m})/(3P^5)")
def _(m, B):
    e4 = B.exp(4 * m)
    m2 = m * m
    num = (3 + 12 * m + 8 * m2 + (536 * m2 + 180 * m + 3) * e4
           + (1160 * m2 - 84 * m - 15) * e4 ** 2 + (216 * m2 - 108 * m + 9) * e4 ** 3)
    return 2 * e4 * num / (3 * B.expm1(4 * m) ** 5)


_int("C_191", "T2k2.f1", "1-inf", [], 0.0302001)
_int("C_192", "T2k2.f1", "0-1", [("1/4", 0)], -0.0745833)
_int("C_193", "U2k2.g2", "1-inf", [], 0.159701)
_int("C_194", "U2k2.g2", "0-1", [("1/4", 1), ("1/2", 0)], -0.0950408)
_int("C_195", "U2k2.g3", "1-inf", [("3/8", 2)], 0.0472824)
_int("C_196", "U2k2.g3", "0-1", [("3/8", 2), ("1/2", 1), ("1/4", 0)], 0.117059)
_int("C_197", "U2k2.g4", "1-inf", [("9/16", 3), ("3/4", 2)], -0.279644)
_int("C_198", "U2k2.g4", "0-1", [("9/16", 3), ("3/4", 2), ("1/3", 1)], 0.109213)
_agg("K_191", ["C_191", "C_192"], -0.0443832)
_agg("K_192", ["C_193", "C_194"], 0.0646599)
_agg("K_193", ["C_195", "C_196"], 0.164342)
_agg("K_194", ["C_197", "C_198"], -0.170431)
SERIES_CONSTANTS["U2k2"] = ("K_191", "K_192", "K_193", "K_194")

# U3(2 eta) ------------------------------------------------------------------

@_kernel("U3k2.g2", "4m^2 e^{4m}(3+4m+(12m-3)e^{4m})/P^3")
def _(m, B):
    e4 = B.exp(4 * m)
    return 4 * m * m * e4 * (3 + 4 * m + (12 * m - 3) * e4) / B.expm1(4 * m) ** 3


@_kernel("U3k2.g3", "2m e^{4m}(3+12m+8m^2+(128m^2+24m-6)e^{4m}+(72m^2-36m+3)e^{8m})/P^4")
def _(m, B):
    e4 = B.exp(4 * m)
    num = 3 + 12 * m + 8 * m * m + (128 * m * m + 24 * m - 6) * e4 + (72 * m * m - 36 * m + 3) * e4 * e4
    return 2 * m * e4 * num / B.expm1(4 * m) ** 4


@_kernel("U3k2.g4", "e^{4m}(3+36m+72m^2+32m^3+(2144m^3+1080m^2+36m-9)e^{4m}"
                       "+(4640m^3-504m^2-180m+9)e^{8m}+(864m^3-648m^2+108m-3)e^{12m})/(3P^5)")
def _(m, B):
    e4 = B.exp(4 * m)
    m2, m3 = m * m, m ** 3
    num = (3 + 36 * m + 72 * m2 + 32 * m3 + (2144 * m3 + 1080 * m2 + 36 * m - 9) * e4
           + (4640 * m3 - 504 * m2 - 180 * m + 9) * e4 ** 2 + (864 * m3 - 648 * m2 + 108 * m - 3) * e4 ** 3)
    return e4 * num / (3 * B.expm1(4 * m) ** 5)


@_kernel("U3k2.g5", "2e^{4m}(3+18m+24m^2+8m^3+(2128m^3+1584m^2+252m)e^{4m}+(11920m^3+1872m^2-396m-18)e^{8m}"
                       "+(8528m^3-2832m^2-36m+24)e^{12m}+(648m^3-648m^2+162m-9)e^{16m})/(3P^6)")
def _(m, B):
    e4 = B.exp(4 * m)
    m2, m3 = m * m, m ** 3
    num = (3 + 18 * m + 24 * m2 + 8 * m3 + (2128 * m3 + 1584 * m2 + 252 * m) * e4
           + (11920 * m3 + 1872 * m2 - 396 * m - 18) * e4 ** 2
           + (8528 * m3 - 2832 * m2 - 36 * m + 24) * e4 ** 3
           + (648 * m3 - 648 * m2 + 162 * m - 9) * e4 ** 4)
    return 2 * e4 * num / (3 * B.expm1(4 * m) ** 6)


_int("C_201", "T3k2.f1", "0-inf", [], 0.225386)
_int("C_202", "U3k2.g2", "1-inf", [], 0.407214)
_int("C_203", "U3k2.g2", "0-1", [("1/4", 0)], 0.410407)
_int("C_204", "U3k2.g3", "1-inf", [], 1.00228)
_int("C_205", "U3k2.g3", "0-1", [("1/2", 1), ("1/2", 0)], 0.442949)
_int("C_206", "U3k2.g4", "1-inf", [("3/4", 2)], 0.900755)
_int("C_207", "U3k2.g4", "0-1", [("3/4", 2), ("1", 1), ("5/12", 0)], 0.0770848)
_int("C_208", "U3k2.g5", "1-inf", [("9/8", 3), ("3/2", 2)], 0.0290593)
_int("C_209", "U3k2.g5", "0-1", [("9/8", 3), ("3/2", 2), ("2/3", 1)], -0.0857387)
_agg("K_201", ["C_202", "C_203"], 0.817622)
_agg("K_202", ["C_204", "C_205"], 1.44523)
_agg("K_203", ["C_206", "C_207"], 0.977839)
_agg("K_204", ["C_208", "C_209"], -0.0566794)
SERIES_CONSTANTS["U3k2"] = ("C_201", "K_201", "K_202", "K_203", "K_204")

# U0(3 eta) ------------------------------------------------------------------

@_kernel("U0k3.g2", "e^{6m}(3+5e^{4m})/P^3")
def _(m, B):
    return B.exp(6 * m) * (3 + 5 * B.exp(4 * m)) / B.expm1(4 * m) ** 3


_int("C_211", "T0k3.f1", "1-inf", [("1/16", 2)], 0.00600775)
_int("C_212", "T0k3.f1", "0-1", [("1/16", 2), ("1/8", 1), ("1/24", 0)], -0.0476744)
_int("C_213", "U0k3.g2", "1-inf", [("1/8", 3), ("5/16", 2)], -0.0290443)
_int("C_214", "U0k3.g2", "0-1", [("1/8", 3), ("5/16", 2), ("3/8", 1)], 0.070711)
_agg("K_211", ["C_211", "C_212"], -0.0416667)
_agg("K_212", ["C_213", "C_214"], 0.0416667)
SERIES_CONSTANTS["U0k3"] = ("K_211", "K_212")

# U1(3 eta) ------------------------------------------------------------------

@_kernel("U1k3.g2", "e^{6m}(1+6m+(10m-1)e^{4m})/P^3")
def _(m, B):
    return B.exp(6 * m) * (1 + 6 * m + (10 * m - 1) * B.exp(4 * m)) / B.expm1(4 * m) ** 3


@_kernel("U1k3.g3", "e^{6m}(3+9m+(70m+2)e^{4m}+(25m-5)e^{8m})/P^4")
def _(m, B):
    e4 = B.exp(4 * m)
    return B.exp(6 * m) * (3 + 9 * m + (70 * m + 2) * e4 + (25 * m - 5) * e4 * e4) / B.expm1(4 * m) ** 4


_int("C_221", "T1k3.f1", "1-inf", [], 0.204961)
_int("C_222", "T1k3.f1", "0-1", [("1/8", 1), ("1/4", 0)], -0.0215362)
_int("C_223", "U1k3.g2", "1-inf", [("3/16", 2)], 0.776757)
_int("C_224", "U1k3.g2", "0-1", [("3/16", 2), ("1/2", 1), ("17/24", 0)], 0.0651856)
_int("C_225", "U1k3.g3", "1-inf", [("9/32", 3), ("3/4", 2)], 1.38567)
_int("C_226", "U1k3.g3", "0-1", [("9/32", 3), ("3/4", 2), ("11/12", 1)], 1.14317)
_agg("K_221", ["C_221", "C_222"], 0.183425)
_agg("K_222", ["C_223", "C_224"], 0.841942)
_agg("K_223", ["C_225", "C_226"], 2.52884)
SERIES_CONSTANTS["U1k3"] = ("K_221", "K_222", "K_223")

# U2(3 eta) ------------------------------------------------------------------

@_kernel("U2k3.g2", "4m e^{6m}(1+3m+(5m-1)e^{4m})/P^3")
def _(m, B):
    return 4 * m * B.exp(6 * m) * (1 + 3 * m + (5 * m - 1) * B.exp(4 * m)) / B.expm1(4 * m) ** 3


@_kernel("U2k3.g3", "e^{6m}(1+12m+18m^2+(140m^2+8m-2)e^{4m}+(50m^2-20m+1)e^{8m})/P^4")
def _(m, B):
    e4 = B.exp(4 * m)
    num = 1 + 12 * m + 18 * m * m + (140 * m * m + 8 * m - 2) * e4 + (50 * m * m - 20 * m + 1) * e4 * e4
    return B.exp(6 * m) * num / B.expm1(4 * m) ** 4


@_kernel("U2k3.g4", "e^{6m}(9+54m+54m^2+(1438m^2+366m-3)e^{4m}+(2098m^2-270m-21)e^{8m}+(250m^2-150m+15)e^{12m})/(3P^5)")
def _(m, B):
    e4 = B.exp(4 * m)
    m2 = m * m
    num = (9 + 54 * m + 54 * m2 + (1438 * m2 + 366 * m - 3) * e4
           + (2098 * m2 - 270 * m - 21) * e4 ** 2 + (250 * m2 - 150 * m + 15) * e4 ** 3)
    return B.exp(6 * m) * num / (3 * B.expm1(4 * m) ** 5)


_int("C_231", "T2k3.f1", "1-inf", [], 0.681334)
_int("C_232", "T2k3.f1", "0-1", [("1/4", 0)], 0.211416)
_int("C_233", "U2k3.g2", "1-inf", [], 3.01566)
_int("C_234", "U2k3.g2", "0-1", [("1/4", 1), ("3/4", 0)], 0.779446)
_int("C_235", "U2k3.g3", "1-inf", [("3/8", 2)], 6.28767)
_int("C_236", "U2k3.g3", "0-1", [("3/8", 2), ("1", 1), ("9/8", 0)], 1.152)
_int("C_237", "U2k3.g4", "1-inf", [("9/16", 3), ("3/2", 2)], 8.08805)
_int("C_238", "U2k3.g4", "0-1", [("9/16", 3), ("3/2", 2), ("11/6", 1)], 1.92445)
_agg("K_231", ["C_231", "C_232"], 0.89275)
_agg("K_232", ["C_233", "C_234"], 3.7951)
_agg("K_233", ["C_235", "C_236"], 7.43967)
_agg("K_234", ["C_237", "C_238"], 10.0125)
SERIES_CONSTANTS["U2k3"] = ("K_231", "K_232", "K_233", "K_234")

# U3(3 eta) ------------------------------------------------------------------

@_kernel("U3k3.g2", "4m^2 e^{6m}(3+6m+(10m-3)e^{4m})/P^3")
def _(m, B):
    return 4 * m * m * B.exp(6 * m) * (3 + 6 * m + (10 * m - 3) * B.exp(4 * m)) / B.expm1(4 * m) ** 3


@_kernel("U3k3.g3", "2m e^{6m}(3+18m+18m^2+(140m^2+12m-6)e^{4m}+(50m^2-30m+3)e^{8m})/P^4")
def _(m, B):
    e4 = B.exp(4 * m)
    num = 3 + 18 * m + 18 * m * m + (140 * m * m + 12 * m - 6) * e4 + (50 * m * m - 30 * m + 3) * e4 * e4
    return 2 * m * B.exp(6 * m) * num / B.expm1(4 * m) ** 4


@_kernel("U3k3.g4", "e^{6m}(3+54m+162m^2+108m^3+(2876m^3+1098m^2-18m-9)e^{4m}"
                       "+(4196m^3-810m^2-126m+9)e^{8m}+(500m^3-450m^2+90m-3)e^{12m})/(3P^5)")
def _(m, B):
    e4 = B.exp(4 * m)
    m2, m3 = m * m, m ** 3
    num = (3 + 54 * m + 162 * m2 + 108 * m3 + (2876 * m3 + 1098 * m2 - 18 * m - 9) * e4
           + (4196 * m3 - 810 * m2 - 126 * m + 9) * e4 ** 2 + (500 * m3 - 450 * m2 + 90 * m - 3) * e4 ** 3)
    return B.exp(6 * m) * num / (3 * B.expm1(4 * m) ** 5)


@_kernel("U3k3.g5", "e^{6m}(9+81m+162m^2+81m^3+(6700m^3+4152m^2+468m-12)e^{4m}+(25766m^3+1980m^2-954m-18)e^{8m}"
                       "+(13292m^3-5544m^2+180m+36)e^{12m}+(625m^3-750m^2+225m-15)e^{16m})/(3P^6)")
def _(m, B):
    e4 = B.exp(4 * m)
    m2, m3 = m * m, m ** 3
    num = (9 + 81 * m + 162 * m2 + 81 * m3 + (6700 * m3 + 4152 * m2 + 468 * m - 12) * e4
           + (25766 * m3 + 1980 * m2 - 954 * m - 18) * e4 ** 2
           + (13292 * m3 - 5544 * m2 + 180 * m + 36) * e4 ** 3
           + (625 * m3 - 750 * m2 + 225 * m - 15) * e4 ** 4)
    return B.exp(6 * m) * num / (3 * B.expm1(4 * m) ** 6)


_int("C_241", "T3k3.f1", "0-inf", [], 3.09972)
_int("C_242", "U3k3.g2", "1-inf", [], 10.9156)
_int("C_243", "U3k3.g2", "0-1", [("1/4", 0)], 1.56177)
_int("C_244", "U3k3.g3", "1-inf", [], 22.97)
_int("C_245", "U3k3.g3", "0-1", [("1/2", 1), ("5/4", 0)], 1.9442)
_int("C_246", "U3k3.g4", "1-inf", [("3/4", 2)], 31.5006)
_int("C_247", "U3k3.g4", "0-1", [("3/4", 2), ("2", 1), ("61/24", 0)], 1.1744)
_int("C_248", "U3k3.g5", "1-inf", [("9/8", 3), ("3", 2)], 30.8516)
_int("C_249", "U3k3.g5", "0-1", [("9/8", 3), ("3", 2), ("11/3", 1)], 3.12108)
_agg("K_241", ["C_242", "C_243"], 12.4774)
_agg("K_242", ["C_244", "C_245"], 24.9142)
_agg("K_243", ["C_246", "C_247"], 32.675)
_agg("K_244", ["C_248", "C_249"], 33.9727)
SERIES_CONSTANTS["U3k3"] = ("C_241", "K_241", "K_242", "K_243", "K_244")
