"""Separation sweeps, percentage errors, error categories and report files."""

from __future__ import annotations

import csv
import json
import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field, fields
from pathlib import Path

import numpy as np

from .asymptotics import PROFILES, Profile, eval_series_asymptotic
from .errors import ConfigurationError, DomainError, IncompleteInputError, NearContactError
from .forces import RecipeSet, force_components, load_recipes
from .model import ALL_SERIES, EtaMap, FieldConfig, NearContactGeometry, SeriesId
from .quadrature import ConstantTable
from .series import Method, eval_series_direct

try:  # Python 3.11+
    import tomllib
except ModuleNotFoundError:  # pragma: no cover - exercised on 3.10
    import tomli as tomllib

__all__ = [
    "SweepConfig",
    "ErrorRow",
    "SweepResult",
    "ForceRow",
    "TableCheck",
    "REFERENCE_ERRORS",
    "TABLE_XI",
    "xi_grid",
    "run_error_sweep",
    "categorize",
    "category_of",
    "check_reference",
    "agrees_to_sig_figs",
    "run_force_sweep",
    "emit_reports",
    "fmt",
]

log = logging.getLogger(__name__)

TABLE_XI = (1e-3, 1e-2)
CATEGORY_THRESHOLDS = (0.1, 0.5)
DEFAULT_FIELDS = tuple(FieldConfig(1.0, b, math.pi / 4) for b in (0.1, 1.0, 10.0))

# Reference percentage errors at xi = 1e-3 and 1e-2 and the category each
# series is listed under.
REFERENCE_ERRORS: dict[str, tuple[float, float, int]] = {
    "T0k1": (1.70e-5, 1.28e-3, 1), "T1k1": (1.02e-3, 1.93e-2, 1), "T0k2": (3.35e-7, 1.01e-6, 1),
    "T1k2": (2.52e-3, 2.9e-2, 1), "T2k2": (4.07e-4, 1.35e-2, 1), "T1k3": (4.36e-4, 6.95e-3, 1),
    "T2k3": (3.67e-3, 3.76e-2, 1), "T3k3": (1.54e-3, 1.63e-2, 1), "U0k1": (1.18e-4, 1.22e-2, 1),
    "U2k2": (2.28e-4, 4.36e-3, 1), "U3k3": (1.6e-3, 3.12e-2, 1),
    "T2k1": (4.58e-2, 0.444, 2), "T3k2": (1.86e-2, 0.183, 2), "U1k1": (3.33e-2, 0.124, 2),
    "U1k2": (1.8e-2, 0.388, 2), "U3k2": (2.02e-2, 0.228, 2), "U2k3": (2.46e-3, 0.11, 2),
    "T3k1": (7.0e-2, 0.60, 3), "T0k3": (0.4057, 1.208, 3), "U2k1": (5.33e-2, 0.555, 3),
    "U3k1": (8.33e-2, 1.02, 3), "U0k2": (0.146, 1.62, 3), "U0k3": (4.26e-2, 0.91, 3),
    "U1k3": (2.25e-2, 0.812, 3),
}


def fmt(x) -> str:
    """Nine significant digits; the single number format used in every CSV."""
    if isinstance(x, (int, np.integer)) and not isinstance(x, bool):
        return str(int(x))
    x = float(x)
    if math.isnan(x):
        return "nan"
    return format(x, ".9g")


@dataclass
class SweepConfig:
    xi_min: float = 1e-6
    xi_max: float = 1e-2
    points: int = 100
    series_filter: tuple[SeriesId, ...] | None = None
    fields: tuple[FieldConfig, ...] | None = None
    output_dir: str = "out"
    rel_tol: float = 1e-10
    # tighter tolerance at the table points: the smallest listed error is ~3e-9 relative
    table_rel_tol: float = 1e-14
    profile: str = "published"
    eta_map: EtaMap = EtaMap.SQRT_APPROX
    workers: int = 1

    def __post_init__(self):
        self.xi_min, self.xi_max = float(self.xi_min), float(self.xi_max)
        if not (0.0 < self.xi_min < self.xi_max and math.isfinite(self.xi_max)):
            raise DomainError(f"need 0 < xi_min < xi_max, got {self.xi_min!r}, {self.xi_max!r}")
        if int(self.points) != self.points or self.points < 2:
            raise DomainError(f"points must be an integer >= 2, got {self.points!r}")
        self.points = int(self.points)
        if self.series_filter is not None:
            self.series_filter = tuple(SeriesId.parse(s) for s in self.series_filter)
        if self.fields is not None:
            self.fields = tuple(f if isinstance(f, FieldConfig) else FieldConfig(**f) for f in self.fields)
        if self.profile not in PROFILES:
            raise ConfigurationError(f"unknown profile {self.profile!r}; choose from {sorted(PROFILES)}")
        self.eta_map = EtaMap(self.eta_map)
        for name in ("rel_tol", "table_rel_tol"):
            if not (0.0 < float(getattr(self, name)) <= 1e-2):
                raise DomainError(f"{name} must lie in (0, 1e-2], got {getattr(self, name)!r}")
        if int(self.workers) < 1:
            raise DomainError(f"workers must be >= 1, got {self.workers!r}")

    @property
    def series(self) -> tuple[SeriesId, ...]:
        return self.series_filter if self.series_filter is not None else ALL_SERIES

    @property
    def field_list(self) -> tuple[FieldConfig, ...]:
        return self.fields if self.fields is not None else DEFAULT_FIELDS

    @property
    def resolved_profile(self) -> Profile:
        return PROFILES[self.profile]

    @classmethod
    def from_mapping(cls, data: dict) -> "SweepConfig":
        known = {f.name for f in fields(cls)}
        unknown = sorted(set(data) - known)
        if unknown:
            raise ConfigurationError(f"unknown sweep config keys: {unknown}")
        return cls(**data)

    @classmethod
    def load(cls, path) -> "SweepConfig":
        path = Path(path)
        try:
            raw = path.read_bytes()
        except OSError as exc:
            raise ConfigurationError(f"cannot read config {path}: {exc}") from exc
        try:
            if path.suffix.lower() == ".json":
                data = json.loads(raw.decode("utf-8"))
            else:
                data = tomllib.loads(raw.decode("utf-8"))
        except (ValueError, tomllib.TOMLDecodeError) as exc:
            raise ConfigurationError(f"cannot parse config {path}: {exc}") from exc
        return cls.from_mapping(data.get("sweep", data))


def xi_grid(config: SweepConfig) -> np.ndarray:
    """Log-spaced grid with both endpoints, plus the table points when they
    fall inside the range and are not already on the grid."""
    grid = np.logspace(math.log10(config.xi_min), math.log10(config.xi_max), config.points)
    grid[0], grid[-1] = config.xi_min, config.xi_max
    extra = [x for x in TABLE_XI
             if config.xi_min <= x <= config.xi_max and not np.any(np.isclose(grid, x, rtol=1e-12, atol=0.0))]
    return np.unique(np.concatenate([grid, extra])) if extra else grid


@dataclass(frozen=True)
class ErrorRow:
    series: SeriesId
    xi: float
    eta1: float
    direct: float
    asymptotic: float
    pct_error: float
    terms: int


@dataclass
class SweepResult:
    rows: list[ErrorRow]
    failures: list[tuple[str, float, str]] = field(default_factory=list)
    config: SweepConfig | None = None

    def at(self, label: str, xi: float) -> ErrorRow:
        for r in self.rows:
            if r.series.label == label and math.isclose(r.xi, xi, rel_tol=1e-12):
                return r
        raise IncompleteInputError(f"no row for {label} at xi={xi!r}")


def _series_rows(sid: SeriesId, grid, config: SweepConfig, table: ConstantTable):
    prof = config.resolved_profile
    rows, failures = [], []
    for xi in grid:
        xi = float(xi)
        try:
            geo = NearContactGeometry.from_xi(xi, config.eta_map)
            tol = config.rel_tol
            if any(math.isclose(xi, t, rel_tol=1e-12) for t in TABLE_XI):
                tol = min(tol, config.table_rel_tol)
            d = eval_series_direct(sid, geo.eta1, tol)
            a = eval_series_asymptotic(sid, geo.eta1, table, euler_gamma=prof.euler_gamma, variant=prof.variant)
            pct = 100.0 * abs(d.value - a.value) / abs(d.value)
            rows.append(ErrorRow(sid, xi, geo.eta1, d.value, a.value, pct, d.terms_used))
        except NearContactError as exc:
            log.warning("row %s xi=%g skipped: %s", sid.label, xi, exc)
            failures.append((sid.label, xi, str(exc)))
    return rows, failures


def run_error_sweep(config: SweepConfig | None = None) -> SweepResult:
    """Direct and closed-form values for every (series, xi); rows sorted by
    series order, then xi.  A failing row is logged and skipped."""
    config = SweepConfig() if config is None else config
    grid = xi_grid(config)
    table = config.resolved_profile.constant_table()
    series = list(config.series)
    if config.workers > 1:
        with ThreadPoolExecutor(max_workers=config.workers) as pool:
            parts = list(pool.map(lambda s: _series_rows(s, grid, config, table), series))
    else:
        parts = [_series_rows(s, grid, config, table) for s in series]
    order = {s: i for i, s in enumerate(ALL_SERIES)}
    rows = sorted((r for rs, _ in parts for r in rs), key=lambda r: (order[r.series], r.xi))
    failures = [f for _, fs in parts for f in fs]
    return SweepResult(rows, failures, config)


def category_of(pct: float, thresholds=CATEGORY_THRESHOLDS) -> int:
    lo, hi = thresholds
    if pct < lo:
        return 1
    return 2 if pct <= hi else 3


def categorize(rows, xi: float = TABLE_XI[1], thresholds=CATEGORY_THRESHOLDS, *,
               required=ALL_SERIES) -> dict[SeriesId, int]:
    """Category of each series from its percentage error at ``xi``."""
    rows = rows.rows if isinstance(rows, SweepResult) else rows
    at = {r.series: r.pct_error for r in rows if math.isclose(r.xi, xi, rel_tol=1e-12)}
    missing = [s.label for s in required if s not in at]
    if missing:
        raise IncompleteInputError(f"no rows at xi={xi:g} for {', '.join(missing)}")
    return {s: category_of(at[s], thresholds) for s in sorted(at, key=ALL_SERIES.index)}


def agrees_to_sig_figs(value: float, reference: float, digits: int = 2) -> bool:
    """True when ``value`` is within half a unit in the last of ``digits``
    significant figures of ``reference``."""
    if reference == 0.0:
        return value == 0.0
    e = math.floor(math.log10(abs(reference)))
    return abs(value - reference) <= 0.5 * 10.0 ** (e - digits + 1) * (1 + 1e-12)


@dataclass(frozen=True)
class TableCheck:
    series: str
    xi: float
    computed: float
    reference: float
    agree: bool


def check_reference(result: SweepResult, digits: int = 2) -> list[TableCheck]:
    out = []
    for label, (r3, r2, _) in REFERENCE_ERRORS.items():
        for xi, ref in zip(TABLE_XI, (r3, r2)):
            row = result.at(label, xi)
            out.append(TableCheck(label, xi, row.pct_error, ref, agrees_to_sig_figs(row.pct_error, ref, digits)))
    order = {s.label: i for i, s in enumerate(ALL_SERIES)}
    return sorted(out, key=lambda c: (order[c.series], c.xi))


@dataclass(frozen=True)
class ForceRow:
    xi: float
    alpha: float
    beta: float
    theta: float
    component: str
    direct: float
    asymptotic: float
    pct_error: float


def run_force_sweep(config: SweepConfig, recipes: RecipeSet | None = None) -> list[ForceRow]:
    """fz and fx along the grid for each field setting, both methods."""
    recipes = load_recipes() if recipes is None else recipes
    grid = xi_grid(config)
    rows = []
    for fc in config.field_list:
        for xi in grid:
            geo = NearContactGeometry.from_xi(float(xi), config.eta_map)
            d = force_components(geo, fc, Method.DIRECT, recipes, profile=config.profile, rel_tol=config.rel_tol)
            a = force_components(geo, fc, Method.ASYMPTOTIC, recipes, profile=config.profile, rel_tol=config.rel_tol)
            for comp in ("fz", "fx"):
                dv, av = getattr(d, comp), getattr(a, comp)
                pct = 100.0 * abs(dv - av) / abs(dv) if dv != 0.0 else math.nan
                rows.append(ForceRow(float(xi), fc.alpha, fc.beta, fc.theta, comp, dv, av, pct))
    return rows


_PLOT_SCRIPT = '''"""Plot {label}: series and closed form against xi, percentage error inset."""
import csv
import sys
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

here = Path(__file__).resolve().parent
with open(here / "{label}.csv", newline="") as fh:
    rows = list(csv.DictReader(fh))
xi = [float(r["xi"]) for r in rows]
fig, ax = plt.subplots(figsize=(6, 4.5))
ax.loglog(xi, [abs(float(r["direct"])) for r in rows], "b-", label="series")
ax.loglog(xi, [abs(float(r["asymptotic"])) for r in rows], "r--", label="closed form")
ax.set_xlabel("xi")
ax.set_ylabel("|{label}|")
ax.legend(loc="upper right")
inset = ax.inset_axes([0.12, 0.12, 0.38, 0.33])
inset.loglog(xi, [max(float(r["pct_error"]), 1e-300) for r in rows], "k-")
inset.set_title("% error", fontsize=8)
inset.tick_params(labelsize=7)
out = Path(sys.argv[1]) if len(sys.argv) > 1 else here / "{label}.png"
fig.savefig(out, dpi=150, bbox_inches="tight")
'''


def _write_csv(path: Path, header, rows) -> Path:
    try:
        with open(path, "w", newline="", encoding="utf-8") as fh:
            w = csv.writer(fh, lineterminator="\n")
            w.writerow(header)
            w.writerows(rows)
    except OSError as exc:
        raise OSError(f"{path}: {exc}") from exc
    return path


def emit_reports(result: SweepResult, categories: dict[SeriesId, int], constants: ConstantTable,
                 out, force_rows: list[ForceRow] | None = None) -> dict[str, Path]:
    """Write errors.csv, categories.csv, constants.csv, per-series plot data
    and scripts, and forces.csv when force rows are given."""
    out = Path(out)
    plots = out / "plots"
    try:
        plots.mkdir(parents=True, exist_ok=True)
    except OSError as exc:
        raise OSError(f"{plots}: {exc}") from exc
    written: dict[str, Path] = {}

    written["errors"] = _write_csv(
        out / "errors.csv",
        ["series", "xi", "eta1", "direct", "asymptotic", "pct_error", "terms"],
        ([r.series.label, fmt(r.xi), fmt(r.eta1), fmt(r.direct), fmt(r.asymptotic), fmt(r.pct_error), r.terms]
         for r in result.rows),
    )

    cat_rows = []
    for sid, cat in categories.items():
        ref = REFERENCE_ERRORS.get(sid.label)
        pct = [result.at(sid.label, x).pct_error if _has(result, sid.label, x) else math.nan for x in TABLE_XI]
        cat_rows.append([
            sid.label, fmt(pct[0]), fmt(ref[0]) if ref else "", fmt(pct[1]), fmt(ref[1]) if ref else "",
            cat, ref[2] if ref else "", "yes" if ref and ref[2] == cat else "no",
        ])
    written["categories"] = _write_csv(
        out / "categories.csv",
        ["series", "pct_1e-3", "reference_1e-3", "pct_1e-2", "reference_1e-2", "category",
         "reference_category", "category_match"],
        cat_rows,
    )

    written["constants"] = _write_csv(
        out / "constants.csv",
        ["label", "kind", "computed", "printed", "abs_err", "rational", "note"],
        ([e.label, e.kind, fmt(e.computed), "" if e.printed is None else fmt(e.printed),
          "" if e.abs_err is None else fmt(e.abs_err), e.rational or "", e.note or ""]
         for e in constants.rows()),
    )

    by_series: dict[str, list[ErrorRow]] = {}
    for r in result.rows:
        by_series.setdefault(r.series.label, []).append(r)
    for label, rows in by_series.items():
        written[f"plot:{label}"] = _write_csv(
            plots / f"{label}.csv", ["xi", "direct", "asymptotic", "pct_error"],
            ([fmt(r.xi), fmt(r.direct), fmt(r.asymptotic), fmt(r.pct_error)] for r in rows),
        )
        script = plots / f"plot_{label}.py"
        script.write_text(_PLOT_SCRIPT.format(label=label), encoding="utf-8", newline="\n")
        written[f"script:{label}"] = script

    if force_rows is not None:
        written["forces"] = _write_csv(
            out / "forces.csv",
            ["xi", "alpha", "beta", "theta", "component", "direct", "asymptotic", "pct_error"],
            ([fmt(r.xi), fmt(r.alpha), fmt(r.beta), fmt(r.theta), r.component, fmt(r.direct),
              fmt(r.asymptotic), fmt(r.pct_error)] for r in force_rows),
        )
    return written


def _has(result, label, xi):
    try:
        result.at(label, xi)
        return True
    except IncompleteInputError:
        return False
