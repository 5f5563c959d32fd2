"""Command line entry point: ``nearcontact {constants,series,sweep,forces,report}``.

Exit codes: 0 success, 2 validation failure or bad input, 1 runtime error.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
import time
from pathlib import Path

from .asymptotics import PROFILES, eval_series_asymptotic
from .errors import ConfigurationError, DomainError, IncompleteInputError, NearContactError
from .forces import force_components, load_recipes
from .model import EtaMap, FieldConfig, NearContactGeometry, SeriesId
from .quadrature import build_constant_table
from .series import Method, eval_series_direct
from .sweep import (
    REFERENCE_ERRORS,
    SweepConfig,
    categorize,
    check_reference,
    emit_reports,
    run_error_sweep,
    run_force_sweep,
)

EXIT_OK, EXIT_RUNTIME, EXIT_VALIDATION = 0, 1, 2

log = logging.getLogger("nearcontact")


def _cmd_constants(args) -> int:
    table = build_constant_table(abs_tol=args.abs_tol)
    bad = table.failures(args.tol, printed_rounding=not args.strict, include_anomalies=False)
    anomalies = [e for e in table.rows() if e.note]
    if args.out:
        Path(args.out).write_text(table.to_json() + "\n", encoding="utf-8")
    print(f"{len(table.entries)} constants in {table.elapsed:.2f} s (abs_tol={args.abs_tol:g})")
    for e in anomalies:
        printed = "-" if e.printed is None else f"{e.printed:.6g}"
        print(f"  flagged {e.label:6s} computed={e.computed:.9g} printed={printed}  {e.note}")
    for e in bad:
        print(f"  MISMATCH {e.label:6s} computed={e.computed:.9g} printed={e.printed:.6g} |d|={e.abs_err:.2e}")
    return EXIT_VALIDATION if bad else EXIT_OK


def _cmd_series(args) -> int:
    sid = SeriesId.parse(args.id)
    geo = NearContactGeometry.from_xi(args.xi, EtaMap(args.eta_map))
    prof = PROFILES[args.profile]
    out = {"series": sid.label, "xi": geo.xi, "eta1": geo.eta1}
    if args.method in ("direct", "both"):
        d = eval_series_direct(sid, geo.eta1, args.rel_tol)
        out["direct"] = {"value": d.value, "terms": d.terms_used, "tail_bound": d.tail_bound}
    if args.method in ("asymptotic", "both"):
        a = eval_series_asymptotic(sid, geo.eta1, prof.constant_table(), euler_gamma=prof.euler_gamma,
                                   variant=prof.variant)
        out["asymptotic"] = {"value": a.value, "profile": prof.name, "warnings": list(a.warnings)}
    if args.method == "both":
        out["pct_error"] = 100.0 * abs(out["direct"]["value"] - out["asymptotic"]["value"]) / abs(out["direct"]["value"])
    print(json.dumps(out, indent=2))
    return EXIT_OK


def _cmd_forces(args) -> int:
    recipes = load_recipes(args.recipes)
    geo = NearContactGeometry.from_xi(args.xi)
    fc = FieldConfig(args.alpha, args.beta, args.theta)
    res = force_components(geo, fc, Method(args.method), recipes, profile=args.profile)
    print(json.dumps({"xi": geo.xi, "eta1": geo.eta1, "fz": res.fz, "fx": res.fx,
                      "coefficients": list(res.coefficients)}, indent=2))
    return EXIT_OK


def _run_report(config: SweepConfig, out: Path) -> int:
    t0 = time.perf_counter()
    result = run_error_sweep(config)
    cats = categorize(result, required=config.series)
    table = config.resolved_profile.constant_table()
    recipes = load_recipes()
    force_rows = run_force_sweep(config, recipes) if recipes.complete else None
    if force_rows is None:
        log.warning("force recipes %s (%s); forces.csv not written", recipes.version, recipes.status)
    written = emit_reports(result, cats, table, out, force_rows)
    print(f"{len(result.rows)} rows, {len(result.failures)} failed, {len(written)} files in {out} "
          f"({time.perf_counter() - t0:.1f} s, profile={config.profile})")

    status = EXIT_OK
    mismatched = [s.label for s, c in cats.items() if s.label in REFERENCE_ERRORS and REFERENCE_ERRORS[s.label][2] != c]
    if mismatched:
        print("category mismatch: " + ", ".join(mismatched))
        status = EXIT_VALIDATION
    if set(REFERENCE_ERRORS) <= {s.label for s in config.series}:
        try:
            checks = check_reference(result)
        except IncompleteInputError:
            checks = []
        off = [c for c in checks if not c.agree]
        print(f"reference table: {len(checks) - len(off)}/{len(checks)} entries agree to 2 significant figures")
        for c in off:
            print(f"  {c.series} xi={c.xi:g}: {c.computed:.3g} vs {c.reference:.3g}")
    if result.failures:
        status = status or EXIT_RUNTIME
    return status


def _cmd_sweep(args) -> int:
    config = SweepConfig.load(args.config) if args.config else SweepConfig()
    out = Path(args.out) if args.out else Path(config.output_dir)
    return _run_report(config, out)


def _cmd_report(args) -> int:
    config = SweepConfig.load(args.config) if args.config else SweepConfig()
    if args.profile:
        config.profile = args.profile
        config.__post_init__()
    return _run_report(config, Path(args.out))


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="nearcontact", description=__doc__.splitlines()[0])
    ap.add_argument("-v", "--verbose", action="store_true")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("constants", help="build and validate the integral constants")
    p.add_argument("--abs-tol", type=float, default=1e-9)
    p.add_argument("--tol", type=float, default=5e-6, help="allowed |computed - printed|")
    p.add_argument("--strict", action="store_true", help="do not widen --tol to the printed precision")
    p.add_argument("--out", help="write the table as JSON")
    p.set_defaults(func=_cmd_constants)

    p = sub.add_parser("series", help="evaluate one series")
    p.add_argument("--id", required=True, help="e.g. T0k1, U2k3, 'T_0(2 eta)'")
    p.add_argument("--xi", type=float, required=True)
    p.add_argument("--method", choices=("direct", "asymptotic", "both"), default="both")
    p.add_argument("--profile", choices=sorted(PROFILES), default="exact")
    p.add_argument("--rel-tol", type=float, default=1e-12)
    p.add_argument("--eta-map", choices=[m.value for m in EtaMap], default=EtaMap.SQRT_APPROX.value)
    p.set_defaults(func=_cmd_series)

    p = sub.add_parser("sweep", help="run a configured sweep and write reports")
    p.add_argument("--config", help="TOML or JSON file with SweepConfig fields")
    p.add_argument("--out", help="override output_dir")
    p.set_defaults(func=_cmd_sweep)

    p = sub.add_parser("forces", help="force components on sphere 2")
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--beta", type=float, required=True)
    p.add_argument("--theta", type=float, required=True)
    p.add_argument("--xi", type=float, required=True)
    p.add_argument("--method", choices=[m.value for m in Method], default=Method.DIRECT.value)
    p.add_argument("--profile", choices=sorted(PROFILES), default="exact")
    p.add_argument("--recipes", help="recipe JSON (default: bundled)")
    p.set_defaults(func=_cmd_forces)

    p = sub.add_parser("report", help="default sweep plus every report file")
    p.add_argument("--out", required=True)
    p.add_argument("--config")
    p.add_argument("--profile", choices=sorted(PROFILES))
    p.set_defaults(func=_cmd_report)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except (DomainError, ConfigurationError, IncompleteInputError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except (NearContactError, OSError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RUNTIME


if __name__ == "__main__":
    raise SystemExit(main())
