"""Force coefficients F1..F10 and the force components on sphere 2.

The algebraic dependence of each F_n on the 24 series lives in a data file,
not in code.  A recipe is an expression tree in prefix notation::

    ["+", ["*", ["q", "1/2"], ["series", "T0k1"]], ["/", ["series", "U1k2"], ["eta"]]]

Nodes: numbers, ``["q", "p/q"]`` rationals, ``["series", id]``, ``["eta"]``,
``["xi"]``, the arithmetic operators ``+ - * / ^`` and the unary functions
``exp log sqrt sinh cosh tanh coth csch``.  The file carries a SHA-256 of its
canonical recipe list so any edit to a transcription is visible.
"""

from __future__ import annotations

import hashlib
import json
import math
import threading
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources
from pathlib import Path

from .asymptotics import PROFILES, Profile, eval_series_asymptotic
from .errors import ConfigurationError, ConvergenceError, DomainError
from .model import FieldConfig, NearContactGeometry, SeriesId
from .series import DEFAULT_REL_TOL, Method, eval_series_direct

__all__ = [
    "CoefficientRecipe",
    "RecipeSet",
    "ForceResult",
    "load_recipes",
    "recipe_checksum",
    "eval_coefficients",
    "force_from_coefficients",
    "force_components",
    "clear_cache",
    "N_COEFFICIENTS",
]

N_COEFFICIENTS = 10

_UNARY = {
    "exp": math.exp,
    "log": math.log,
    "sqrt": math.sqrt,
    "sinh": math.sinh,
    "cosh": math.cosh,
    "tanh": math.tanh,
    "coth": lambda x: 1.0 / math.tanh(x),
    "csch": lambda x: 1.0 / math.sinh(x),
}


def _compile(node, where):
    """Turn a prefix tree into (callable(env) -> float, frozenset of series)."""
    if isinstance(node, bool):
        raise ConfigurationError(f"{where}: booleans are not expressions")
    if isinstance(node, (int, float)):
        v = float(node)
        return (lambda env: v), frozenset()
    if not isinstance(node, list) or not node or not isinstance(node[0], str):
        raise ConfigurationError(f"{where}: malformed node {node!r}")
    op, args = node[0], node[1:]
    if op == "q":
        if len(args) != 1:
            raise ConfigurationError(f"{where}: 'q' takes one rational string")
        try:
            v = float(Fraction(str(args[0])))
        except (ValueError, ZeroDivisionError) as exc:
            raise ConfigurationError(f"{where}: bad rational {args[0]!r}") from exc
        return (lambda env: v), frozenset()
    if op == "series":
        if len(args) != 1:
            raise ConfigurationError(f"{where}: 'series' takes one id")
        try:
            label = SeriesId.parse(args[0]).label
        except DomainError as exc:
            raise ConfigurationError(f"{where}: {exc}") from exc
        return (lambda env: env[label]), frozenset([label])
    if op in ("eta", "xi"):
        if args:
            raise ConfigurationError(f"{where}: '{op}' takes no arguments")
        return (lambda env: env[op]), frozenset()

    parts = [_compile(a, where) for a in args]
    fns = [f for f, _ in parts]
    deps = frozenset().union(*(d for _, d in parts)) if parts else frozenset()
    if op == "+" and fns:
        return (lambda env: math.fsum(f(env) for f in fns)), deps
    if op == "*" and fns:
        def mul(env):
            out = 1.0
            for f in fns:
                out *= f(env)
            return out
        return mul, deps
    if op == "-" and len(fns) == 1:
        f = fns[0]
        return (lambda env: -f(env)), deps
    if op == "-" and len(fns) == 2:
        a, b = fns
        return (lambda env: a(env) - b(env)), deps
    if op == "/" and len(fns) == 2:
        a, b = fns
        return (lambda env: a(env) / b(env)), deps
    if op == "^" and len(args) == 2 and isinstance(args[1], int) and not isinstance(args[1], bool):
        a, n = fns[0], args[1]
        return (lambda env: a(env) ** n), deps
    if op in _UNARY and len(fns) == 1:
        g, f = _UNARY[op], fns[0]
        return (lambda env: g(f(env))), deps
    raise ConfigurationError(f"{where}: unsupported node {op!r} with {len(args)} argument(s)")


@dataclass(frozen=True)
class CoefficientRecipe:
    id: int
    expression: object  # the prefix tree as loaded
    note: str = ""

    def __post_init__(self):
        if not (isinstance(self.id, int) and 1 <= self.id <= N_COEFFICIENTS):
            raise ConfigurationError(f"recipe id must be 1..{N_COEFFICIENTS}, got {self.id!r}")
        fn, deps = _compile(self.expression, f"F{self.id}")
        object.__setattr__(self, "_fn", fn)
        object.__setattr__(self, "_deps", deps)

    @property
    def series(self) -> frozenset[str]:
        return self._deps

    def evaluate(self, env) -> float:
        return self._fn(env)


def recipe_checksum(recipes: list) -> str:
    canonical = json.dumps(recipes, sort_keys=True, separators=(",", ":"), ensure_ascii=True)
    return hashlib.sha256(canonical.encode("ascii")).hexdigest()


@dataclass(frozen=True)
class RecipeSet:
    recipes: tuple[CoefficientRecipe, ...]
    version: str
    status: str
    source: str
    checksum: str

    @property
    def complete(self) -> bool:
        return sorted(r.id for r in self.recipes) == list(range(1, N_COEFFICIENTS + 1))

    @property
    def missing(self) -> list[int]:
        have = {r.id for r in self.recipes}
        return [n for n in range(1, N_COEFFICIENTS + 1) if n not in have]

    @property
    def series(self) -> tuple[str, ...]:
        return tuple(sorted(frozenset().union(*(r.series for r in self.recipes)))) if self.recipes else ()

    @classmethod
    def from_mapping(cls, data: dict, verify: bool = True) -> "RecipeSet":
        try:
            raw = data["recipes"]
            version = str(data["version"])
            status = str(data.get("status", ""))
            source = str(data.get("source", ""))
            stored = data.get("checksum")
        except (KeyError, TypeError) as exc:
            raise ConfigurationError(f"recipe file lacks field {exc}") from None
        if not isinstance(raw, list):
            raise ConfigurationError("'recipes' must be a list")
        actual = recipe_checksum(raw)
        if verify and stored != actual:
            raise ConfigurationError(f"recipe checksum mismatch: file says {stored!r}, content hashes to {actual!r}")
        recipes = []
        for item in raw:
            if not isinstance(item, dict) or "id" not in item or "expression" not in item:
                raise ConfigurationError(f"malformed recipe entry {item!r}")
            recipes.append(CoefficientRecipe(item["id"], item["expression"], str(item.get("note", ""))))
        ids = [r.id for r in recipes]
        if len(ids) != len(set(ids)):
            raise ConfigurationError(f"duplicate recipe ids in {ids}")
        return cls(tuple(sorted(recipes, key=lambda r: r.id)), version, status, source, actual)


def load_recipes(path: str | Path | None = None) -> RecipeSet:
    """Load and verify a recipe file; the bundled one when ``path`` is None."""
    try:
        if path is None:
            text = resources.files("nearcontact").joinpath("data/recipes.json").read_text("utf-8")
        else:
            text = Path(path).read_text("utf-8")
    except OSError as exc:
        raise ConfigurationError(f"cannot read recipe file {path!r}: {exc}") from exc
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigurationError(f"recipe file {path!r} is not valid JSON: {exc}") from exc
    return RecipeSet.from_mapping(data)


@dataclass(frozen=True)
class ForceResult:
    fz: float
    fx: float
    coefficients: tuple[float, ...]
    method: Method


_cache: dict[tuple, tuple[float, ...]] = {}
_cache_lock = threading.Lock()


def clear_cache() -> None:
    with _cache_lock:
        _cache.clear()


def _resolve_profile(profile) -> Profile:
    if isinstance(profile, Profile):
        return profile
    try:
        return PROFILES[profile]
    except KeyError:
        raise ConfigurationError(f"unknown profile {profile!r}; choose from {sorted(PROFILES)}") from None


def _series_values(labels, geometry, method, profile, rel_tol):
    if method is Method.DIRECT:
        return {lab: eval_series_direct(lab, geometry.eta1, rel_tol).value for lab in labels}
    table = profile.constant_table()
    return {
        lab: eval_series_asymptotic(lab, geometry.eta1, table, euler_gamma=profile.euler_gamma,
                                    variant=profile.variant).value
        for lab in labels
    }


def eval_coefficients(geometry: NearContactGeometry, method=Method.DIRECT, recipes: RecipeSet | None = None, *,
                      profile="exact", rel_tol: float = DEFAULT_REL_TOL) -> tuple[float, ...]:
    """F1..F10 at one geometry.  Results are cached per (geometry, method,
    profile, tolerance, recipe checksum)."""
    method = Method(method)
    recipes = load_recipes() if recipes is None else recipes
    if not recipes.complete:
        raise ConfigurationError(
            f"recipe set {recipes.version!r} ({recipes.status or 'no status'}) lacks F{recipes.missing}; "
            "force coefficients need all ten"
        )
    prof = _resolve_profile(profile)
    key = (geometry.xi, geometry.eta1, method, prof, float(rel_tol), recipes.checksum)
    with _cache_lock:
        hit = _cache.get(key)
    if hit is not None:
        return hit
    env = _series_values(recipes.series, geometry, method, prof, rel_tol)
    env["eta"] = geometry.eta1
    env["xi"] = geometry.xi
    values = tuple(r.evaluate(env) for r in recipes.recipes)
    with _cache_lock:
        _cache.setdefault(key, values)
    return values


def force_from_coefficients(F, field: FieldConfig) -> tuple[float, float]:
    """(fz, fx) on sphere 2 for coefficients F = (F1, ..., F10)."""
    if len(F) != N_COEFFICIENTS:
        raise DomainError(f"need {N_COEFFICIENTS} coefficients, got {len(F)}")
    F1, F2, F3, F4, F5, F6, F7, F8, F9, F10 = (float(v) for v in F)
    a, b, t = field.alpha, field.beta, field.theta
    c, s = math.cos(t), math.sin(t)
    fz = b * b * (F1 * c * c + F2 * s * s) + b * c * (F3 * a + F4) + (F5 * a * a + F6 * a + F7) + b * c
    fx = b * b * F8 * math.sin(2.0 * t) + b * s * (F9 * a + F10) + b * s
    return fz, fx


def force_components(geometry: NearContactGeometry, field: FieldConfig, method=Method.DIRECT,
                     recipes: RecipeSet | None = None, *, profile="exact",
                     rel_tol: float = DEFAULT_REL_TOL) -> ForceResult:
    method = Method(method)
    F = eval_coefficients(geometry, method, recipes, profile=profile, rel_tol=rel_tol)
    fz, fx = force_from_coefficients(F, field)
    if not (math.isfinite(fz) and math.isfinite(fx)):
        raise ConvergenceError(f"non-finite force at xi={geometry.xi!r}", diagnostics={"coefficients": F})
    return ForceResult(fz, fx, F, method)
