"""Series and closed forms for two nearly touching conducting spheres.

The 24 slowly convergent series ``T_m(k eta1)`` and ``U_m(k eta1)`` are
summed directly, approximated by matched-asymptotic closed forms whose
integral constants are computed by quadrature, and compared over a
separation sweep.
"""

from .asymptotics import (
    EULER_GAMMA,
    PROFILES,
    Profile,
    asymptotic_form,
    default_constants,
    eval_series_asymptotic,
    t0_inner,
    t0_outer,
    u0_inner,
    u0_outer,
)
from .errors import ConfigurationError, ConvergenceError, DomainError, IncompleteInputError, NearContactError
from .forces import ForceResult, RecipeSet, eval_coefficients, force_components, force_from_coefficients, load_recipes
from .model import ALL_SERIES, EtaMap, FieldConfig, NearContactGeometry, SeriesId, eta_from_xi
from .quadrature import ConstantTable, build_constant_table, eval_constant
from .series import EvalReport, Method, eval_series_direct
from .sweep import SweepConfig, categorize, emit_reports, run_error_sweep

__version__ = "0.1.0"

__all__ = [
    "ALL_SERIES",
    "EULER_GAMMA",
    "PROFILES",
    "ConfigurationError",
    "ConstantTable",
    "ConvergenceError",
    "DomainError",
    "EtaMap",
    "EvalReport",
    "FieldConfig",
    "ForceResult",
    "IncompleteInputError",
    "Method",
    "NearContactError",
    "NearContactGeometry",
    "Profile",
    "RecipeSet",
    "SeriesId",
    "SweepConfig",
    "asymptotic_form",
    "build_constant_table",
    "categorize",
    "default_constants",
    "emit_reports",
    "eta_from_xi",
    "eval_coefficients",
    "eval_constant",
    "eval_series_asymptotic",
    "eval_series_direct",
    "force_components",
    "force_from_coefficients",
    "load_recipes",
    "run_error_sweep",
    "t0_inner",
    "t0_outer",
    "u0_inner",
    "u0_outer",
]
