"""Rational approximation with Thiele continued fractions: greedy adaptive
interpolation with early termination and interval-rescaling minimax."""

from .brasil import (
    BrasilConfig,
    BrasilResult,
    ExtremaReport,
    PoleError,
    brasil,
    equioscillation_check,
    find_extrema,
)
from .cfrac import (
    ContinuedFraction,
    ConvergentValue,
    detect_unattainable,
    eval_backward,
    eval_convergent_pair,
    eval_tail,
    scan_poles,
    unattainable_diagnostics,
)
from .greedy import (
    DEFAULT_TOL,
    GreedyResult,
    ResidualReport,
    SampleSet,
    Termination,
    residual_report,
    thiele_greedy,
)
from .nodes import chebyshev1, newman_points, power_grid, squared_newman_points

__version__ = "0.1.0"

__all__ = [
    "BrasilConfig",
    "BrasilResult",
    "ContinuedFraction",
    "ConvergentValue",
    "DEFAULT_TOL",
    "ExtremaReport",
    "GreedyResult",
    "PoleError",
    "ResidualReport",
    "SampleSet",
    "Termination",
    "brasil",
    "chebyshev1",
    "detect_unattainable",
    "equioscillation_check",
    "eval_backward",
    "eval_convergent_pair",
    "eval_tail",
    "find_extrema",
    "newman_points",
    "power_grid",
    "residual_report",
    "scan_poles",
    "squared_newman_points",
    "thiele_greedy",
    "unattainable_diagnostics",
]
