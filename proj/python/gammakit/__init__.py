"""Pole-expansion approximations of the gamma function.

The heavy lifting lives in the compiled extension: coefficient generation in
extended precision (Spouge closed form, integer/Chebyshev/geometric node
interpolation, least squares), shift-parameter calibration, a hardened
double-precision evaluator for the whole complex plane, and relative-error
sweeps against a shifted-Stirling reference.
"""

from ._gammakit import (
    ArgumentError,
    ConditioningError,
    DomainError,
    GammaApproximation,
    NoRootError,
    PoleError,
    PoleExpansion,
    asymptotic_params,
    bernoulli,
    eval_extended,
    make_expansion,
    reference_gamma,
    reference_log_gamma,
    relative_error,
    solve_r,
    stirling_series_coeffs,
    sweep,
)

__all__ = [
    "ArgumentError",
    "ConditioningError",
    "DomainError",
    "GammaApproximation",
    "NoRootError",
    "PoleError",
    "PoleExpansion",
    "asymptotic_params",
    "bernoulli",
    "eval_extended",
    "make_expansion",
    "reference_gamma",
    "reference_log_gamma",
    "relative_error",
    "solve_r",
    "stirling_series_coeffs",
    "sweep",
]
