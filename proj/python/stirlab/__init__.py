"""Stirling-series laboratory.

Exact Bernoulli arithmetic, the Euler-Maclaurin inverse-shift operator, the
flawed and corrected log-Stirling series, oscillatory-mode resummation, and
independent reference oracles.  All heavy lifting lives in the compiled
``_core`` extension; exact rationals are returned as ``fractions.Fraction``.
"""

from ._core import (
    bernoulli,
    binomial,
    discrepancy,
    em_antidifference,
    em_sum,
    euler_constant_claim,
    expm1_zeros,
    factor_series_coefficients,
    lgamma_ref,
    log_gamma_corrected,
    log_gamma_euler,
    optimal_truncation,
    paired_mode_real,
    polynomial_roots,
    reduce_difference_to_differential,
    resum_term_check,
    stirling_terms,
    sum_direct,
    zeta_direct,
    zeta_even_coefficient,
)

__all__ = [
    "bernoulli",
    "binomial",
    "discrepancy",
    "em_antidifference",
    "em_sum",
    "euler_constant_claim",
    "expm1_zeros",
    "factor_series_coefficients",
    "lgamma_ref",
    "log_gamma_corrected",
    "log_gamma_euler",
    "optimal_truncation",
    "paired_mode_real",
    "polynomial_roots",
    "reduce_difference_to_differential",
    "resum_term_check",
    "stirling_terms",
    "sum_direct",
    "zeta_direct",
    "zeta_even_coefficient",
]

__version__ = "1.0.0"
