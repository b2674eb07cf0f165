"""Rudin-Shapiro abelian complexity toolkit.

Exact recurrence and brute-force complexity computation, automaton and
kernel-closure regularity witnesses, exact evaluation of the asymptotic
function lambda(x) on 4-adic rationals, and box-counting dimension reports
for its graph.
"""

from ._core import (
    M,
    a_exact,
    brute_extrema,
    delta_M,
    dimension_report,
    endpoint_magnitude_violations,
    endpoint_violations,
    extremal_word,
    fig2_eval,
    holder_scan,
    kernel_closure,
    lambda_decimal,
    lambda_value,
    linear_representation,
    m,
    mahler_check,
    r,
    r_prime,
    rho,
    s_prefix,
    self_similarity_holds,
    sum_identity_violations,
    verify_extremal,
    window_sum,
)

__all__ = [
    "M",
    "a_exact",
    "brute_extrema",
    "delta_M",
    "dimension_report",
    "endpoint_magnitude_violations",
    "endpoint_violations",
    "extremal_word",
    "fig2_eval",
    "holder_scan",
    "kernel_closure",
    "lambda_decimal",
    "lambda_value",
    "linear_representation",
    "m",
    "mahler_check",
    "r",
    "r_prime",
    "rho",
    "s_prefix",
    "self_similarity_holds",
    "sum_identity_violations",
    "verify_extremal",
    "window_sum",
]
