"""Exact nested power sums over the roots of x^m - x^(m-1) - ... - 1."""

import json

from ._core import (
    CapExceeded,
    Error,
    ExprError,
    NotConverged,
    evaluate,
    find_roots,
    h_sequence,
    nested_sum_exact,
    numeric_nested_sum,
    power_sums,
    pretty,
    reduce_nested_sum,
    term,
    term_fast,
    verify_layer_identity,
    verify_u_step,
    vieta,
    window,
)
from . import _core


def verify_identity(m, n_max, cap=1_000_000):
    """Report dict for h_n == W_{n+1}, n <= n_max."""
    return json.loads(_core._verify_identity_json(m, n_max, cap))


def verify_conjecture(max_m=8, n_max=100, variant="as-stated", cap=1_000_000):
    """Report dict for the conjecture sweep over 2 <= m <= max_m."""
    return json.loads(_core._verify_conjecture_json(max_m, n_max, variant, cap))


def verify_proof_steps(m, n_max, cap=1_000_000):
    return json.loads(_core._verify_proof_steps_json(m, n_max, cap))


__all__ = [
    "CapExceeded",
    "Error",
    "ExprError",
    "NotConverged",
    "evaluate",
    "find_roots",
    "h_sequence",
    "nested_sum_exact",
    "numeric_nested_sum",
    "power_sums",
    "pretty",
    "reduce_nested_sum",
    "term",
    "term_fast",
    "verify_conjecture",
    "verify_identity",
    "verify_layer_identity",
    "verify_proof_steps",
    "verify_u_step",
    "vieta",
    "window",
]
