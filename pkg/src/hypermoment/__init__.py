"""Finite-field hypergeometric functions H_p(alpha, beta; lambda).

Evaluation by character sums, a batch DFT, elliptic-curve point counts and
closed forms; Gauss and Jacobi sum identities; Hecke trace formulas checked
against eta-product newforms; and moment statistics over lambda.
"""

from __future__ import annotations

__version__ = "0.1.0"

from .characters import (
    check_gauss_identities,
    check_jacobi_identities,
    gauss_table,
    jacobi_sum,
)
from .curves import count_points, frobenius_trace, frobenius_traces
from .datum import HGDatum, hd, parse_datum, validate_datum
from .engine import (
    HGValue,
    evaluate,
    evaluate_all,
    hp_algebraic,
    hp_batch_dft,
    hp_charsum,
    hp_curve,
)
from .eta import EtaProduct, eta_ap
from .moments import (
    MomentReport,
    catalan,
    chu_lhs,
    chu_rhs,
    convergence_sweep,
    moment_sum,
    o3_even_moment,
    second_moment_exact,
)
from .prime_field import PrimeContext, build_context, legendre_symbol
from .trace_formulas import (
    TraceReport,
    check_dimension_zero,
    delta3,
    delta4,
    g_poly,
    trace_gamma0_2,
    trace_gamma0_4,
    trace_gamma0_8,
    trace_gamma1_3,
    trace_gamma1_4,
)

__all__ = [
    "EtaProduct", "HGDatum", "HGValue", "MomentReport", "PrimeContext", "TraceReport",
    "build_context", "catalan", "check_dimension_zero", "check_gauss_identities",
    "check_jacobi_identities", "chu_lhs", "chu_rhs", "convergence_sweep", "count_points",
    "delta3", "delta4", "eta_ap", "evaluate", "evaluate_all", "frobenius_trace",
    "frobenius_traces", "g_poly", "gauss_table", "hd", "hp_algebraic", "hp_batch_dft",
    "hp_charsum", "hp_curve", "jacobi_sum", "legendre_symbol", "moment_sum",
    "o3_even_moment", "parse_datum", "second_moment_exact", "trace_gamma0_2",
    "trace_gamma0_4", "trace_gamma0_8", "trace_gamma1_3", "trace_gamma1_4",
    "validate_datum",
]
