"""Fibers of the degree-4 Prym map of genus-2 curves.

Thin wrapper over the C++ core: admissible moduli triples, cross-ratio fiber
invariants, quadric-pencil fiber sampling, and the exact lattice / group
algebra verification pipelines.
"""

from ._core import (
    FiberSample,
    ModuliPoint,
    PrymError,
    ToleranceConfig,
    approx_eq,
    canonical_invariant,
    cover,
    cross_ratio,
    curve_system,
    descriptor,
    eval_quadrics,
    glued_points,
    is_exceptional,
    j_from_lambda,
    jacobian_rank,
    lambda_pair,
    lambdas_distinct,
    moduli_eq,
    s3_orbit,
    same_fiber,
    sample_fiber,
    scenario_prym,
    solve_fiber,
    solve_quadratic,
    tt_class,
    tt_sum,
    validate,
    verify,
    verify_decomposition,
)

__all__ = [
    "FiberSample",
    "ModuliPoint",
    "PrymError",
    "ToleranceConfig",
    "approx_eq",
    "canonical_invariant",
    "cover",
    "cross_ratio",
    "curve_system",
    "descriptor",
    "eval_quadrics",
    "glued_points",
    "is_exceptional",
    "j_from_lambda",
    "jacobian_rank",
    "lambda_pair",
    "lambdas_distinct",
    "moduli_eq",
    "s3_orbit",
    "same_fiber",
    "sample_fiber",
    "scenario_prym",
    "solve_fiber",
    "solve_quadratic",
    "tt_class",
    "tt_sum",
    "validate",
    "verify",
    "verify_decomposition",
]

__version__ = "0.1.0"
