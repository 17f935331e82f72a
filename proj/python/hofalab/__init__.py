"""Exact bracket-polynomial and equidistribution laboratory."""

from _hofalab import (  # noqa: F401
    bohr_build,
    c_infty_norm,
    dist_circle,
    dual_function,
    energy,
    energy4,
    eval_bracket_expr,
    eval_nilsequence,
    eval_trilinear,
    expand_frac_product,
    find_regular_radius,
    frac,
    gowers_norm,
    int_part,
    is_periodic_phase,
    lambda1_count,
    lambda_count,
    mean_correlation,
    nilseq_phase,
    omega,
    plant_dichotomy,
    rbpl_brute_force,
    rbpl_plant,
    rbpl_solve,
    rbpl_verify,
    run_acceptance,
    run_dichotomy,
)

__all__ = [
    "bohr_build", "c_infty_norm", "dist_circle", "dual_function", "energy",
    "energy4", "eval_bracket_expr", "eval_nilsequence", "eval_trilinear",
    "expand_frac_product", "find_regular_radius", "frac", "gowers_norm",
    "int_part", "is_periodic_phase", "lambda1_count", "lambda_count",
    "mean_correlation", "nilseq_phase", "omega", "plant_dichotomy",
    "rbpl_brute_force", "rbpl_plant", "rbpl_solve", "rbpl_verify",
    "run_acceptance", "run_dichotomy",
]
