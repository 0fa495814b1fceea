"""Exact Laurent expansions of the zeros of the partial theta function.

The partial theta function is theta(q, x) = sum_{s>=0} q^{s(s+1)/2} x^s,
entire in x for fixed |q| < 1.  This package computes the Laurent expansion
of each of its zeros with exact integer coefficients, reproduces the
universal coefficient sequence those expansions stabilize onto (OEIS
A000716) by three independent routes, witnesses the convexity of the cubed
Euler product on (0, 1), and cross-validates the symbolic results against
extended-precision Newton root-finding.
"""

from .convexity import (
    ConvexityReport,
    EulerProfile,
    bridge_bound,
    convexity_margins,
    curvature_part_coeff,
    default_grid,
    euler_cube,
    euler_cube_d2,
    euler_profile,
    euler_value,
    log_derivative,
    log_second_derivative,
    partial_sum_gaps,
    square_part_coeff,
)
from .numeric import (
    ConvergenceError,
    EvalResult,
    SingularDerivativeError,
    SweepTable,
    ZeroFindReport,
    convergence_sweep,
    evaluate_expansion,
    find_zero,
    theta_dx,
    theta_eval,
)
from .rk import (
    AuxCoeffTable,
    CrossValidation,
    MonotonicityReport,
    RatioProfile,
    RkTable,
    TripleProductReport,
    aux_coefficients,
    cross_validate,
    difference_monotonicity,
    ratio_profile,
    rk_euler_cube,
    rk_recurrence,
    rk_triple_product,
    triple_product_series,
    verify_triple_product,
)
from .series import (
    InsufficientOrderError,
    IntSeries,
    LaurentSeries,
    NonInvertibleError,
    euler_product,
    make_series,
    one,
)
from .zeros import (
    DeltaSeries,
    NonUnitPivotError,
    StabilizationRow,
    ZeroExpansion,
    delta_series,
    expansion_to_laurent,
    residual_check,
    solve_expansion,
    stabilization_report,
    term_degree,
    theta_dx_series,
    theta_series,
)

__version__ = "0.1.0"
