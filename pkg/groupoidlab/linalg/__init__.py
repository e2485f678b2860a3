"""Dense linear algebra layer."""

from groupoidlab.linalg.conjlinear import (
    ConjLinearOp,
    VectorFunctional,
    conjugation,
    left_slices,
    polar_conj,
    right_slices,
    slice_left_family,
    slice_right_family,
)
from groupoidlab.linalg.dense import (
    kron,
    leg_operator,
    mat_pow,
    null_space,
    numerical_rank,
    partial_isometry_defect,
    projection_defect,
    rel_residual,
    solve_linear_map,
    span_coeffs,
    span_distance,
    span_membership,
)

__all__ = [
    "ConjLinearOp",
    "VectorFunctional",
    "conjugation",
    "left_slices",
    "polar_conj",
    "right_slices",
    "slice_left_family",
    "slice_right_family",
    "kron",
    "leg_operator",
    "mat_pow",
    "null_space",
    "numerical_rank",
    "partial_isometry_defect",
    "projection_defect",
    "rel_residual",
    "solve_linear_map",
    "span_coeffs",
    "span_distance",
    "span_membership",
]
