"""Finite groupoids and the two quantum groupoid models built from them."""

from groupoidlab.models.convolution_model import convolution_algebra_model
from groupoidlab.models.function_model import function_algebra_model
from groupoidlab.models.groupoid import (
    FiniteGroupoid,
    HaarWeights,
    disjoint_union,
    group_groupoid,
    named_group,
    pair_groupoid,
    union_weights,
    validate_groupoid,
)
from groupoidlab.models.perturb import Perturbation, apply_perturbation

MODEL_BUILDERS = {
    "function": function_algebra_model,
    "convolution": convolution_algebra_model,
}

__all__ = [
    "MODEL_BUILDERS",
    "FiniteGroupoid",
    "HaarWeights",
    "Perturbation",
    "apply_perturbation",
    "convolution_algebra_model",
    "disjoint_union",
    "function_algebra_model",
    "group_groupoid",
    "named_group",
    "pair_groupoid",
    "union_weights",
    "validate_groupoid",
]
