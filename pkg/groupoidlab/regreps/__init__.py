"""Regular representations V and W and their identity suites."""

from groupoidlab.regreps.checks import implemented_comultiplication_defect, regular_rep_checks
from groupoidlab.regreps.operators import (
    RegRepBundle,
    build_regular_reps,
    build_V,
    build_W,
    pair_vectors,
    represent_pair,
    transport_pair,
)
from groupoidlab.regreps.pentagon import pentagon_checks

__all__ = [
    "RegRepBundle",
    "build_V",
    "build_W",
    "build_regular_reps",
    "implemented_comultiplication_defect",
    "pair_vectors",
    "pentagon_checks",
    "regular_rep_checks",
    "represent_pair",
    "transport_pair",
]
