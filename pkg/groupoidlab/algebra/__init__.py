"""Finite-dimensional *-algebras, weights and modular theory."""

from groupoidlab.algebra.modular import ModularData, kms_verify, modular_data, tomita_checks
from groupoidlab.algebra.star import FiniteStarAlgebra, apply2, check_star_algebra
from groupoidlab.algebra.weights import GNSRep, Weight, gns, gns_checks

__all__ = [
    "FiniteStarAlgebra",
    "GNSRep",
    "ModularData",
    "Weight",
    "apply2",
    "check_star_algebra",
    "gns",
    "gns_checks",
    "kms_verify",
    "modular_data",
    "tomita_checks",
]
