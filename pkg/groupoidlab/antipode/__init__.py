"""K, its polar decomposition, the antipode S and the identity suites around it."""

from groupoidlab.antipode.cross_checks import antipode_cross_checks, solved_antipodes
from groupoidlab.antipode.derive import AntipodeBundle, derive_antipode
from groupoidlab.antipode.kop import build_K, k_families
from groupoidlab.antipode.modular_checks import ij_defect, modular_commutation_checks, polar_checks
from groupoidlab.antipode.suites import (
    commutation_suite,
    phi_r_weight,
    phiR_suite,
    relations_suite,
    restriction_suite,
    sigma_prime,
)

__all__ = [
    "AntipodeBundle",
    "antipode_cross_checks",
    "build_K",
    "commutation_suite",
    "derive_antipode",
    "ij_defect",
    "k_families",
    "modular_commutation_checks",
    "phiR_suite",
    "phi_r_weight",
    "polar_checks",
    "relations_suite",
    "restriction_suite",
    "sigma_prime",
    "solved_antipodes",
]
