"""Quantum groupoid data, axiom verification, γ maps and Q maps."""

from groupoidlab.qgroupoid.axioms import (
    e_solution_dimension,
    invariance_axioms,
    structure_axioms,
    verify_axioms,
)
from groupoidlab.qgroupoid.gamma import GammaMaps, gamma_maps, gamma_relations
from groupoidlab.qgroupoid.model import QuantumGroupoid
from groupoidlab.qgroupoid.qmaps import (
    QMaps,
    apply_pair_map,
    base_reconstruction,
    build_q_maps,
    invariance_identities,
    qmap_checks,
)

__all__ = [
    "GammaMaps",
    "QMaps",
    "QuantumGroupoid",
    "apply_pair_map",
    "base_reconstruction",
    "build_q_maps",
    "e_solution_dimension",
    "gamma_maps",
    "gamma_relations",
    "invariance_axioms",
    "invariance_identities",
    "qmap_checks",
    "structure_axioms",
    "verify_axioms",
]
