"""Tests for the quantum groupoid axioms, γ maps and Q maps."""

import numpy as np
import pytest

from groupoidlab.errors import ConfigError
from groupoidlab.models import convolution_algebra_model, function_algebra_model
from groupoidlab.models.perturb import perturb_E, perturb_phi_off_unit
from groupoidlab.qgroupoid import (
    apply_pair_map,
    base_reconstruction,
    build_q_maps,
    e_solution_dimension,
    gamma_maps,
    gamma_relations,
    invariance_axioms,
    invariance_identities,
    qmap_checks,
    structure_axioms,
    verify_axioms,
)

TOL = 1e-9


def _failed_ids(report):
    return [c.check_id for c in report.failed()]


class TestAxioms:
    def test_pair2_models(self, pair2_model):
        report = verify_axioms(pair2_model, TOL)
        assert report.all_passed, _failed_ids(report)
        assert "qgroupoid.weak_unit.1" in report
        assert "qgroupoid.coassociativity.1" in report

    @pytest.mark.parametrize("builder", [function_algebra_model, convolution_algebra_model])
    def test_s3_models(self, s3, builder):
        report = verify_axioms(builder(*s3), TOL)
        assert report.all_passed, _failed_ids(report)

    def test_perturbed_E_breaks_idempotence(self, pair2_function):
        report = verify_axioms(perturb_E(pair2_function, 1e-3, seed=7), TOL)
        assert not report["qgroupoid.E_idempotent.1"].passed
        assert not report.all_passed

    def test_off_unit_phi_breaks_left_invariance(self, pair2, pair2_convolution):
        g, _ = pair2
        report = verify_axioms(perturb_phi_off_unit(pair2_convolution, g, 0.1), TOL)
        assert not report.all_passed

    def test_E_delta_reports_solution_space(self, pair2_model):
        report = verify_axioms(pair2_model, TOL)
        check = report["qgroupoid.E_delta.1"]
        assert check.passed
        dim = e_solution_dimension(pair2_model)
        assert check.detail == f"xΔ(a) = 0 has a {dim}-dimensional solution space in B⊗C"

    def test_structure_part_is_reused(self, pair2_model):
        structure = structure_axioms(pair2_model, TOL)
        invariance = invariance_axioms(pair2_model, TOL)
        full = verify_axioms(pair2_model, TOL, structure=structure)
        assert set(full.checks) == set(structure.checks) | set(invariance.checks)
        assert "qgroupoid.right_invariance.1" in invariance
        assert full.to_dict()["checks"] == verify_axioms(pair2_model, TOL).to_dict()["checks"]

    def test_model_shapes_validated(self, pair2_function):
        with pytest.raises(ConfigError):
            pair2_function.with_E(np.zeros((2, 2)))

    def test_comultiplication_of_unit_is_E(self, pair2_model):
        qg = pair2_model
        assert np.allclose(qg.comult(qg.unit), qg.E)


class TestGamma:
    def test_relations(self, pair2_model):
        qg = pair2_model
        report = gamma_relations(qg, gamma_maps(qg), TOL)
        assert report.all_passed, _failed_ids(report)

    def test_function_model_gamma_is_trivial(self, pair2_function):
        gm = gamma_maps(pair2_function)
        assert np.allclose(gm.gamma_b, np.eye(2))
        assert np.allclose(gm.gamma_c @ gm.gamma_b, np.eye(2))


class TestQMaps:
    @pytest.fixture(scope="class")
    def built(self, pair2_model):
        qg = pair2_model
        return qg, build_q_maps(qg, gamma_maps(qg), TOL)

    def test_checks(self, built):
        qg, qm = built
        report = qmap_checks(qg, qm, TOL)
        assert report.all_passed, _failed_ids(report)
        assert qm.q_l_residual < TOL

    def test_invariance_identities(self, built):
        qg, qm = built
        report = invariance_identities(qg, qm, TOL)
        assert report.all_passed, _failed_ids(report)

    def test_q_maps_are_idempotent(self, built):
        _, qm = built
        for name, q in qm.items():
            assert np.allclose(q @ q, q), name

    def test_apply_pair_map_matches_matrix(self, built):
        qg, qm = built
        x = np.arange(qg.dim ** 2, dtype=complex).reshape(qg.dim, qg.dim)
        assert np.allclose(apply_pair_map(qm.q_r, x).reshape(-1), qm.q_r @ x.reshape(-1))

    def test_base_reconstruction(self, pair2_model):
        report = base_reconstruction(pair2_model, TOL)
        assert report.all_passed, _failed_ids(report)
