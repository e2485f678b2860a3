"""Tests for K, its polar decomposition and the antipode identity suites."""

import numpy as np
import pytest

from groupoidlab.antipode import (
    antipode_cross_checks,
    build_K,
    commutation_suite,
    derive_antipode,
    ij_defect,
    modular_commutation_checks,
    phi_r_weight,
    phiR_suite,
    polar_checks,
    relations_suite,
    restriction_suite,
    solved_antipodes,
)
from groupoidlab.errors import DegenerateDecompositionError
from groupoidlab.linalg import ConjLinearOp, rel_residual

TOL = 1e-9
TS = (0.3, 1.0, -0.7)


def _failed_ids(report):
    return [c.check_id for c in report.failed()]


class TestPolar:
    def test_polar_checks(self, pair2_artifacts):
        report = polar_checks(pair2_artifacts.ab, TOL)
        assert report.all_passed, _failed_ids(report)
        assert report["antipode.K_solve.1"].detail.startswith("source rank")

    def test_modular_commutation(self, pair2_artifacts):
        art = pair2_artifacts
        report = modular_commutation_checks(art.qg, art.ab, art.rb, TOL, TS)
        assert report.all_passed, _failed_ids(report)

    def test_k_is_involutive(self, pair2_artifacts):
        art = pair2_artifacts
        k_op, residual, rank = build_K(art.qg, art.rb.w_op, TOL)
        assert residual < TOL
        assert rank == art.qg.rep_psi.dim
        assert k_op.involution_defect() < TOL

    def test_degenerate_K(self, pair2_model):
        dim = pair2_model.rep_psi.dim
        with pytest.raises(DegenerateDecompositionError):
            derive_antipode(pair2_model, ConjLinearOp(np.zeros((dim, dim))), 0.0, 0, TOL)

    def test_ij_relation(self, pair2_artifacts):
        art = pair2_artifacts
        assert ij_defect(art.rb.w_op, art.ab.i_op, art.qg.md_phi.j_op) < TOL

    @pytest.mark.parametrize("artifacts", ["pair2_convolution_artifacts", "s3_artifacts"])
    def test_swapped_I_and_J_break_the_ij_relation(self, artifacts, request):
        art = request.getfixturevalue(artifacts)
        assert ij_defect(art.rb.w_op, art.ab.i_op, art.qg.md_phi.j_op) < TOL
        assert ij_defect(art.rb.w_op, art.qg.md_phi.j_op, art.ab.i_op) > 1e-4


class TestAntipode:
    def test_S_is_inversion(self, pair2_artifacts):
        art = pair2_artifacts
        assert rel_residual(art.ab.s_map, art.qg.inversion_oracle) < 1e-8

    def test_S_is_inversion_on_s3(self, s3_artifacts):
        art = s3_artifacts
        assert rel_residual(art.ab.s_map, art.qg.inversion_oracle) < 1e-8

    def test_routes_agree(self, pair2_artifacts):
        art = pair2_artifacts
        routes = solved_antipodes(art.qg, art.ab, art.rb)
        assert set(routes) == {"polar", "W_slice", "strong_left", "strong_right", "inversion"}
        for name, s in routes.items():
            assert rel_residual(s, art.ab.s_map) < 1e-8, name

    def test_tau_is_a_group(self, pair2_artifacts):
        ab = pair2_artifacts.ab
        d = pair2_artifacts.qg.dim
        assert np.allclose(ab.tau(0.0), np.eye(d))
        assert np.allclose(ab.tau(0.3) @ ab.tau(0.4), ab.tau(0.7))

    def test_R_is_an_involution(self, pair2_artifacts):
        r = pair2_artifacts.ab.r_map
        assert np.allclose(r @ r, np.eye(r.shape[0]))

    def test_cross_checks(self, pair2_artifacts):
        art = pair2_artifacts
        report = antipode_cross_checks(art.qg, art.ab, art.rb, TOL, TS)
        assert report.all_passed, _failed_ids(report)
        assert "antipode.D0_symmetric.2" in report
        assert report["antipode.D0.2"].passed
        oracle_ids = [c.check_id for c in report.sorted() if c.check_id.startswith("antipode.oracle.")]
        # one entry per pair of the five routes
        assert len(oracle_ids) == 10

    def test_cross_checks_on_s3(self, s3_artifacts):
        art = s3_artifacts
        report = antipode_cross_checks(art.qg, art.ab, art.rb, TOL, TS)
        assert report.all_passed, _failed_ids(report)


class TestSuites:
    def test_relations(self, pair2_artifacts):
        art = pair2_artifacts
        report = relations_suite(art.qg, art.ab, TOL, TS)
        assert report.all_passed, _failed_ids(report)

    def test_restrictions(self, pair2_artifacts):
        art = pair2_artifacts
        report = restriction_suite(art.qg, art.ab, art.gm, TOL, TS)
        assert report.all_passed, _failed_ids(report)
        assert "antipode.S_B_identity.1" in report

    def test_phiR(self, pair2_artifacts):
        art = pair2_artifacts
        report = phiR_suite(art.qg, art.ab, TOL, TS)
        assert report.all_passed, _failed_ids(report)

    def test_phiR_weight_is_faithful(self, pair2_artifacts):
        art = pair2_artifacts
        weight = phi_r_weight(art.qg, art.ab)
        assert weight.faithfulness_defect() < 1e-9

    def test_commutation(self, pair2_artifacts):
        art = pair2_artifacts
        report = commutation_suite(art.qg, art.ab, TOL)
        assert report.all_passed, _failed_ids(report)

    def test_suites_on_s3(self, s3_artifacts):
        art = s3_artifacts
        for report in (
            relations_suite(art.qg, art.ab, TOL, TS),
            restriction_suite(art.qg, art.ab, art.gm, TOL, TS),
            phiR_suite(art.qg, art.ab, TOL, TS),
            commutation_suite(art.qg, art.ab, TOL),
        ):
            assert report.all_passed, _failed_ids(report)
