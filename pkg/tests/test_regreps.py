"""Tests for the regular representations V and W."""

import numpy as np
import pytest

from groupoidlab.config import LabSettings
from groupoidlab.errors import ResourceLimitError
from groupoidlab.io.spec_reader import parse_spec
from groupoidlab.linalg import leg_operator, rel_residual
from groupoidlab.regreps import (
    build_V,
    build_W,
    implemented_comultiplication_defect,
    pentagon_checks,
    regular_rep_checks,
    represent_pair,
)
from groupoidlab.regreps.pentagon import leg_chain
from groupoidlab.runner import PipelineRunner, build_artifacts, build_model
from tests.conftest import CONFIGS

TOL = 1e-9


def _failed_ids(report):
    return [c.check_id for c in report.failed()]


def test_regular_rep_identities(pair2_artifacts):
    art = pair2_artifacts
    report = regular_rep_checks(art.qg, art.rb, TOL)
    assert report.all_passed, _failed_ids(report)
    assert "regreps.W_psi_implements_delta.1" in report
    assert "regreps.W_phi_slice.1" in report


def test_pentagon(pair2_artifacts):
    rb = pair2_artifacts.rb
    report = pentagon_checks(rb.w_phi, rb.e_phi, rb.g_l_phi, TOL, pi=rb.rep_phi.pi)
    assert report.all_passed, _failed_ids(report)
    assert len([c for c in report.sorted() if c.check_id.startswith("regreps.pentagon.")]) == 6


def test_pentagon_on_slices_of_W(pair2_artifacts):
    rb = pair2_artifacts.rb
    report = pentagon_checks(rb.w_phi, rb.e_phi, rb.g_l_phi, TOL)
    assert report["regreps.extended_coassociativity.1"].passed


@pytest.mark.parametrize("artifacts", ["pair2_convolution_artifacts", "s3_artifacts"])
def test_flipped_W_breaks_the_pentagon(artifacts, request):
    rb = request.getfixturevalue(artifacts).rb
    dim = rb.rep_phi.dim
    flip = np.eye(dim * dim).reshape(dim, dim, dim, dim).transpose(1, 0, 2, 3).reshape(dim * dim, dim * dim)
    report = pentagon_checks(flip @ rb.w_phi @ flip, rb.e_phi, rb.g_l_phi, TOL, pi=rb.rep_phi.pi)
    worst = max(report[f"regreps.pentagon.{k}"].residual for k in range(1, 7))
    assert worst > 1e-4


def test_pentagon_needs_three_legs_within_max_dim(pair2_artifacts):
    rb = pair2_artifacts.rb
    dim = rb.rep_phi.dim
    with pytest.raises(ResourceLimitError, match="leg embedding"):
        pentagon_checks(rb.w_phi, rb.e_phi, rb.g_l_phi, TOL, max_dim=dim ** 3 - 1)


def test_s3_regular_reps(s3_artifacts):
    report = regular_rep_checks(s3_artifacts.qg, s3_artifacts.rb, TOL)
    assert report.all_passed, _failed_ids(report)


def test_W_does_not_implement_opposite_comultiplication(s3_artifacts):
    qg, rb = s3_artifacts.qg, s3_artifacts.rb
    opposite = qg.delta.transpose(0, 2, 1)
    assert implemented_comultiplication_defect(qg.delta, rb.w_op, rb.rep_psi, rb.rep_phi) < TOL
    assert implemented_comultiplication_defect(opposite, rb.w_op, rb.rep_psi, rb.rep_phi) > 1e-3


def test_V_and_W_are_partial_isometries(pair2_model):
    qg = pair2_model
    for op in (build_V(qg, qg.psi), build_W(qg, qg.phi)):
        assert rel_residual(op @ op.conj().T @ op, op) < TOL


def test_represented_E_is_a_projection(pair2_artifacts):
    rb = pair2_artifacts.rb
    e = rb.e_v
    assert np.allclose(e @ e, e)
    assert np.allclose(e, e.conj().T)
    assert np.allclose(represent_pair(rb.rep_psi, rb.rep_psi, pair2_artifacts.qg.E), e)


def test_dimension_limit_is_reported(pair2_spec):
    report = PipelineRunner(LabSettings(max_dim=8)).run(pair2_spec)
    check = report["convolution.regreps.construction"]
    assert not check.passed
    assert "ResourceLimitError" in check.detail
    assert "convolution.polar.construction" not in report
    assert report["convolution.qgroupoid.Q_L_solve.1"].passed


def test_max_dim_setting_reaches_three_leg_operators(pair2_spec):
    # two-leg operators on pair2 have dimension 16, three-leg ones 64
    report = PipelineRunner(LabSettings(max_dim=32)).run(pair2_spec)
    check = report["convolution.regreps.construction"]
    assert check.detail == "ResourceLimitError: leg embedding of dimension 64 exceeds max_dim 32"
    assert "convolution.polar.construction" not in report


@pytest.mark.parametrize("model", ["function", "convolution"])
def test_regreps_for_mixed_weights(model):
    qg = build_model(parse_spec(CONFIGS / "pair2_mixed.yaml"), model)
    art = build_artifacts(qg, LabSettings(), until="regreps")
    assert regular_rep_checks(qg, art.rb, TOL).all_passed


def test_leg_chain_matches_dense_products():
    rng = np.random.default_rng(3)
    a, b, c = (rng.standard_normal((9, 9)) + 1j * rng.standard_normal((9, 9)) for _ in range(3))
    dims = [3, 3, 3]
    dense = leg_operator(a, dims, [0, 1]) @ leg_operator(b, dims, [0, 2]) @ leg_operator(c, dims, [1, 2])
    chained = leg_chain([(a, "12"), (b, "13"), (c, "23")])
    assert np.allclose(chained.reshape(27, 27), dense)
