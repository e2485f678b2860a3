"""Property-based tests using Hypothesis."""

import hypothesis.strategies as st
import numpy as np
from hypothesis import given, settings

from groupoidlab.config import LabSettings
from groupoidlab.linalg import ConjLinearOp, mat_pow, polar_conj, rel_residual
from groupoidlab.models import convolution_algebra_model, function_algebra_model
from groupoidlab.qgroupoid import verify_axioms
from groupoidlab.runner import build_artifacts
from groupoidlab.types import CheckReport
from tests.conftest import weighted_pair

weights = st.floats(min_value=0.2, max_value=5.0, allow_nan=False, allow_infinity=False)
times = st.floats(min_value=-2.0, max_value=2.0, allow_nan=False, allow_infinity=False)


def _unitary(seed, n):
    rng = np.random.default_rng(seed)
    q, _ = np.linalg.qr(rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n)))
    return q


class TestFunctionalCalculus:
    @given(
        evals=st.lists(st.floats(min_value=0.1, max_value=10.0), min_size=2, max_size=4),
        seed=st.integers(0, 1000),
        s=times,
        t=times,
    )
    def test_imaginary_powers_form_a_group(self, evals, seed, s, t):
        u = _unitary(seed, len(evals))
        p = (u * np.array(evals)) @ u.conj().T
        p = (p + p.conj().T) / 2
        lhs = mat_pow(p, 1j * s) @ mat_pow(p, 1j * t)
        assert rel_residual(lhs, mat_pow(p, 1j * (s + t))) < 1e-8

    @given(seed=st.integers(0, 1000))
    def test_polar_parts_recombine(self, seed):
        rng = np.random.default_rng(seed)
        m = rng.standard_normal((3, 3)) + 1j * rng.standard_normal((3, 3)) + 3 * np.eye(3)
        i_op, l_op = polar_conj(ConjLinearOp(m))
        assert i_op.after(mat_pow(l_op, 0.5)).distance(ConjLinearOp(m)) < 1e-8


class TestModels:
    @settings(max_examples=10, deadline=None)
    @given(m=st.lists(weights, min_size=2, max_size=2), n=st.lists(weights, min_size=2, max_size=2))
    def test_function_model_axioms_for_any_weights(self, m, n):
        qg = function_algebra_model(*weighted_pair(2, m, n))
        report = verify_axioms(qg, 1e-8)
        assert report.all_passed, [c.check_id for c in report.failed()]

    @settings(max_examples=10, deadline=None)
    @given(m=st.lists(weights, min_size=2, max_size=2), n=st.lists(weights, min_size=2, max_size=2))
    def test_convolution_model_axioms_for_any_weights(self, m, n):
        qg = convolution_algebra_model(*weighted_pair(2, m, n))
        report = verify_axioms(qg, 1e-8)
        assert report.all_passed, [c.check_id for c in report.failed()]

    @settings(max_examples=5, deadline=None)
    @given(m=st.lists(weights, min_size=2, max_size=2))
    def test_antipode_is_inversion_for_any_weights(self, m):
        qg = convolution_algebra_model(*weighted_pair(2, m))
        art = build_artifacts(qg, LabSettings(tol=1e-8), until="polar")
        assert rel_residual(art.ab.s_map, qg.inversion_oracle) < 1e-7


class TestReports:
    @given(residuals=st.lists(st.floats(min_value=0.0, max_value=1.0), min_size=1, max_size=20))
    def test_family_records_worst_witness(self, residuals):
        report = CheckReport()
        check = report.record_family(
            "x.family.1", "family", ((f"w{i}", r) for i, r in enumerate(residuals)), 0.5
        )
        assert check.residual == max(residuals)
        assert check.passed == (max(residuals) <= 0.5)
        assert check.detail.endswith(f"of {len(residuals)}")
