"""Tests for *-algebras, weights, GNS and modular data."""

import numpy as np
import pytest

from groupoidlab.algebra import (
    FiniteStarAlgebra,
    Weight,
    apply2,
    check_star_algebra,
    gns,
    gns_checks,
    kms_verify,
    modular_data,
    tomita_checks,
)
from groupoidlab.errors import AssumptionViolationError, ConfigError, NonFaithfulWeightError


def matrix_units(n=2):
    basis = []
    for i in range(n):
        for j in range(n):
            e = np.zeros((n, n))
            e[i, j] = 1.0
            basis.append(e)
    return FiniteStarAlgebra(np.array(basis), label="M2")


def trace_weight(alg, h):
    # φ(e_ij) = Tr(h e_ij) = h[j, i]
    n = h.shape[0]
    return Weight(alg, [h[j, i] for i in range(n) for j in range(n)])


@pytest.fixture
def m2():
    return matrix_units()


class TestStarAlgebra:
    def test_structure_constants(self, m2):
        # e12 e21 = e11
        assert m2.mult[1, 2, 0] == pytest.approx(1.0)
        assert np.allclose(m2.mult[1, 1], 0)
        assert np.allclose(m2.unit, [1, 0, 0, 1])

    def test_star_matrix_swaps_off_diagonal(self, m2):
        x = np.array([1.0, 2j, 3.0, 4.0])
        assert np.allclose(m2.star(x), [1.0, 3.0, -2j, 4.0])

    def test_left_and_right_multiplication(self, m2):
        a = np.array([1.0, 2.0, 0.0, 1j])
        x = np.array([0.5, 0.0, 1.0, 2.0])
        assert np.allclose(m2.left_mult(a) @ x, m2.mul(a, x))
        assert np.allclose(m2.right_mult(a) @ x, m2.mul(x, a))
        assert np.allclose(m2.element(m2.mul(a, x)), m2.element(a) @ m2.element(x))

    def test_checks_pass(self, m2):
        report = check_star_algebra(m2, 1e-9)
        assert report.all_passed
        assert "algebra.M2.product_closure.1" in report

    def test_non_closed_basis_fails(self):
        e12 = np.zeros((1, 2, 2))
        e12[0, 0, 1] = 1.0
        report = check_star_algebra(FiniteStarAlgebra(e12, label="X"), 1e-9)
        assert not report["algebra.X.adjoint_closure.1"].passed
        assert not report["algebra.X.unit.1"].passed
        assert report["algebra.X.independent.1"].passed

    def test_bad_basis_shape(self):
        with pytest.raises(ConfigError):
            FiniteStarAlgebra(np.zeros((2, 3)))

    def test_tensor_square_multiplication(self):
        diag = np.zeros((3, 3, 3))
        for i in range(3):
            diag[i, i, i] = 1.0
        alg = FiniteStarAlgebra(diag)
        a, b, c, d = (np.arange(3.0) + k for k in range(4))
        assert np.allclose(alg.mul2(np.outer(a, b), np.outer(c, d)), np.outer(a * c, b * d))

    def test_apply2(self):
        rng = np.random.default_rng(0)
        f, g = rng.standard_normal((2, 3, 3))
        a, b = rng.standard_normal((2, 3))
        assert np.allclose(apply2(f, g, np.outer(a, b)), np.outer(f @ a, g @ b))


class TestWeights:
    def test_gram_and_pairing(self, m2):
        phi = trace_weight(m2, np.diag([1.0, 2.0]))
        # φ(e12* e12) = φ(e22) = 2
        assert phi.gram[1, 1] == pytest.approx(2.0)
        # φ(e12 e21) = φ(e11) = 1
        assert phi.pair_matrix[1, 2] == pytest.approx(1.0)
        assert phi.faithfulness_defect() < 1e-12

    def test_wrong_length(self, m2):
        with pytest.raises(AssumptionViolationError):
            Weight(m2, [1.0, 2.0])

    def test_non_faithful(self, m2):
        phi = trace_weight(m2, np.diag([1.0, 0.0]))
        assert phi.faithfulness_defect() > 0
        with pytest.raises(NonFaithfulWeightError):
            gns(phi)

    def test_gns_identities(self, m2):
        rep = gns(trace_weight(m2, np.diag([1.0, 3.0])))
        assert rep.dim == 4
        assert gns_checks(rep, 1e-9, "phi").all_passed

    def test_pullback_inverts_rep(self, m2):
        rep = gns(trace_weight(m2, np.diag([1.0, 3.0])))
        x = np.array([1.0, -2.0, 0.5j, 4.0])
        coeffs, defect = rep.pullback(rep.rep(x))
        assert defect < 1e-12
        assert np.allclose(coeffs, x)


class TestModular:
    def test_modular_group_is_inner(self, m2):
        phi = trace_weight(m2, np.diag([1.0, 2.0]))
        md = modular_data(gns(phi))
        t = 0.7
        # σ_t(e12) = h^{it} e12 h^{-it} = 2^{-it} e12
        assert np.allclose(md.sigma(t)[:, 1], [0, 2.0 ** (-1j * t), 0, 0])
        assert np.allclose(md.sigma(t)[:, 0], [1, 0, 0, 0])

    def test_kms_and_tomita(self, m2):
        phi = trace_weight(m2, np.diag([1.0, 5.0]))
        md = modular_data(gns(phi))
        assert kms_verify(phi, md, 1e-9, name="phi").all_passed
        report = tomita_checks(md, 1e-9, name="phi")
        assert report.all_passed
        assert "algebra.tomita_phi.j_nabla.1" in report

    def test_trace_has_trivial_modular_group(self, m2):
        md = modular_data(gns(trace_weight(m2, np.eye(2))))
        assert np.allclose(md.nabla, np.eye(4))
        assert np.allclose(md.sigma(1.3), np.eye(4))
