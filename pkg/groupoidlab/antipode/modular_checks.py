"""Identities tying K, I, L to W, V and the modular data of φ and ψ."""

from __future__ import annotations

from typing import Sequence

import numpy as np

from groupoidlab.antipode.derive import AntipodeBundle
from groupoidlab.linalg.conjlinear import ConjLinearOp, left_slices, right_slices, slice_right_family
from groupoidlab.linalg.dense import DEFAULT_MAX_DIM, kron, rel_residual
from groupoidlab.qgroupoid.model import QuantumGroupoid
from groupoidlab.regreps.operators import RegRepBundle
from groupoidlab.types import CheckReport


def polar_checks(ab: AntipodeBundle, tol: float) -> CheckReport:
    """K well-posedness and the algebra of K = I∘L^{1/2}."""
    report = CheckReport(label="polar")
    dim = ab.k_op.dim
    report.record(
        "antipode.K_solve.1",
        "K is well defined on its spanning family",
        ab.k_residual,
        tol,
        detail=f"source rank {ab.k_rank} of {dim}",
    )
    report.record("antipode.K_involution.1", "K(Kξ) = ξ", ab.k_op.involution_defect(), tol)
    report.record(
        "antipode.K_polar.1",
        "K = I∘L^{1/2}",
        ab.i_op.after(ab.l_pow(0.5)).distance(ab.k_op),
        tol,
    )
    report.record("antipode.I_selfadjoint.1", "I* = I", ab.i_op.distance(ab.i_op.adjoint()), tol)
    report.record("antipode.I_involution.1", "I² = 1", ab.i_op.involution_defect(), tol)
    report.record(
        "antipode.I_L.1", "ILI = L⁻¹", rel_residual(ab.i_op.sandwich(ab.l_op), ab.l_pow(-1)), tol
    )
    report.record(
        "antipode.S_wellposed.1", "I·π_ψ(A)*·I ⊆ π_ψ(A)", ab.s_wellposed, tol
    )
    return report


def ij_defect(w: np.ndarray, i_op: ConjLinearOp, j_op: ConjLinearOp, max_dim: int = DEFAULT_MAX_DIM) -> float:
    """Residual of (I⊗J)W(I⊗J) = W*."""
    return rel_residual(i_op.tensor(j_op, max_dim).sandwich(w), w.conj().T)


def modular_commutation_checks(
    qg: QuantumGroupoid,
    ab: AntipodeBundle,
    rb: RegRepBundle,
    tol: float,
    ts: Sequence[float] = (0.3, 1.0, -0.7),
    max_dim: int = DEFAULT_MAX_DIM,
) -> CheckReport:
    """K, T and L⊗∇ against W (legs ψ, φ) and V (legs ψ, ψ)."""
    report = CheckReport(label=f"modular {qg.label}")
    rp, rf = rb.rep_psi, rb.rep_phi
    dp, df = rp.dim, rf.dim
    w = rb.w_op
    w_star = w.conj().T
    md = qg.md_phi
    mk = ab.k_op.linear_part

    slices = right_slices(w, dp, df)
    report.record(
        "antipode.K_intertwining.1",
        "K((id⊗ω)(W)ξ) = (id⊗ω̄)(W)(Kξ)",
        rel_residual(slices.swapaxes(0, 1) @ mk, mk @ np.conj(slices)),
        tol,
    )
    mt = md.t_op.linear_part
    theta_slices = left_slices(w_star, dp, df)
    report.record(
        "antipode.T_intertwining.1",
        "T((θ⊗id)(W*)ζ) = (θ̄⊗id)(W*)(Tζ)",
        rel_residual(theta_slices.swapaxes(0, 1) @ mt, mt @ np.conj(theta_slices)),
        tol,
    )

    ln = kron(ab.l_op, md.nabla, max_dim)
    e, g = rb.e_w, rb.g_l
    report.record("antipode.L_nabla_commute.1", "W*(L⊗∇) = (L⊗∇)W*", rel_residual(w_star @ ln, ln @ w_star), tol)
    report.record("antipode.L_nabla_commute.2", "W(L⊗∇) = (L⊗∇)W", rel_residual(w @ ln, ln @ w), tol)
    report.record(
        "antipode.L_nabla_refined.1", "W*(L⊗∇)G_L = E(L⊗∇)W*", rel_residual(w_star @ ln @ g, e @ ln @ w_star), tol
    )
    report.record(
        "antipode.L_nabla_refined.2", "W(L⊗∇)E = G_L(L⊗∇)W", rel_residual(w @ ln @ e, g @ ln @ w), tol
    )
    report.record(
        "antipode.L_nabla_sandwich.1", "W*(L⊗∇)W = E(L⊗∇)E", rel_residual(w_star @ ln @ w, e @ ln @ e), tol
    )
    report.record(
        "antipode.L_nabla_sandwich.2", "W(L⊗∇)W* = G_L(L⊗∇)G_L", rel_residual(w @ ln @ w_star, g @ ln @ g), tol
    )
    report.record(
        "antipode.L_nabla_projections.1",
        "E and G_L commute with L⊗∇",
        max(rel_residual(e @ ln, ln @ e), rel_residual(g @ ln, ln @ g)),
        tol,
    )

    def unitary_witnesses():
        for t in ts:
            u = kron(ab.l_pow(1j * t), md.nabla_pow(1j * t), max_dim)
            yield f"t={t}", rel_residual(u @ w, w @ u)

    report.record_family(
        "antipode.L_nabla_unitary.1", "(L^{it}⊗∇^{it})W = W(L^{it}⊗∇^{it})", unitary_witnesses(), tol
    )
    report.record("antipode.IJ.1", "(I⊗J)W(I⊗J) = W*", ij_defect(w, ab.i_op, md.j_op, max_dim), tol)

    def scaling_witnesses():
        for t in ts:
            lhs = ab.l_pow(1j * t) @ slices @ ab.l_pow(-1j * t)
            n = md.nabla_pow(1j * t)
            yield f"t={t}", rel_residual(lhs, slice_right_family(w, dp, df, n, n))

    report.record_family(
        "antipode.scaling.1",
        "L^{it}(id⊗ω)(W)L^{-it} = (id⊗ω(∇^{-it}·∇^{it}))(W)",
        scaling_witnesses(),
        tol,
    )

    v = rb.v_op
    md_psi = qg.md_psi

    def v_witnesses():
        for t in ts:
            u = kron(md_psi.nabla_pow(1j * t), ab.l_pow(-1j * t), max_dim)
            yield f"t={t}", rel_residual(v @ u, u @ v)

    report.record_family(
        "antipode.V_modular.1", "V(∇_ψ^{it}⊗L^{-it}) = (∇_ψ^{it}⊗L^{-it})V", v_witnesses(), tol
    )
    report.record(
        "antipode.V_JI.1",
        "(J_ψ⊗I)V(J_ψ⊗I) = V*",
        rel_residual(md_psi.j_op.tensor(ab.i_op, max_dim).sandwich(v), v.conj().T),
        tol,
    )
    report.record(
        "antipode.K_domain.1",
        "V(Σ_j Λ_ψ(p_j)⊗π(q_j)*η) = E(Λ_ψ(x)⊗η)",
        _domain_membership(qg, rb),
        tol,
    )
    return report


def _domain_membership(qg: QuantumGroupoid, rb: RegRepBundle) -> float:
    """x = (id⊗ω_{e_a,e_b})(W), p_j = (id⊗ω_{e_j,e_b})(W), q_j = (id⊗ω_{e_j,e_a})(W)."""
    rp, rf = rb.rep_psi, rb.rep_phi
    dp = rp.dim
    slices = right_slices(rb.w_op, dp, rf.dim)
    coeffs, _ = rp.pullback(slices)
    vectors = coeffs @ rp.lam.T
    summed = np.einsum("jbv,jaxy->abvyx", vectors, np.conj(slices), optimize=True)
    single = np.einsum("abv,yx->abvyx", vectors, np.eye(dp))
    shape = summed.shape[:2] + (dp * dp, dp)
    lhs = rb.v_op @ summed.reshape(shape)
    rhs = rb.e_v @ single.reshape(shape)
    return rel_residual(lhs, rhs)
