"""Identity suite for the regular representations V and W."""

from __future__ import annotations

from typing import Iterator

import numpy as np

from groupoidlab.algebra.weights import GNSRep
from groupoidlab.linalg.conjlinear import left_slices, right_slices, slice_left_family, slice_right_family
from groupoidlab.linalg.dense import (
    DEFAULT_MAX_DIM,
    kron,
    leg_operator,
    partial_isometry_defect,
    projection_defect,
    rel_residual,
    span_distance,
)
from groupoidlab.qgroupoid.model import QuantumGroupoid
from groupoidlab.regreps.operators import RegRepBundle, pair_vectors, represent_pair
from groupoidlab.types import CheckReport


def implemented_comultiplication_defect(
    delta: np.ndarray, w_op: np.ndarray, rep_left: GNSRep, rep_right: GNSRep
) -> float:
    """Residual of (π⊗π_φ)(Δx) = W*(1⊗π_φ(x))W over basis x."""
    eye = np.eye(rep_left.dim)
    implemented = np.stack([w_op.conj().T @ kron(eye, p) @ w_op for p in rep_right.pi])
    return rel_residual(implemented, represent_pair(rep_left, rep_right, delta))


def _v_adjoint_family(qg: QuantumGroupoid) -> tuple[np.ndarray, np.ndarray]:
    """Vectors Λ_ψ(a)⊗Λ(b) and (Λ_ψ⊗Λ)(z(1⊗b)) as columns.

    a = (id⊗φ)(Δ(r*y)(1⊗s)) and z = (id⊗id⊗φ)(Δ₁₃(r*y)Δ₂₃(s)) over basis r, y, s, b.
    """
    A = qg.A
    c = A.mult
    d = qg.dim
    phi_pairs = qg.phi.pair_matrix
    rp = qg.rep_psi
    ry = np.einsum("mr,myn->ryn", A.star_matrix, c)
    d_ry = np.einsum("ryn,nij->ryij", ry, qg.delta)
    a = np.einsum("ryij,js->rysi", d_ry, phi_pairs)
    z = np.einsum("ryij,skl,jl->rysik", d_ry, qg.delta, phi_pairs, optimize=True)
    zb = np.einsum("rysik,kbm->rysbim", z, c, optimize=True)
    sources = pair_vectors(rp, rp, np.einsum("rysi,bj->rysbij", a, np.eye(d)))
    targets = pair_vectors(rp, rp, zb)
    dim = rp.dim * rp.dim
    return sources.reshape(-1, dim).T, targets.reshape(-1, dim).T


def _w_checks(report: CheckReport, qg: QuantumGroupoid, tag: str, w: np.ndarray, e_rep: np.ndarray,
              g_l: np.ndarray, rep_left: GNSRep, tol: float, max_dim: int) -> None:
    rf = qg.rep_phi
    w_star = w.conj().T
    eye = np.eye(rep_left.dim)
    prefix = f"regreps.W_{tag}"

    report.record(f"{prefix}_partial_isometry.1", "WW*W = W", partial_isometry_defect(w), tol)
    report.record(f"{prefix}_source.1", "W*W = E", rel_residual(w_star @ w, e_rep), tol)
    report.record(f"{prefix}_range.1", "WW* = G_L", rel_residual(w @ w_star, g_l), tol)
    report.record(f"{prefix}_E.1", "EW* = W*", rel_residual(e_rep @ w_star, w_star), tol)

    delta_rep = represent_pair(rep_left, rf, qg.delta)
    lhs = np.stack([w_star @ kron(eye, p, max_dim) for p in rf.pi])
    report.record(
        f"{prefix}_intertwining.1", "W*(1⊗x) = (Δx)W*", rel_residual(lhs, delta_rep @ w_star), tol
    )
    report.record(
        f"{prefix}_implements_delta.1",
        "(π⊗π_φ)(Δx) = W*(1⊗π_φ(x))W",
        implemented_comultiplication_defect(qg.delta, w, rep_left, rf),
        tol,
    )

    # (id⊗ω_{Λφ(s),Λφ(r)})(W) = π((id⊗φ)(Δ(r*)(1⊗s)))
    slices = slice_right_family(w, rep_left.dim, rf.dim, rf.lam, rf.lam)
    starred = np.einsum("ma,mij->aij", qg.A.star_matrix, qg.delta)
    coeffs = np.einsum("rij,js->sri", starred, qg.phi.pair_matrix)
    report.record(
        f"{prefix}_slice.1",
        "(id⊗ω_{Λφ(s),Λφ(r)})(W) = π((id⊗φ)(Δ(r*)(1⊗s)))",
        rel_residual(slices, rep_left.rep(coeffs)),
        tol,
    )

    all_slices = right_slices(w, rep_left.dim, rf.dim).reshape(rf.dim ** 2, -1).T
    report.record(
        f"{prefix}_generation.1",
        "span{(id⊗ω)(W)} = π(A)",
        span_distance(all_slices, rep_left.pi.reshape(qg.dim, -1).T),
        tol,
    )

    # (id⊗ω_{Λ(a),Λ(x)})(W) = ((id⊗ω_{Λ(σ_{-i}(a*)),Λ(x*)})(W))*
    st = qg.A.star_matrix
    lhs = slice_right_family(w, rep_left.dim, rf.dim, rf.lam, rf.lam)
    twisted = rf.lam @ qg.md_phi.sigma(-1j) @ st
    rhs = slice_right_family(w, rep_left.dim, rf.dim, twisted, rf.lam @ st)
    report.record(
        f"{prefix}_modular_slice.1",
        "(id⊗ω_{Λ(a),Λ(x)})(W) = ((id⊗ω_{Λ(σ_{-i}(a*)),Λ(x*)})(W))*",
        rel_residual(lhs, np.conj(rhs).swapaxes(-1, -2)),
        tol,
    )


def regular_rep_checks(
    qg: QuantumGroupoid, bundle: RegRepBundle, tol: float, max_dim: int = DEFAULT_MAX_DIM
) -> CheckReport:
    """Partial isometry, range, intertwining, slice and generation identities of V and W.

    Raises:
        ResourceLimitError: If an operator on two or three legs exceeds max_dim
    """
    report = CheckReport(label=f"regreps {qg.label}")
    rp, rf = bundle.rep_psi, bundle.rep_phi
    v = bundle.v_op
    v_star = v.conj().T
    d = qg.dim

    report.record("regreps.V_partial_isometry.1", "VV*V = V", partial_isometry_defect(v), tol)
    report.record("regreps.V_range.1", "VV* = E", rel_residual(v @ v_star, bundle.e_v), tol)
    report.record("regreps.V_source.1", "V*V = G_R", rel_residual(v_star @ v, bundle.g_r), tol)
    report.record("regreps.V_E.1", "EV = V", rel_residual(bundle.e_v @ v, v), tol)
    eye = np.eye(rp.dim)
    lhs = np.stack([v @ kron(p, eye, max_dim) for p in rp.pi])
    rhs = represent_pair(rp, rp, qg.delta) @ v
    report.record("regreps.V_intertwining.1", "V(x⊗1) = (Δx)V", rel_residual(lhs, rhs), tol)

    sources, targets = _v_adjoint_family(qg)
    report.record(
        "regreps.V_adjoint.1",
        "V*(Λ_ψ(a)⊗Λ(b)) = (Λ_ψ⊗Λ)(z(1⊗b))",
        rel_residual(v_star @ sources, targets),
        tol,
    )
    report.record(
        "regreps.V_adjoint.2",
        "V((Λ_ψ⊗Λ)(z(1⊗b))) = E(Λ_ψ(a)⊗Λ(b))",
        rel_residual(v @ targets, bundle.e_v @ sources),
        tol,
    )

    # (ω_{Λψ(b),Λψ(a)}⊗id)(V) = π((ψ⊗id)((a*⊗1)(Δb)))
    slices = slice_left_family(v, rp.dim, rp.dim, rp.lam, rp.lam)
    coeffs = np.einsum("ai,bij->baj", qg.psi.gram, qg.delta)
    report.record(
        "regreps.V_slice.1",
        "(ω_{Λψ(b),Λψ(a)}⊗id)(V) = π((ψ⊗id)((a*⊗1)(Δb)))",
        rel_residual(slices, rp.rep(coeffs)),
        tol,
    )
    all_slices = left_slices(v, rp.dim, rp.dim).reshape(rp.dim ** 2, -1).T
    report.record(
        "regreps.V_generation.1",
        "span{(ω⊗id)(V)} = π(A)",
        span_distance(all_slices, rp.pi.reshape(d, -1).T),
        tol,
    )

    for name, g in (("R", bundle.g_r), ("rho", bundle.g_rho), ("L", bundle.g_l), ("lambda", bundle.g_lambda)):
        report.record(f"regreps.G_{name}_projection.1", f"G_{name} is an orthogonal projection", projection_defect(g), tol)

    _w_checks(report, qg, "psi", bundle.w_op, bundle.e_w, bundle.g_l, rp, tol, max_dim)
    _w_checks(report, qg, "phi", bundle.w_phi, bundle.e_phi, bundle.g_l_phi, rf, tol, max_dim)

    report.record_family(
        "regreps.delta_slice.1",
        "Δx = (id⊗id⊗ω(c·))(W₁₃W₂₃) for x = (id⊗ω(c·))(W)",
        _delta_slice_witnesses(qg, bundle, max_dim),
        tol,
    )
    report.record(
        "regreps.G_L_characterization.1",
        "(id⊗G_L)((Λ⊗Λ⊗Λ_φ)(Δ₁₃(a)(y⊗c⊗1))) = (Λ⊗Λ⊗Λ_φ)(Δ₁₃(a)(E⊗1)(y⊗c⊗1))",
        _g_l_characterization(qg, bundle),
        tol,
    )
    return report


def _delta_slice_witnesses(
    qg: QuantumGroupoid, bundle: RegRepBundle, max_dim: int
) -> Iterator[tuple[str, float]]:
    rp, rf = bundle.rep_psi, bundle.rep_phi
    dims = [rp.dim, rf.dim, rf.dim]
    w13 = leg_operator(bundle.w_op, dims, [0, 2], max_dim)
    w23 = leg_operator(bundle.w_phi, dims, [1, 2], max_dim)
    product = w13 @ w23
    # ω(c·) = ω_{ξ, π(c)*ζ}
    zetas = np.einsum("kba,br->akr", np.conj(rf.pi), rf.lam).reshape(rf.dim, -1)
    for s in range(qg.dim):
        xi = rf.lam[:, s : s + 1]
        x_ops = slice_right_family(bundle.w_op, rp.dim, rf.dim, xi, zetas)[0]
        x, _ = rp.pullback(x_ops)
        expected = represent_pair(rp, rf, qg.comult(x))
        sliced = slice_right_family(product, rp.dim * rf.dim, rf.dim, xi, zetas)[0]
        yield f"s={s}", rel_residual(sliced, expected)


def _g_l_characterization(qg: QuantumGroupoid, bundle: RegRepBundle) -> float:
    c = qg.A.mult
    d = qg.dim
    rp, rf = bundle.rep_psi, bundle.rep_phi
    ey = np.einsum("mn,mbk,ngl->bgkl", qg.E, c, c, optimize=True)
    source = np.einsum("aij,iyp,gm->aygpmj", qg.delta, c, np.eye(d), optimize=True)
    target = np.einsum("aij,ygkl,ikp->aygplj", qg.delta, ey, c, optimize=True)

    def vectors(t: np.ndarray) -> np.ndarray:
        return np.einsum("...pmj,Pp,Mm,Jj->...PMJ", t, rp.lam, rp.lam, rf.lam, optimize=True)

    g4 = bundle.g_l.reshape(rp.dim, rf.dim, rp.dim, rf.dim)
    image = np.einsum("LJMj,...PMj->...PLJ", g4, vectors(source), optimize=True)
    return rel_residual(image, vectors(target))
