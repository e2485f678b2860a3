"""The idempotent maps Q_R, Q_ρ, Q_L, Q_λ on A⊗A.

Every map is a (d², d²) matrix acting on row-major flattened coefficient
arrays of A⊗A, so Q[(k,l),(i,j)] is the coefficient of b_k⊗b_l in Q(bᵢ⊗bⱼ).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from groupoidlab.errors import AssumptionViolationError
from groupoidlab.linalg.dense import kron, numerical_rank, rel_residual, span_distance
from groupoidlab.qgroupoid.gamma import GammaMaps
from groupoidlab.qgroupoid.model import QuantumGroupoid
from groupoidlab.types import CheckReport


@dataclass(frozen=True, eq=False)
class QMaps:
    """The four Q maps and the data they are built from.

    Attributes:
        f1: (id⊗γ_C)(E) in A⊗A
        q_r, q_rho, q_l, q_lambda: Coefficient matrices of shape (d², d²)
        q_l_residual: Consistency defect of the Q_L solve
        q_l_rank: Rank of the spanning family used for Q_L
    """

    f1: np.ndarray
    q_r: np.ndarray
    q_rho: np.ndarray
    q_l: np.ndarray
    q_lambda: np.ndarray
    q_l_residual: float = 0.0
    q_l_rank: int = 0

    def items(self) -> list[tuple[str, np.ndarray]]:
        return [("R", self.q_r), ("rho", self.q_rho), ("L", self.q_l), ("lambda", self.q_lambda)]


def apply_pair_map(q: np.ndarray, x: np.ndarray) -> np.ndarray:
    """Apply a (d², d²) map to A⊗A coefficient arrays of shape (..., d, d)."""
    d = x.shape[-1]
    flat = x.reshape(*x.shape[:-2], d * d)
    return (flat @ q.T).reshape(x.shape)


def basis_pairs(d: int) -> np.ndarray:
    """Elementary tensors bᵢ⊗bⱼ as an array [i, j, k, l]."""
    return np.eye(d * d).reshape(d, d, d, d)


def _conjugate_by_star(qg: QuantumGroupoid, q: np.ndarray) -> np.ndarray:
    """Matrix of X ↦ Q(X*)*."""
    st2 = kron(qg.A.star_matrix, qg.A.star_matrix)
    return st2 @ np.conj(q) @ np.conj(st2)


def _pair_products(qg: QuantumGroupoid) -> np.ndarray:
    """EY[β, γ] = E(b_β⊗b_γ)."""
    c = qg.A.mult
    return np.einsum("mn,mbk,ngl->bgkl", qg.E, c, c, optimize=True)


def _starred_delta(qg: QuantumGroupoid) -> np.ndarray:
    """D[a] = Δ(b_a*)."""
    return np.einsum("ma,mij->aij", qg.A.star_matrix, qg.delta)


def build_q_maps(qg: QuantumGroupoid, gm: GammaMaps, tol: float = 1e-9) -> QMaps:
    """Assemble Q_R from F₁ and solve Q_L on its spanning family.

    Q_R(p⊗b) = (p⊗1)F₁(1⊗b). Q_L is the least-squares solution of
    Q_L(c⊗q) = (ψ⊗id⊗id)(Δ₁₃(a*)(E⊗1)(y⊗c⊗1)) over
    q = (ψ⊗id)(Δ(a*)(y⊗1)) for basis a, y, c.

    Raises:
        AssumptionViolationError: If the Q_L system is inconsistent beyond tol
    """
    d = qg.dim
    c = qg.A.mult
    to_b = qg.incl_B @ gm.gamma_c @ qg.proj_C
    f1 = qg.E @ to_b.T
    q_r = np.einsum("mn,imk,njl->klij", f1, c, c, optimize=True).reshape(d * d, d * d)

    starred = _starred_delta(qg)
    psi_pairs = qg.psi.pair_matrix
    ey = _pair_products(qg)
    q_vecs = np.einsum("aij,ib->abj", starred, psi_pairs)
    inputs = np.einsum("gl,abj->abglj", np.eye(d), q_vecs).reshape(-1, d * d).T
    outputs = np.einsum("aij,ik,bgkl->abglj", starred, psi_pairs, ey, optimize=True).reshape(-1, d * d).T
    q_l = outputs @ np.linalg.pinv(inputs)
    residual = rel_residual(q_l @ inputs, outputs)
    if residual > tol:
        raise AssumptionViolationError(
            f"Q_L is not well defined on its spanning family (residual {residual:.3e})"
        )

    return QMaps(
        f1=f1,
        q_r=q_r,
        q_rho=_conjugate_by_star(qg, q_r),
        q_l=q_l,
        q_lambda=_conjugate_by_star(qg, q_l),
        q_l_residual=residual,
        q_l_rank=numerical_rank(inputs),
    )


def qmap_checks(qg: QuantumGroupoid, qm: QMaps, tol: float) -> CheckReport:
    """Idempotency, module properties, characterizations and defining formulas."""
    report = CheckReport(label=f"qmaps {qg.label}")
    A = qg.A
    d = qg.dim
    c = A.mult
    st = A.star_matrix
    phi = qg.phi.values

    for name, q in qm.items():
        report.record(f"qgroupoid.Q_{name}_idempotent.1", f"Q_{name}² = Q_{name}", rel_residual(q @ q, q), tol)

    report.record(
        "qgroupoid.Q_L_solve.1",
        "Q_L is well defined on its spanning family",
        qm.q_l_residual,
        tol,
        detail=f"family rank {qm.q_l_rank} of {d * d}",
    )

    pairs = basis_pairs(d)
    q_r_pairs = apply_pair_map(qm.q_r, pairs)
    # (b_s b_r ⊗ b) against (b_s⊗1)·Q_R(b_r⊗b)
    lhs = np.einsum("srk,kblm->srblm", c, q_r_pairs)
    lefts = np.einsum("sa,b->sab", np.eye(d), qg.unit)
    rhs = A.mul2(lefts[:, None, None], q_r_pairs[None])
    report.record("qgroupoid.Q_R_module.1", "Q_R(sr⊗b) = (s⊗1)Q_R(r⊗b)", rel_residual(lhs, rhs), tol)

    starred = _starred_delta(qg)
    ey = _pair_products(qg)
    eye = np.eye(d)
    q_r4 = qm.q_r.reshape(d, d, d, d)
    source = np.einsum("aij,jxr,bm->abximr", starred, c, eye, optimize=True)
    target = np.einsum("aij,bxmn,jnr->abximr", starred, ey, c, optimize=True)
    image = np.einsum("klim,abximr->abxklr", q_r4, source, optimize=True)
    report.record(
        "qgroupoid.Q_R_characterization.1",
        "(Q_R⊗id)(Δ₁₃(a*)(1⊗b⊗x)) = Δ₁₃(a*)(1⊗E)(1⊗b⊗x)",
        rel_residual(image, target),
        tol,
    )
    report.record(
        "qgroupoid.Q_R_formula.1",
        "Q_R(p⊗b) = (id⊗id⊗φ)(Δ₁₃(a*)(1⊗E)(1⊗b⊗x)) for p = (id⊗φ)(Δ(a*)(1⊗x))",
        rel_residual(image @ phi, target @ phi),
        tol,
    )

    # Q_ρ on p = (id⊗φ)((1⊗x*)(Δa))
    x_star_prod = np.einsum("sx,sjr->xjr", st, c)
    source_rho = np.einsum("aij,xjr,bm->abximr", qg.delta, x_star_prod, eye, optimize=True)
    z = np.einsum("sx,pq,bpm,sqn->bxmn", st, qg.E, c, c, optimize=True)
    target_rho = np.einsum("aij,bxmn,njr->abximr", qg.delta, z, c, optimize=True)
    image_rho = np.einsum("klim,abximr->abxklr", qm.q_rho.reshape(d, d, d, d), source_rho, optimize=True)
    report.record(
        "qgroupoid.Q_rho_formula.1",
        "Q_ρ(p⊗b) = (id⊗id⊗φ)((1⊗b⊗x*)(1⊗E)Δ₁₃(a)) for p = (id⊗φ)((1⊗x*)(Δa))",
        rel_residual(image_rho @ phi, target_rho @ phi),
        tol,
    )

    # Q_L acting on legs 2, 3
    source_l = np.einsum("aij,iyk,gm->aygkmj", starred, c, eye, optimize=True)
    target_l = _q_l_target(starred, ey, c)
    image_l = np.einsum("lnmj,aygkmj->aygkln", qm.q_l.reshape(d, d, d, d), source_l, optimize=True)
    report.record(
        "qgroupoid.Q_L_characterization.1",
        "(id⊗Q_L)(Δ₁₃(a*)(y⊗c⊗1)) = Δ₁₃(a*)(E⊗1)(y⊗c⊗1)",
        rel_residual(image_l, target_l),
        tol,
    )

    star_pairs = A.star2(pairs)
    report.record(
        "qgroupoid.Q_rho_relation.1",
        "Q_ρ(p⊗b) = Q_R(p*⊗b*)*",
        rel_residual(apply_pair_map(qm.q_rho, pairs), A.star2(apply_pair_map(qm.q_r, star_pairs))),
        tol,
    )
    report.record(
        "qgroupoid.Q_lambda_relation.1",
        "Q_λ(c⊗q) = Q_L(c*⊗q*)*",
        rel_residual(apply_pair_map(qm.q_lambda, pairs), A.star2(apply_pair_map(qm.q_l, star_pairs))),
        tol,
    )
    return report


def _q_l_target(starred: np.ndarray, ey: np.ndarray, c: np.ndarray) -> np.ndarray:
    """Δ₁₃(b_a*)·(E(b_y⊗b_g)⊗1) as an array [a, y, g, p, l, j]."""
    return np.einsum("aij,ygkl,ikp->aygplj", starred, ey, c, optimize=True)


def invariance_identities(qg: QuantumGroupoid, qm: QMaps, tol: float) -> CheckReport:
    """The four slice identities linking the Q maps with invariance of φ and ψ."""
    report = CheckReport(label=f"invariance {qg.label}")
    A = qg.A
    d = qg.dim
    u = qg.unit
    delta = qg.delta
    pairs = basis_pairs(d)
    lefts = np.einsum("ca,b->cab", np.eye(d), u)
    rights = np.einsum("a,bc->bac", u, np.eye(d))

    def phi_slice(x):
        return qg.slice_second(qg.phi, x)

    def psi_slice(x):
        return qg.slice_first(qg.psi, x)

    report.record(
        "qgroupoid.Q_lambda_invariance.1",
        "(id⊗φ)((c⊗1)(Δq)) = (id⊗φ)(Q_λ(c⊗q))",
        rel_residual(phi_slice(A.mul2(lefts[:, None], delta[None])), phi_slice(apply_pair_map(qm.q_lambda, pairs))),
        tol,
    )
    report.record(
        "qgroupoid.Q_L_invariance.1",
        "(id⊗φ)((Δq)(c⊗1)) = (id⊗φ)(Q_L(c⊗q))",
        rel_residual(phi_slice(A.mul2(delta[None], lefts[:, None])), phi_slice(apply_pair_map(qm.q_l, pairs))),
        tol,
    )
    report.record(
        "qgroupoid.Q_rho_invariance.1",
        "(ψ⊗id)((1⊗b)(Δp)) = (ψ⊗id)(Q_ρ(p⊗b))",
        rel_residual(psi_slice(A.mul2(rights[None], delta[:, None])), psi_slice(apply_pair_map(qm.q_rho, pairs))),
        tol,
    )
    report.record(
        "qgroupoid.Q_R_invariance.1",
        "(ψ⊗id)((Δp)(1⊗b)) = (ψ⊗id)(Q_R(p⊗b))",
        rel_residual(psi_slice(A.mul2(delta[:, None], rights[None])), psi_slice(apply_pair_map(qm.q_r, pairs))),
        tol,
    )
    return report


def base_reconstruction(qg: QuantumGroupoid, tol: float) -> CheckReport:
    """span{(ψ⊗id)(Δk)} = B and span{(id⊗φ)(Δk)} = C."""
    report = CheckReport(label=f"base {qg.label}")
    right = qg.slice_first(qg.psi, qg.delta).T
    left = qg.slice_second(qg.phi, qg.delta).T
    report.record(
        "qgroupoid.base_B.1",
        "span{(ψ⊗id)(Δk)} = B",
        span_distance(right, qg.incl_B),
        tol,
        detail=f"dim B = {qg.B.dim}",
    )
    report.record(
        "qgroupoid.base_C.1",
        "span{(id⊗φ)(Δk)} = C",
        span_distance(left, qg.incl_C),
        tol,
        detail=f"dim C = {qg.C.dim}",
    )
    return report
