"""Axiom verifier for a finite quantum groupoid."""

from __future__ import annotations

from typing import Sequence

import numpy as np

from groupoidlab.linalg.dense import null_space, rel_residual, span_distance, span_membership
from groupoidlab.qgroupoid.model import QuantumGroupoid
from groupoidlab.types import CheckReport


def vector_functionals(qg: QuantumGroupoid) -> np.ndarray:
    """Values on the basis of ω_{Λφ(bᵢ),Λφ(bⱼ)}(x) = φ(bⱼ* x bᵢ); shape (d*d, d)."""
    A = qg.A
    c = A.mult
    # coefficients of bⱼ* b_k bᵢ, then φ
    vals = np.einsum("mj,mkn,nip,p->jik", A.star_matrix, c, c, qg.phi.values, optimize=True)
    return vals.reshape(-1, A.dim)


def separability_defect(qg: QuantumGroupoid) -> tuple[float, float, float]:
    """Residuals of E ∈ B⊗C, (ν⊗id)(E) = 1 and (ν⊗id)(E(b⊗1)) = R_BC(σ^ν_{i/2}(b))."""
    e_bc = qg.proj_B @ qg.E @ qg.proj_C.T
    membership = rel_residual(qg.incl_B @ e_bc @ qg.incl_C.T, qg.E)
    normalization = rel_residual(qg.incl_C @ (e_bc.T @ qg.nu.values), qg.unit)

    A = qg.A
    sigma_half = qg.md_nu.sigma(0.5j)
    lhs = []
    for b in range(qg.B.dim):
        eb = A.mul2(qg.E, np.outer(qg.incl_B[:, b], qg.unit))
        eb_bc = qg.proj_B @ eb @ qg.proj_C.T
        lhs.append(qg.incl_C @ (eb_bc.T @ qg.nu.values))
    expected = qg.incl_C @ qg.r_bc @ sigma_half
    twisted = rel_residual(np.column_stack(lhs), expected)
    return membership, normalization, twisted


def e_solution_dimension(qg: QuantumGroupoid) -> int:
    """Dimension of {x ∈ B⊗C : xΔ(a) = 0 for all a}, the freedom left in xΔ(a) = Δ(a)."""
    xs = np.einsum("ia,jb->abij", qg.incl_B, qg.incl_C)
    images = qg.A.mul2(xs[:, :, None], qg.delta[None, None])
    return null_space(images.reshape(qg.B.dim * qg.C.dim, -1).T).shape[1]


def structure_axioms(qg: QuantumGroupoid, tol: float, ts: Sequence[float] = (0.3, 1.0, -0.7)) -> CheckReport:
    """Axioms on Δ, E, B, C and ν; none of them involves ψ.

    Every identity is evaluated on the basis (or basis pairs) of the algebras
    involved; density and strict convergence statements become exact span
    equalities and finite sums.
    """
    report = CheckReport(label=f"structure {qg.label}")
    A = qg.A
    d = qg.dim
    c = A.mult
    st = A.star_matrix
    u = qg.unit
    delta = qg.delta
    e = qg.E
    eye = np.eye(d)

    # (a) Δ is a *-homomorphism and is full
    lhs = np.einsum("ijk,kab->ijab", c, delta)
    rhs = A.mul2(delta[:, None], delta[None, :])
    report.record("qgroupoid.delta_multiplicative.1", "Δ(xy) = Δ(x)Δ(y)", rel_residual(rhs, lhs), tol)
    report.record(
        "qgroupoid.delta_star.1",
        "Δ(x*) = Δ(x)*",
        rel_residual(A.star2(delta), np.einsum("mi,mab->iab", st, delta)),
        tol,
    )
    funcs = vector_functionals(qg)
    right_slices = np.einsum("kij,fj->ikf", delta, funcs).reshape(d, -1)
    left_slices = np.einsum("kij,fi->jkf", delta, funcs).reshape(d, -1)
    report.record(
        "qgroupoid.delta_full.1", "span{(id⊗ω)(Δa)} = A", span_distance(right_slices, eye), tol
    )
    report.record(
        "qgroupoid.delta_full.2", "span{(ω⊗id)(Δa)} = A", span_distance(left_slices, eye), tol
    )

    # (b) Δ(A)(A⊗A) = E(A⊗A) and (A⊗A)Δ(A) = (A⊗A)E
    d_right = np.einsum("iab,ajp,bkq->ijkpq", delta, c, c, optimize=True).reshape(-1, d * d).T
    e_right = np.einsum("ab,ajp,bkq->jkpq", e, c, c, optimize=True).reshape(-1, d * d).T
    d_left = np.einsum("iab,jap,kbq->ijkpq", delta, c, c, optimize=True).reshape(-1, d * d).T
    e_left = np.einsum("ab,jap,kbq->jkpq", e, c, c, optimize=True).reshape(-1, d * d).T
    report.record("qgroupoid.nondegeneracy.1", "span Δ(A)(A⊗A) = E(A⊗A)", span_distance(d_right, e_right), tol)
    report.record("qgroupoid.nondegeneracy.2", "span (A⊗A)Δ(A) = (A⊗A)E", span_distance(d_left, e_left), tol)

    # (c) E is a self-adjoint idempotent in B⊗C, separability
    report.record("qgroupoid.E_selfadjoint.1", "E* = E", rel_residual(A.star2(e), e), tol)
    report.record("qgroupoid.E_idempotent.1", "E² = E", rel_residual(A.mul2(e, e), e), tol)
    membership, normalization, twisted = separability_defect(qg)
    report.record("qgroupoid.E_in_BC.1", "E ∈ B⊗C", membership, tol)
    report.record("qgroupoid.separability.1", "(ν⊗id)(E) = 1", normalization, tol)
    report.record(
        "qgroupoid.separability.2", "(ν⊗id)(E(b⊗1)) = R_BC(σ^ν_{i/2}(b))", twisted, tol
    )

    # (d) weak comultiplicativity of the unit
    e1 = qg.leg12(e)
    e2 = qg.leg23(e)
    e1e2 = A.mul3(e1, e2)
    report.record(
        "qgroupoid.weak_unit.1", "(E⊗1)(1⊗E) = (1⊗E)(E⊗1)", rel_residual(A.mul3(e2, e1), e1e2), tol
    )
    report.record(
        "qgroupoid.weak_unit.2", "(id⊗Δ)(E) = (E⊗1)(1⊗E)", rel_residual(qg.comult_right(e), e1e2), tol
    )
    report.record(
        "qgroupoid.weak_unit.3", "(Δ⊗id)(E) = (E⊗1)(1⊗E)", rel_residual(qg.comult_left(e), e1e2), tol
    )

    # (e) coassociativity and E(Δa) = Δa = (Δa)E
    left = np.einsum("kij,iab->kabj", delta, delta)
    right = np.einsum("kij,jab->kiab", delta, delta)
    report.record("qgroupoid.coassociativity.1", "(Δ⊗id)Δ = (id⊗Δ)Δ", rel_residual(left, right), tol)
    report.record(
        "qgroupoid.E_delta.1",
        "E(Δa) = Δa",
        rel_residual(A.mul2(e, delta), delta),
        tol,
        detail=f"xΔ(a) = 0 has a {e_solution_dimension(qg)}-dimensional solution space in B⊗C",
    )
    report.record("qgroupoid.E_delta.2", "(Δa)E = Δa", rel_residual(A.mul2(delta, e), delta), tol)

    # (f) Δ on the base algebras
    ys = qg.incl_B.T
    one_y = np.einsum("i,bj->bij", u, ys)
    dy = qg.comult(ys)
    report.record("qgroupoid.delta_on_B.1", "Δy = E(1⊗y), y ∈ B", rel_residual(A.mul2(e, one_y), dy), tol)
    report.record("qgroupoid.delta_on_B.2", "Δy = (1⊗y)E, y ∈ B", rel_residual(A.mul2(one_y, e), dy), tol)
    xs = qg.incl_C.T
    x_one = np.einsum("bi,j->bij", xs, u)
    dx = qg.comult(xs)
    report.record("qgroupoid.delta_on_C.1", "Δx = (x⊗1)E, x ∈ C", rel_residual(A.mul2(x_one, e), dx), tol)
    report.record("qgroupoid.delta_on_C.2", "Δx = E(x⊗1), x ∈ C", rel_residual(A.mul2(e, x_one), dx), tol)

    # (i) σ^φ_t restricts to B and preserves ν
    def theta_defects():
        for t in ts:
            sigma = qg.md_phi.sigma(t)
            image = sigma @ qg.incl_B
            inside = float(np.max(span_membership(image, qg.incl_B)))
            theta = qg.proj_B @ image
            yield f"t={t}", max(inside, rel_residual(theta.T @ qg.nu.values, qg.nu.values))

    report.record_family("qgroupoid.theta.1", "σ^φ_t(B) = B and ν∘σ^φ_t|_B = ν", theta_defects(), tol)
    return report


def invariance_axioms(qg: QuantumGroupoid, tol: float) -> CheckReport:
    """Left invariance of φ, right invariance of ψ and their compatibility with μ and ν."""
    report = CheckReport(label=f"invariance {qg.label}")
    delta = qg.delta

    # (g) invariance
    left_inv = qg.slice_second(qg.phi, delta)
    right_inv = qg.slice_first(qg.psi, delta)
    report.record_family(
        "qgroupoid.left_invariance.1",
        "(id⊗φ)(Δa) ∈ C",
        ((f"b{k}", r) for k, r in enumerate(span_membership(left_inv.T, qg.incl_C))),
        tol,
    )
    report.record_family(
        "qgroupoid.right_invariance.1",
        "(ψ⊗id)(Δa) ∈ B",
        ((f"b{k}", r) for k, r in enumerate(span_membership(right_inv.T, qg.incl_B))),
        tol,
    )

    # (h) compatibility of ν with the Haar weights
    nu_side = (right_inv @ qg.proj_B.T) @ qg.nu.values
    report.record(
        "qgroupoid.nu_psi.1", "ν((ψ⊗id)(Δx)) = ψ(x)", rel_residual(nu_side, qg.psi.values), tol
    )
    mu_side = (left_inv @ qg.proj_C.T) @ qg.mu.values
    report.record(
        "qgroupoid.mu_phi.1", "μ((id⊗φ)(Δx)) = φ(x)", rel_residual(mu_side, qg.phi.values), tol
    )
    return report


def verify_axioms(
    qg: QuantumGroupoid,
    tol: float,
    ts: Sequence[float] = (0.3, 1.0, -0.7),
    structure: CheckReport | None = None,
) -> CheckReport:
    """One check per axiom of the quantum groupoid definition.

    Args:
        qg: Data to verify
        tol: Residual tolerance
        ts: Sample times for the one-parameter groups
        structure: Result of `structure_axioms` for data sharing Δ, E, ν and φ
            with `qg`; reused instead of recomputed
    """
    report = CheckReport(label=f"axioms {qg.label}")
    report.merge(structure if structure is not None else structure_axioms(qg, tol, ts))
    report.merge(invariance_axioms(qg, tol))
    return report
