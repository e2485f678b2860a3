"""Independent characterizations of the antipode, compared with the polar route."""

from __future__ import annotations

from itertools import combinations
from typing import Sequence

import numpy as np

from groupoidlab.antipode.derive import AntipodeBundle
from groupoidlab.linalg.conjlinear import left_slices, right_slices
from groupoidlab.linalg.dense import rel_residual, solve_linear_map
from groupoidlab.qgroupoid.model import QuantumGroupoid
from groupoidlab.regreps.operators import RegRepBundle
from groupoidlab.types import CheckReport


def _columns(x: np.ndarray) -> np.ndarray:
    return x.reshape(-1, x.shape[-1]).T


def w_slice_family(qg: QuantumGroupoid, rb: RegRepBundle) -> tuple[np.ndarray, np.ndarray]:
    """Coefficients of (id⊗ω)(W) and (id⊗ω)(W*) over ω_{e_a,e_b}; indexed [a, b]."""
    rp, rf = rb.rep_psi, rb.rep_phi
    x, _ = rp.pullback(right_slices(rb.w_op, rp.dim, rf.dim))
    y, _ = rp.pullback(right_slices(rb.w_op.conj().T, rp.dim, rf.dim))
    return x, y


def strong_left_family(qg: QuantumGroupoid) -> tuple[np.ndarray, np.ndarray]:
    """(id⊗φ)(Δ(a*)(1⊗b)) and (id⊗φ)((1⊗a*)(Δb)); indexed [a, b]."""
    starred = np.einsum("ma,mij->aij", qg.A.star_matrix, qg.delta)
    sources = np.einsum("aij,jb->abi", starred, qg.phi.pair_matrix)
    targets = np.einsum("bij,aj->abi", qg.delta, qg.phi.gram)
    return sources, targets


def strong_right_family(qg: QuantumGroupoid) -> tuple[np.ndarray, np.ndarray]:
    """(ψ⊗id)((a*⊗1)(Δb)) and (ψ⊗id)(Δ(a*)(b⊗1)); indexed [a, b]."""
    starred = np.einsum("ma,mij->aij", qg.A.star_matrix, qg.delta)
    sources = np.einsum("ai,bij->abj", qg.psi.gram, qg.delta)
    targets = np.einsum("aij,ib->abj", starred, qg.psi.pair_matrix)
    return sources, targets


def v_slice_family(qg: QuantumGroupoid, rb: RegRepBundle) -> tuple[np.ndarray, np.ndarray]:
    """Coefficients of (ω⊗id)(V) and (ω⊗id)(V*) over ω_{e_a,e_b}."""
    rp = rb.rep_psi
    x, _ = rp.pullback(left_slices(rb.v_op, rp.dim, rp.dim))
    y, _ = rp.pullback(left_slices(rb.v_op.conj().T, rp.dim, rp.dim))
    return x, y


def solved_antipodes(qg: QuantumGroupoid, ab: AntipodeBundle, rb: RegRepBundle) -> dict[str, np.ndarray]:
    """The antipode from each route, keyed by route name."""
    routes = {"polar": ab.s_map}
    for name, (src, tgt) in (
        ("W_slice", w_slice_family(qg, rb)),
        ("strong_left", strong_left_family(qg)),
        ("strong_right", strong_right_family(qg)),
    ):
        routes[name], _ = solve_linear_map(_columns(src), _columns(tgt))
    if qg.inversion_oracle is not None:
        routes["inversion"] = np.asarray(qg.inversion_oracle, dtype=complex)
    return routes


def _d0_sums(qg: QuantumGroupoid, p: np.ndarray, q: np.ndarray) -> np.ndarray:
    """Σ_j Δ(p_j)(1⊗q_j*) for families p[j, b], q[j, a]; indexed [a, b]."""
    A = qg.A
    dp = qg.comult(p)
    q_star = np.conj(q) @ A.star_matrix.T
    one_q = np.einsum("i,jak->jaik", qg.unit, q_star)
    return A.mul2(dp[:, None, :], one_q[:, :, None]).sum(axis=0)


def _d0_adjoint_sums(qg: QuantumGroupoid, p: np.ndarray, q: np.ndarray) -> np.ndarray:
    """Σ_j (1⊗p_j)Δ(q_j*) for families p[j, b], q[j, a]; indexed [a, b]."""
    A = qg.A
    one_p = np.einsum("i,jbk->jbik", qg.unit, p)
    dq = qg.comult(np.conj(q) @ A.star_matrix.T)
    return A.mul2(one_p[:, None, :], dq[:, :, None]).sum(axis=0)


def _d0_symmetric_sums(qg: QuantumGroupoid, p: np.ndarray, q: np.ndarray) -> np.ndarray:
    """Σ_j (p_j⊗1)Δ(q_j*) for families p[j, a], q[j, b]; indexed [a, b]."""
    A = qg.A
    p_one = np.einsum("jai,k->jaik", p, qg.unit)
    dq = qg.comult(np.conj(q) @ A.star_matrix.T)
    return A.mul2(p_one[:, :, None], dq[:, None, :]).sum(axis=0)


def antipode_cross_checks(
    qg: QuantumGroupoid,
    ab: AntipodeBundle,
    rb: RegRepBundle,
    tol: float,
    ts: Sequence[float] = (0.3, 1.0, -0.7),
) -> CheckReport:
    """Slice, strong invariance, D₀ and algebraic characterizations of S."""
    report = CheckReport(label=f"antipode {qg.label}")
    A = qg.A
    s = ab.s_map
    r = ab.r_map
    st = A.star_matrix
    u = qg.unit
    d = qg.dim

    for check_id, anchor, (src, tgt) in (
        ("antipode.W_slice.1", "S((id⊗ω)(W)) = (id⊗ω)(W*)", w_slice_family(qg, rb)),
        ("antipode.strong_left.1", "S((id⊗φ)(Δ(a*)(1⊗b))) = (id⊗φ)((1⊗a*)(Δb))", strong_left_family(qg)),
        ("antipode.strong_right.1", "S((ψ⊗id)((a*⊗1)(Δb))) = (ψ⊗id)(Δ(a*)(b⊗1))", strong_right_family(qg)),
        ("antipode.V_slice.1", "S((ω⊗id)(V)) = (ω⊗id)(V*)", v_slice_family(qg, rb)),
    ):
        report.record(check_id, anchor, rel_residual(src @ s.T, tgt), tol)

    routes = solved_antipodes(qg, ab, rb)
    for k, (a_name, b_name) in enumerate(combinations(sorted(routes), 2), start=1):
        report.record(
            f"antipode.oracle.{k}",
            f"antipode routes agree: {a_name} = {b_name}",
            rel_residual(routes[a_name], routes[b_name]),
            tol,
        )

    # D₀: x = slices[a, b], p_j = slices[j, b], q_j = slices[j, a], x̃ = slices[b, a]
    x, _ = w_slice_family(qg, rb)
    e = qg.E
    x_one = np.einsum("abi,k->abik", x, u)
    report.record(
        "antipode.D0.1", "Σ_j Δ(p_j)(1⊗q_j*) = E(x⊗1)", rel_residual(_d0_sums(qg, x, x), A.mul2(e, x_one)), tol
    )
    # second sum in adjoint form: Σ_j Δ(q_j)(1⊗p_j*) = E(x̃⊗1) with E* = E
    x_tilde = x.swapaxes(0, 1)
    x_tilde_star = np.conj(x_tilde) @ st.T
    report.record(
        "antipode.D0.2",
        "Σ_j (1⊗p_j)Δ(q_j*) = (x̃*⊗1)E",
        rel_residual(_d0_adjoint_sums(qg, x, x), A.mul2(np.einsum("abi,k->abik", x_tilde_star, u), e)),
        tol,
    )
    report.record(
        "antipode.D0.3", "S(x) = x̃*", rel_residual(x @ s.T, np.conj(x_tilde) @ st.T), tol
    )

    # symmetric form through R: y = R(x), p'_j = R(q_j)*, q'_j = R(p_j)*
    rx = x @ r.T
    r_star = np.conj(rx) @ st.T
    y_e = A.mul2(np.einsum("i,abk->abik", u, rx), e)
    report.record(
        "antipode.D0_symmetric.1",
        "Σ_j (p_j⊗1)Δ(q_j*) = (1⊗y)E",
        rel_residual(_d0_symmetric_sums(qg, r_star, r_star), y_e),
        tol,
    )
    ry_tilde = rx.swapaxes(0, 1)
    report.record(
        "antipode.D0_symmetric.2",
        "S(y) = ỹ*",
        rel_residual(rx @ s.T, np.conj(ry_tilde) @ st.T),
        tol,
    )

    report.record("antipode.S_squared.1", "S² = τ_{-i}", rel_residual(s @ s, ab.tau(-1j)), tol)
    report.record("antipode.RS.1", "RS = SR", rel_residual(r @ s, s @ r), tol)
    report.record_family(
        "antipode.S_tau.1",
        "S∘τ_t = τ_t∘S",
        ((f"t={t}", rel_residual(s @ ab.tau(t), ab.tau(t) @ s)) for t in ts),
        tol,
    )
    report.record_family(
        "antipode.R_tau.1",
        "R∘τ_t = τ_t∘R",
        ((f"t={t}", rel_residual(r @ ab.tau(t), ab.tau(t) @ r)) for t in ts),
        tol,
    )

    c = A.mult
    report.record(
        "antipode.S_antimultiplicative.1",
        "S(xy) = S(y)S(x)",
        rel_residual(np.einsum("ijk,mk->ijm", c, s), np.einsum("aj,bi,abm->ijm", s, s, c)),
        tol,
    )
    star_s = st @ np.conj(s)
    report.record(
        "antipode.S_star_involution.1",
        "S(S(x)*)* = x",
        rel_residual(star_s @ np.conj(star_s), np.eye(d)),
        tol,
    )
    report.record("antipode.R_involution.1", "R² = id", rel_residual(r @ r, np.eye(d)), tol)
    report.record(
        "antipode.R_star.1", "R(x*) = R(x)*", rel_residual(r @ st, st @ np.conj(r)), tol
    )
    report.record(
        "antipode.R_antimultiplicative.1",
        "R(xy) = R(y)R(x)",
        rel_residual(np.einsum("ijk,mk->ijm", c, r), np.einsum("aj,bi,abm->ijm", r, r, c)),
        tol,
    )

    # (ψ⊗id⊗id)((Δ⊗id)(Δ(c*)(w⊗1))) = E(1⊗(ψ⊗id)(Δ(c*)(w⊗1)))
    starred = np.einsum("ma,mij->aij", st, qg.delta)
    y = np.einsum("caj,awi->cwij", starred, c)
    lhs = np.einsum("cwij,ikl,k->cwlj", y, qg.delta, qg.psi.values, optimize=True)
    z = np.einsum("cwij,i->cwj", y, qg.psi.values)
    rhs = A.mul2(e, np.einsum("i,cwj->cwij", u, z))
    report.record(
        "antipode.right_invariance_precursor.1",
        "(ψ⊗id⊗id)((Δ⊗id)(Δ(c*)(w⊗1))) = E(1⊗(ψ⊗id)(Δ(c*)(w⊗1)))",
        rel_residual(lhs, rhs),
        tol,
    )
    return report
