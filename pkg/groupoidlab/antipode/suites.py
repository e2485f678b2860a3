"""Relations between S, R, τ and the modular groups, their restrictions to B and C,
the weight φ∘R, and the commutation of the one-parameter groups."""

from __future__ import annotations

from itertools import product
from typing import Sequence

import numpy as np

from groupoidlab.algebra.star import apply2
from groupoidlab.algebra.weights import Weight
from groupoidlab.antipode.derive import AntipodeBundle, derive_antipode
from groupoidlab.antipode.kop import build_K
from groupoidlab.linalg.dense import null_space, rel_residual, span_distance, span_membership
from groupoidlab.qgroupoid.axioms import verify_axioms
from groupoidlab.qgroupoid.gamma import GammaMaps
from groupoidlab.qgroupoid.model import QuantumGroupoid
from groupoidlab.regreps.operators import build_W
from groupoidlab.types import CheckReport

DEFAULT_TS = (0.3, 1.0, -0.7)


def _comult_of_map(qg: QuantumGroupoid, f: np.ndarray) -> np.ndarray:
    """Δ(f(b_k)) indexed [k, i, j]."""
    return np.einsum("mk,mij->kij", f, qg.delta)


def sigma_prime(ab: AntipodeBundle, sigma_minus_t: np.ndarray) -> np.ndarray:
    """σ′_t = R∘σ_{-t}∘R, the modular group of φ∘R."""
    return ab.r_map @ sigma_minus_t @ ab.r_map


def relations_suite(
    qg: QuantumGroupoid, ab: AntipodeBundle, tol: float, ts: Sequence[float] = DEFAULT_TS
) -> CheckReport:
    """Δ against σ, σ^ψ, τ and R, and the invariances of E."""
    report = CheckReport(label=f"relations {qg.label}")
    delta = qg.delta
    md, md_psi = qg.md_phi, qg.md_psi
    r = ab.r_map
    e = qg.E

    def witnesses(build):
        for t in ts:
            lhs, rhs = build(t)
            yield f"t={t}", rel_residual(lhs, rhs)

    report.record_family(
        "antipode.delta_sigma.1",
        "Δ(σ_t(x)) = (τ_t⊗σ_t)(Δx)",
        witnesses(lambda t: (_comult_of_map(qg, md.sigma(t)), apply2(ab.tau(t), md.sigma(t), delta))),
        tol,
    )
    report.record_family(
        "antipode.delta_tau.1",
        "Δ(τ_t(x)) = (τ_t⊗τ_t)(Δx)",
        witnesses(lambda t: (_comult_of_map(qg, ab.tau(t)), apply2(ab.tau(t), ab.tau(t), delta))),
        tol,
    )
    report.record_family(
        "antipode.delta_sigma_psi.1",
        "Δ(σ^ψ_t(x)) = (σ^ψ_t⊗τ_{-t})(Δx)",
        witnesses(lambda t: (_comult_of_map(qg, md_psi.sigma(t)), apply2(md_psi.sigma(t), ab.tau(-t), delta))),
        tol,
    )
    report.record(
        "antipode.delta_R.1",
        "(R⊗R)(Δx) = Δ^cop(R(x))",
        rel_residual(apply2(r, r, delta), _comult_of_map(qg, r).swapaxes(1, 2)),
        tol,
    )

    # τ̂_t((id⊗ω_j)(Δa)) := (id⊗ω_j∘σ_{-t})(Δ(σ_t a)) must agree with τ_t
    def tau_characterization(t):
        sources = delta.transpose(0, 2, 1)
        targets = np.einsum("ain,jn->aji", _comult_of_map(qg, md.sigma(t)), md.sigma(-t))
        return sources @ ab.tau(t).T, targets

    report.record_family(
        "antipode.tau_characterization.1",
        "τ_t((id⊗ω)(Δa)) = (id⊗ω∘σ_{-t})(Δ(σ_t a))",
        witnesses(tau_characterization),
        tol,
    )
    report.record_family(
        "antipode.E_tau_sigma.1",
        "(τ_t⊗σ_t)(E) = E",
        witnesses(lambda t: (apply2(ab.tau(t), md.sigma(t), e), e)),
        tol,
    )
    report.record_family(
        "antipode.E_tau_tau.1",
        "(τ_t⊗τ_t)(E) = E",
        witnesses(lambda t: (apply2(ab.tau(t), ab.tau(t), e), e)),
        tol,
    )
    report.record("antipode.E_R.1", "(R⊗R)(E) = flip(E)", rel_residual(apply2(r, r, e), e.T), tol)
    return report


def _fixed_space(qg: QuantumGroupoid, side: str) -> np.ndarray:
    """Solutions of Δx = (x⊗1)E = E(x⊗1) (side "C") or Δy = E(1⊗y) = (1⊗y)E (side "B")."""
    A = qg.A
    d = qg.dim
    eye = np.eye(d, dtype=complex)
    if side == "C":
        legs = np.einsum("ki,j->kij", eye, qg.unit)
    else:
        legs = np.einsum("i,kj->kij", qg.unit, eye)
    e = qg.E
    first = (qg.delta - A.mul2(legs, e)).reshape(d, -1)
    second = (qg.delta - A.mul2(e, legs)).reshape(d, -1)
    return null_space(np.concatenate([first, second], axis=1).T)


def restriction_suite(
    qg: QuantumGroupoid,
    ab: AntipodeBundle,
    gm: GammaMaps,
    tol: float,
    ts: Sequence[float] = DEFAULT_TS,
) -> CheckReport:
    """S, R, τ, σ and σ^ψ restricted to the base algebras."""
    report = CheckReport(label=f"restriction {qg.label}")
    A = qg.A
    s, r = ab.s_map, ab.r_map
    incl_b, incl_c = qg.incl_B, qg.incl_C
    u = qg.unit
    e = qg.E

    report.record(
        "antipode.fixed_space_C.1",
        "{x : Δx = (x⊗1)E = E(x⊗1)} = C",
        span_distance(_fixed_space(qg, "C"), incl_c),
        tol,
    )
    report.record(
        "antipode.fixed_space_B.1",
        "{y : Δy = E(1⊗y) = (1⊗y)E} = B",
        span_distance(_fixed_space(qg, "B"), incl_b),
        tol,
    )
    report.record("antipode.R_B.1", "R(B) = C", span_distance(r @ incl_b, incl_c), tol)
    report.record("antipode.R_C.1", "R(C) = B", span_distance(r @ incl_c, incl_b), tol)
    report.record("antipode.R_BC.1", "R|_B = R_BC", rel_residual(r @ incl_b, incl_c @ qg.r_bc), tol)

    def per_t(build):
        for t in ts:
            yield f"t={t}", build(t)

    def invariant(m: np.ndarray, incl: np.ndarray) -> float:
        return float(np.max(span_membership(m @ incl, incl)))

    report.record_family(
        "antipode.tau_B.1", "τ_t(B) = B", per_t(lambda t: invariant(ab.tau(t), incl_b)), tol
    )
    report.record_family(
        "antipode.tau_C.1", "τ_t(C) = C", per_t(lambda t: invariant(ab.tau(t), incl_c)), tol
    )

    y_one = np.einsum("ik,j->kij", incl_b, u)
    one_sy = np.einsum("i,jk->kij", u, s @ incl_b)
    report.record(
        "antipode.S_B_identity.1",
        "E(y⊗1) = E(1⊗S(y)) for y in B",
        rel_residual(A.mul2(e, y_one), A.mul2(e, one_sy)),
        tol,
    )
    one_x = np.einsum("i,jk->kij", u, incl_c)
    sx_one = np.einsum("ik,j->kij", s @ incl_c, u)
    report.record(
        "antipode.S_C_identity.1",
        "(1⊗x)E = (S(x)⊗1)E for x in C",
        rel_residual(A.mul2(one_x, e), A.mul2(sx_one, e)),
        tol,
    )
    report.record("antipode.S_B.1", "S|_B = γ_B", rel_residual(s @ incl_b, incl_c @ gm.gamma_b), tol)
    report.record("antipode.S_C.1", "S|_C = γ_C", rel_residual(s @ incl_c, incl_b @ gm.gamma_c), tol)

    md_nu, md_mu = qg.md_nu, qg.md_mu
    report.record_family(
        "antipode.tau_restricted_B.1",
        "τ_t|_B = σ^ν_{-t}",
        per_t(lambda t: rel_residual(ab.tau(t) @ incl_b, incl_b @ md_nu.sigma(-t))),
        tol,
    )
    report.record_family(
        "antipode.tau_restricted_C.1",
        "τ_t|_C = σ^μ_t",
        per_t(lambda t: rel_residual(ab.tau(t) @ incl_c, incl_c @ md_mu.sigma(t))),
        tol,
    )
    nu, mu = qg.nu.values, qg.mu.values
    report.record_family(
        "antipode.nu_tau.1",
        "ν∘τ_t|_B = ν",
        per_t(lambda t: rel_residual((qg.proj_B @ ab.tau(t) @ incl_b).T @ nu, nu)),
        tol,
    )
    report.record_family(
        "antipode.mu_tau.1",
        "μ∘τ_t|_C = μ",
        per_t(lambda t: rel_residual((qg.proj_C @ ab.tau(t) @ incl_c).T @ mu, mu)),
        tol,
    )
    report.record_family(
        "antipode.sigma_C.1",
        "σ_t|_C = σ^μ_t",
        per_t(lambda t: rel_residual(qg.md_phi.sigma(t) @ incl_c, incl_c @ md_mu.sigma(t))),
        tol,
    )
    report.record_family(
        "antipode.sigma_psi_B.1",
        "σ^ψ_t|_B = σ^ν_t",
        per_t(lambda t: rel_residual(qg.md_psi.sigma(t) @ incl_b, incl_b @ md_nu.sigma(t))),
        tol,
    )
    report.record_family(
        "antipode.sigma_B.1", "σ_t(B) = B", per_t(lambda t: invariant(qg.md_phi.sigma(t), incl_b)), tol
    )
    report.record_family(
        "antipode.nu_sigma.1",
        "ν∘σ_t|_B = ν",
        per_t(lambda t: rel_residual((qg.proj_B @ qg.md_phi.sigma(t) @ incl_b).T @ nu, nu)),
        tol,
    )
    return report


def phi_r_weight(qg: QuantumGroupoid, ab: AntipodeBundle) -> Weight:
    """The weight φ∘R on A."""
    return qg.phi.pullback(ab.r_map)


def phiR_suite(
    qg: QuantumGroupoid,
    ab: AntipodeBundle,
    tol: float,
    ts: Sequence[float] = DEFAULT_TS,
    structure: CheckReport | None = None,
) -> CheckReport:
    """Rebuild the groupoid with ψ replaced by φ∘R and re-derive R, τ and S from it.

    `structure` is the ψ-free part of the axiom report of `qg`, which φ∘R leaves unchanged.
    """
    report = CheckReport(label=f"phiR {qg.label}")
    psi_r = phi_r_weight(qg, ab)
    qg_r = qg.with_psi(psi_r)
    r = ab.r_map

    right_inv = qg.slice_first(psi_r, qg.delta)
    report.record_family(
        "antipode.phiR_right_invariance.1",
        "(φ∘R⊗id)(Δa) ∈ B",
        ((f"b{k}", res) for k, res in enumerate(span_membership(right_inv.T, qg.incl_B))),
        tol,
    )
    report.record(
        "antipode.phiR_nu.1",
        "ν((φ∘R⊗id)(Δa)) = φ∘R(a)",
        rel_residual((right_inv @ qg.proj_B.T) @ qg.nu.values, psi_r.values),
        tol,
    )

    def per_t(build):
        for t in ts:
            yield f"t={t}", build(t)

    md = qg.md_phi
    md_r = qg_r.md_psi
    report.record_family(
        "antipode.phiR_modular.1",
        "σ^{φ∘R}_t = R∘σ_{-t}∘R",
        per_t(lambda t: rel_residual(md_r.sigma(t), sigma_prime(ab, md.sigma(-t)))),
        tol,
    )
    report.record_family(
        "antipode.delta_sigma_prime.1",
        "Δ(σ′_t(x)) = (σ′_t⊗τ_{-t})(Δx)",
        per_t(
            lambda t: rel_residual(
                _comult_of_map(qg, sigma_prime(ab, md.sigma(-t))),
                apply2(sigma_prime(ab, md.sigma(-t)), ab.tau(-t), qg.delta),
            )
        ),
        tol,
    )
    phi = qg.phi.values
    report.record_family(
        "antipode.phi_sigma_prime_tau.1",
        "φ∘σ′_s∘τ_s = φ",
        per_t(lambda t: rel_residual((sigma_prime(ab, md.sigma(-t)) @ ab.tau(t)).T @ phi, phi)),
        tol,
    )

    axioms = verify_axioms(qg_r, tol, ts, structure=structure)
    failed = axioms.failed()
    worst = max(axioms.sorted(), key=lambda c: -1.0 if c.residual is None else c.residual)
    report.record(
        "antipode.phiR_axioms.1",
        "(A, Δ, E, B, ν, φ, φ∘R) satisfies the axioms",
        None if any(c.residual is None for c in failed) else axioms.max_residual,
        tol,
        detail=f"{len(failed)} of {len(axioms)} failed; worst {worst.check_id}",
    )

    w_r = build_W(qg_r, psi_r)
    k_op, k_residual, k_rank = build_K(qg_r, w_r, tol)
    ab_r = derive_antipode(qg_r, k_op, k_residual, k_rank, tol)
    report.record("antipode.phiR_R.1", "R′ = R", rel_residual(ab_r.r_map, r), tol)
    report.record_family(
        "antipode.phiR_tau.1", "τ′_t = τ_t", per_t(lambda t: rel_residual(ab_r.tau(t), ab.tau(t))), tol
    )
    report.record("antipode.phiR_S.1", "S′ = S", rel_residual(ab_r.s_map, ab.s_map), tol)
    return report


def commutation_suite(
    qg: QuantumGroupoid,
    ab: AntipodeBundle,
    tol: float,
    ss: Sequence[float] = (0.3, 1.0),
    ts: Sequence[float] = (-0.7, 0.4),
) -> CheckReport:
    """σ, σ′ and τ commute pairwise; ψ and μ invariances."""
    report = CheckReport(label=f"commutation {qg.label}")
    md = qg.md_phi
    pairs = list(product(ss, ts))

    def commutator(f, g):
        for s, t in pairs:
            a, b = f(t), g(s)
            yield f"s={s},t={t}", rel_residual(a @ b, b @ a)

    def sp(t):
        return sigma_prime(ab, md.sigma(-t))

    report.record_family("antipode.sigma_tau.1", "σ_t∘τ_s = τ_s∘σ_t", commutator(md.sigma, ab.tau), tol)
    report.record_family("antipode.sigma_prime_tau.1", "σ′_t∘τ_s = τ_s∘σ′_t", commutator(sp, ab.tau), tol)
    report.record_family("antipode.sigma_sigma_prime.1", "σ_t∘σ′_s = σ′_s∘σ_t", commutator(md.sigma, sp), tol)

    psi = qg.psi.values
    mu = qg.mu.values
    times = sorted(set(ss) | set(ts))
    report.record_family(
        "antipode.psi_sigma_tau.1",
        "ψ∘σ_t∘τ_{-t} = ψ",
        ((f"t={t}", rel_residual((md.sigma(t) @ ab.tau(-t)).T @ psi, psi)) for t in times),
        tol,
    )
    report.record_family(
        "antipode.mu_sigma_prime.1",
        "μ∘σ′_t|_C = μ",
        ((f"t={t}", rel_residual((qg.proj_C @ sp(t) @ qg.incl_C).T @ mu, mu)) for t in times),
        tol,
    )
    return report
