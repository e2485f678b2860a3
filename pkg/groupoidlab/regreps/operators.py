"""The multiplicative partial isometries V and W on GNS tensor products."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from groupoidlab.algebra.weights import GNSRep, Weight, gns
from groupoidlab.linalg.dense import kron
from groupoidlab.qgroupoid.model import QuantumGroupoid
from groupoidlab.qgroupoid.qmaps import QMaps


def rep_for(qg: QuantumGroupoid, weight: Weight) -> GNSRep:
    """GNS representation of a weight, reusing the cached ones of φ and ψ."""
    if weight is qg.psi:
        return qg.rep_psi
    if weight is qg.phi:
        return qg.rep_phi
    return gns(weight)


def represent_pair(rep1: GNSRep, rep2: GNSRep, x: np.ndarray) -> np.ndarray:
    """(π₁⊗π₂)(X) for X in A⊗A; leading axes allowed."""
    d1, d2 = rep1.dim, rep2.dim
    out = np.einsum("...ij,iab,jcd->...acbd", x, rep1.pi, rep2.pi, optimize=True)
    return out.reshape(*x.shape[:-2], d1 * d2, d1 * d2)


def pair_vectors(rep1: GNSRep, rep2: GNSRep, x: np.ndarray) -> np.ndarray:
    """(Λ₁⊗Λ₂)(X) for X in A⊗A; leading axes allowed."""
    out = np.einsum("...ij,ai,bj->...ab", x, rep1.lam, rep2.lam, optimize=True)
    return out.reshape(*x.shape[:-2], rep1.dim * rep2.dim)


def transport_pair(rep1: GNSRep, rep2: GNSRep, coeff_map: np.ndarray) -> np.ndarray:
    """Operator (Λ₁⊗Λ₂)·F·(Λ₁⊗Λ₂)⁻¹ for a (d², d²) coefficient map F."""
    lam = kron(rep1.lam, rep2.lam)
    lam_inv = kron(rep1.lam_inv, rep2.lam_inv)
    return lam @ coeff_map @ lam_inv


def build_V(qg: QuantumGroupoid, eta_weight: Weight) -> np.ndarray:
    """V(Λ_ψ(p)⊗Λ_η(a)) = (Λ_ψ⊗Λ_η)((Δp)(1⊗a)) on H_ψ⊗H_η."""
    d = qg.dim
    coef = np.einsum("ikm,mjl->klij", qg.delta, qg.A.mult).reshape(d * d, d * d)
    return transport_pair(qg.rep_psi, rep_for(qg, eta_weight), coef)


def build_W(qg: QuantumGroupoid, left_leg: Weight) -> np.ndarray:
    """W on H⊗H_φ, the adjoint of W*(Λ(p)⊗Λ_φ(a)) = (Λ⊗Λ_φ)((Δa)(p⊗1))."""
    d = qg.dim
    coef = np.einsum("jal,aik->klij", qg.delta, qg.A.mult).reshape(d * d, d * d)
    w_star = transport_pair(rep_for(qg, left_leg), qg.rep_phi, coef)
    return w_star.conj().T


@dataclass(frozen=True, eq=False)
class RegRepBundle:
    """V, both W instances, the represented E and the G projections.

    Attributes:
        v_op: V on H_ψ⊗H_ψ
        w_op: W with left leg ψ, on H_ψ⊗H_φ
        w_phi: W with left leg φ, on H_φ⊗H_φ
        e_v, e_w, e_phi: E represented on the spaces of v_op, w_op and w_phi
        g_r, g_rho: Transported Q_R, Q_ρ on H_ψ⊗H_ψ
        g_l, g_lambda: Transported Q_L, Q_λ on H_ψ⊗H_φ
        g_l_phi: Transported Q_L on H_φ⊗H_φ
    """

    rep_psi: GNSRep
    rep_phi: GNSRep
    v_op: np.ndarray
    w_op: np.ndarray
    w_phi: np.ndarray
    e_v: np.ndarray
    e_w: np.ndarray
    e_phi: np.ndarray
    g_r: np.ndarray
    g_rho: np.ndarray
    g_l: np.ndarray
    g_lambda: np.ndarray
    g_l_phi: np.ndarray


def build_regular_reps(qg: QuantumGroupoid, qm: QMaps) -> RegRepBundle:
    rp, rf = qg.rep_psi, qg.rep_phi
    return RegRepBundle(
        rep_psi=rp,
        rep_phi=rf,
        v_op=build_V(qg, qg.psi),
        w_op=build_W(qg, qg.psi),
        w_phi=build_W(qg, qg.phi),
        e_v=represent_pair(rp, rp, qg.E),
        e_w=represent_pair(rp, rf, qg.E),
        e_phi=represent_pair(rf, rf, qg.E),
        g_r=transport_pair(rp, rp, qm.q_r),
        g_rho=transport_pair(rp, rp, qm.q_rho),
        g_l=transport_pair(rp, rf, qm.q_l),
        g_lambda=transport_pair(rp, rf, qm.q_lambda),
        g_l_phi=transport_pair(rf, rf, qm.q_l),
    )
