"""The conjugate-linear operator K on H_ψ, solved from its spanning family."""

from __future__ import annotations

import numpy as np

from groupoidlab.errors import AssumptionViolationError
from groupoidlab.linalg.conjlinear import ConjLinearOp, right_slices
from groupoidlab.linalg.dense import numerical_rank, rel_residual
from groupoidlab.qgroupoid.model import QuantumGroupoid


def k_families(qg: QuantumGroupoid, w_psi_phi: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Source and target vectors of K as columns.

    Sources are Λ_ψ((id⊗ω_{ξ,ζ}(c·d*))(W)) and targets Λ_ψ((id⊗ω_{ζ,ξ}(d·c*))(W)),
    over basis pairs (c, d) of A and standard basis vectors ξ, ζ of H_φ.
    """
    rp, rf = qg.rep_psi, qg.rep_phi
    slices = right_slices(w_psi_phi, rp.dim, rf.dim)
    coeffs, _ = rp.pullback(slices)
    vectors = coeffs @ rp.lam.T
    p = rf.pi
    sources = np.einsum("daA,cbB,ABv->cdabv", np.conj(p), p, vectors, optimize=True)
    targets = np.einsum("cbB,daA,BAv->cdabv", np.conj(p), p, vectors, optimize=True)
    return sources.reshape(-1, rp.dim).T, targets.reshape(-1, rp.dim).T


def build_K(qg: QuantumGroupoid, w_psi_phi: np.ndarray, tol: float) -> tuple[ConjLinearOp, float, int]:
    """Least-squares conjugate-linear K with K(source) = target.

    Returns:
        (K, solve residual, rank of the source family)

    Raises:
        AssumptionViolationError: If the family does not span H_ψ or the solve is inconsistent
    """
    sources, targets = k_families(qg, w_psi_phi)
    rank = numerical_rank(sources)
    if rank < qg.rep_psi.dim:
        raise AssumptionViolationError(
            f"K source family has rank {rank}, below dim H_psi = {qg.rep_psi.dim}"
        )
    m = targets @ np.linalg.pinv(np.conj(sources))
    residual = rel_residual(m @ np.conj(sources), targets)
    if residual > tol:
        raise AssumptionViolationError(f"K is not well defined on its spanning family (residual {residual:.3e})")
    return ConjLinearOp(m), residual, rank
