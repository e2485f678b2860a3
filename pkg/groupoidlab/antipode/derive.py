"""Polar decomposition of K and the maps R, τ_t and S it determines."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from groupoidlab.algebra.weights import GNSRep
from groupoidlab.errors import AssumptionViolationError
from groupoidlab.linalg.conjlinear import ConjLinearOp, polar_conj
from groupoidlab.linalg.dense import mat_pow
from groupoidlab.qgroupoid.model import QuantumGroupoid


@dataclass(frozen=True, eq=False)
class AntipodeBundle:
    """K = I∘L^{1/2} and the coefficient matrices of R and S on A.

    Attributes:
        k_op: K on H_ψ
        k_residual: Defect of the K solve
        k_rank: Rank of the K source family
        i_op: The conjugate-linear unitary part I
        l_op: The positive part L
        r_map: R(x) = pullback of I·π_ψ(x)*·I
        s_map: S = R∘τ_{-i/2}
        s_wellposed: Worst pullback defect of R and S
    """

    rep: GNSRep
    k_op: ConjLinearOp
    k_residual: float
    k_rank: int
    i_op: ConjLinearOp
    l_op: np.ndarray
    r_map: np.ndarray
    s_map: np.ndarray
    s_wellposed: float
    _cache: dict = field(default_factory=dict, init=False, repr=False)

    def l_pow(self, z: complex) -> np.ndarray:
        key = ("pow", complex(z))
        if key not in self._cache:
            self._cache[key] = mat_pow(self.l_op, z)
        return self._cache[key]

    def tau(self, t: complex) -> np.ndarray:
        """Coefficient matrix of τ_t(x) = pullback of L^{it}π_ψ(x)L^{-it}."""
        return self.tau_with_defect(t)[0]

    def tau_with_defect(self, t: complex) -> tuple[np.ndarray, float]:
        key = ("tau", complex(t))
        if key not in self._cache:
            conj = np.einsum("ab,kbc,cd->kad", self.l_pow(1j * t), self.rep.pi, self.l_pow(-1j * t))
            self._cache[key] = self.rep.operator_map(conj)
        return self._cache[key]

    def r_of_ops(self, ops: np.ndarray) -> np.ndarray:
        """I·X*·I for operators X of shape (..., D, D)."""
        m = self.i_op.linear_part
        return m @ np.swapaxes(ops, -1, -2) @ np.conj(m)


def derive_antipode(
    qg: QuantumGroupoid,
    k_op: ConjLinearOp,
    k_residual: float,
    k_rank: int,
    tol: float,
    degeneracy_tol: float = 1e-12,
) -> AntipodeBundle:
    """Polar-decompose K and pull R and S back to A through π_ψ.

    Raises:
        AssumptionViolationError: If I·π_ψ(A)*·I escapes π_ψ(A)
    """
    rep = qg.rep_psi
    i_op, l_op = polar_conj(k_op, degeneracy_tol)
    m = i_op.linear_part
    ops = rep.pi
    r_map, r_defect = rep.operator_map(m @ np.swapaxes(ops, -1, -2) @ np.conj(m))
    half = mat_pow(l_op, 0.5)
    half_inv = mat_pow(l_op, -0.5)
    scaled = half @ ops @ half_inv
    s_map, s_defect = rep.operator_map(m @ np.swapaxes(scaled, -1, -2) @ np.conj(m))
    wellposed = max(r_defect, s_defect)
    if wellposed > tol:
        raise AssumptionViolationError(f"I·π(A)*·I is not contained in π(A) (defect {wellposed:.3e})")
    return AntipodeBundle(
        rep=rep,
        k_op=k_op,
        k_residual=k_residual,
        k_rank=k_rank,
        i_op=i_op,
        l_op=l_op,
        r_map=r_map,
        s_map=s_map,
        s_wellposed=wellposed,
    )
