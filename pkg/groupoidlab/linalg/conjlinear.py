"""Conjugate-linear operators, vector functionals and slice maps."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy import linalg as sla

from groupoidlab.errors import DegenerateDecompositionError, DomainError
from groupoidlab.linalg.dense import DEFAULT_MAX_DIM, kron, rel_residual


@dataclass(frozen=True, eq=False)
class ConjLinearOp:
    """Conjugate-linear operator v ↦ linear_part · conj(v).

    The adjoint has linear part transpose(linear_part), from
    ⟨Mv̄, w⟩ = conj(⟨Mᵀw̄, v⟩).
    """

    linear_part: np.ndarray

    def __post_init__(self):
        m = np.asarray(self.linear_part, dtype=complex)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise DomainError(f"conjugate-linear operator must be square, got {m.shape}")
        object.__setattr__(self, "linear_part", m)

    @property
    def dim(self) -> int:
        return self.linear_part.shape[0]

    def __call__(self, v: np.ndarray) -> np.ndarray:
        return self.linear_part @ np.conj(v)

    def compose(self, other: "ConjLinearOp") -> np.ndarray:
        """Linear matrix of self∘other: M₁·conj(M₂)."""
        return self.linear_part @ np.conj(other.linear_part)

    def after(self, a: np.ndarray) -> "ConjLinearOp":
        """self∘A for a linear A."""
        return ConjLinearOp(self.linear_part @ np.conj(a))

    def sandwich(self, x: np.ndarray) -> np.ndarray:
        """Linear matrix of self∘X∘self."""
        m = self.linear_part
        return m @ np.conj(x) @ np.conj(m)

    def adjoint(self) -> "ConjLinearOp":
        return ConjLinearOp(self.linear_part.T)

    def inverse(self) -> "ConjLinearOp":
        return ConjLinearOp(np.conj(np.linalg.inv(self.linear_part)))

    def tensor(self, other: "ConjLinearOp", max_dim: int = DEFAULT_MAX_DIM) -> "ConjLinearOp":
        return ConjLinearOp(kron(self.linear_part, other.linear_part, max_dim=max_dim))

    def involution_defect(self) -> float:
        """Residual of self∘self = identity."""
        return rel_residual(self.compose(self), np.eye(self.dim))

    def distance(self, other: "ConjLinearOp") -> float:
        return rel_residual(self.linear_part, other.linear_part)


def conjugation(dim: int) -> ConjLinearOp:
    """Entrywise complex conjugation on ℂ^dim."""
    return ConjLinearOp(np.eye(dim, dtype=complex))


def polar_conj(k: ConjLinearOp, tol: float = 1e-12) -> tuple[ConjLinearOp, np.ndarray]:
    """Polar decomposition k = i_part ∘ l_part^{1/2}.

    With k's linear part M = U·P (right polar form), i_part has linear part U and
    l_part = k*∘k = conj(M*M).

    Raises:
        DegenerateDecompositionError: If k is singular relative to tol
    """
    m = k.linear_part
    s = np.linalg.svd(m, compute_uv=False)
    if s[-1] <= tol * max(s[0], 1.0):
        raise DegenerateDecompositionError("conjugate-linear operator is singular", float(s[-1]))
    u, p = sla.polar(m, side="right")
    l_part = np.conj(p @ p)
    return ConjLinearOp(u), (l_part + l_part.conj().T) / 2


@dataclass(frozen=True, eq=False)
class VectorFunctional:
    """Vector functional ω_{ξ,ζ}(T) = ⟨Tξ, ζ⟩ = ζ*·T·ξ."""

    xi: np.ndarray
    zeta: np.ndarray

    def __call__(self, op: np.ndarray) -> complex:
        return complex(np.vdot(self.zeta, op @ self.xi))

    def conjugate(self) -> "VectorFunctional":
        """ω̄_{ξ,ζ} = ω_{ζ,ξ}."""
        return VectorFunctional(self.zeta, self.xi)

    def slice_right(self, op: np.ndarray, d1: int, d2: int) -> np.ndarray:
        """(id⊗ω)(X) for X acting on ℂ^d1⊗ℂ^d2."""
        x4 = op.reshape(d1, d2, d1, d2)
        return np.einsum("j,ijkl,l->ik", np.conj(self.zeta), x4, self.xi)


def right_slices(op: np.ndarray, d1: int, d2: int) -> np.ndarray:
    """All (id⊗ω_{e_a,e_b})(X) for standard basis vectors; indexed [a, b]."""
    x4 = op.reshape(d1, d2, d1, d2)
    return x4.transpose(3, 1, 0, 2)


def left_slices(op: np.ndarray, d1: int, d2: int) -> np.ndarray:
    """All (ω_{e_a,e_b}⊗id)(X) for standard basis vectors; indexed [a, b]."""
    x4 = op.reshape(d1, d2, d1, d2)
    return x4.transpose(2, 0, 1, 3)


def slice_right_family(op: np.ndarray, d1: int, d2: int, xis: np.ndarray, zetas: np.ndarray) -> np.ndarray:
    """(id⊗ω_{ξ_m,ζ_n})(X) for column families xis, zetas; indexed [m, n]."""
    return np.einsum("am,bn,abij->mnij", xis, np.conj(zetas), right_slices(op, d1, d2), optimize=True)


def slice_left_family(op: np.ndarray, d1: int, d2: int, xis: np.ndarray, zetas: np.ndarray) -> np.ndarray:
    """(ω_{ξ_m,ζ_n}⊗id)(X) for column families xis, zetas; indexed [m, n]."""
    return np.einsum("am,bn,abij->mnij", xis, np.conj(zetas), left_slices(op, d1, d2), optimize=True)
