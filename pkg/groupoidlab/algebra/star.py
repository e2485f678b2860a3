"""Finite-dimensional *-algebras given by a basis of matrices."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from groupoidlab.errors import ConfigError
from groupoidlab.linalg.dense import numerical_rank, rel_residual, span_membership
from groupoidlab.types import CheckReport


@dataclass(frozen=True, eq=False)
class FiniteStarAlgebra:
    """A *-closed matrix subalgebra of M_N given by a basis.

    Elements are handled in coefficient form: x = Σ cᵢ bᵢ is the vector c.
    Elements of A⊗A are (d, d) coefficient arrays, of A⊗A⊗A (d, d, d) arrays.

    Attributes:
        basis: Array of shape (d, N, N)
        label: Name used in check identifiers
    """

    basis: np.ndarray
    label: str = "A"

    def __post_init__(self):
        basis = np.asarray(self.basis, dtype=complex)
        if basis.ndim != 3 or basis.shape[1] != basis.shape[2] or basis.shape[0] == 0:
            raise ConfigError(f"{self.label}: basis must have shape (d, N, N), got {basis.shape}")
        object.__setattr__(self, "basis", basis)

    @property
    def dim(self) -> int:
        return self.basis.shape[0]

    @property
    def ambient_dim(self) -> int:
        return self.basis.shape[1]

    @cached_property
    def _flat(self) -> np.ndarray:
        return self.basis.reshape(self.dim, -1).T

    @cached_property
    def _flat_pinv(self) -> np.ndarray:
        return np.linalg.pinv(self._flat)

    def coords(self, x: np.ndarray) -> np.ndarray:
        """Coefficients of matrices of shape (..., N, N) in this basis."""
        x = np.asarray(x)
        lead = x.shape[:-2]
        flat = x.reshape(-1, self.ambient_dim ** 2)
        return (flat @ self._flat_pinv.T).reshape(*lead, self.dim)

    def membership(self, x: np.ndarray) -> float:
        """Worst span residual of matrices of shape (..., N, N)."""
        flat = np.asarray(x).reshape(-1, self.ambient_dim ** 2).T
        return float(np.max(span_membership(flat, self._flat), initial=0.0))

    def element(self, c: np.ndarray) -> np.ndarray:
        return np.einsum("...k,kij->...ij", c, self.basis)

    @cached_property
    def products(self) -> np.ndarray:
        return np.einsum("iab,jbc->ijac", self.basis, self.basis)

    @cached_property
    def mult(self) -> np.ndarray:
        """Structure constants: bᵢbⱼ = Σ_k mult[i,j,k] b_k."""
        return self.coords(self.products)

    @cached_property
    def star_matrix(self) -> np.ndarray:
        """St with coords(x*) = St·conj(coords(x))."""
        return self.coords(np.conj(self.basis).transpose(0, 2, 1)).T

    @cached_property
    def unit(self) -> np.ndarray:
        """Coefficients of the two-sided unit, solved inside the span."""
        d = self.dim
        left = self.mult.transpose(1, 2, 0).reshape(d * d, d)
        right = self.mult.transpose(0, 2, 1).reshape(d * d, d)
        target = np.eye(d).reshape(d * d)
        system = np.vstack([left, right])
        u, *_ = np.linalg.lstsq(system, np.concatenate([target, target]), rcond=None)
        return u

    @property
    def identity(self) -> np.ndarray:
        return np.eye(self.dim, dtype=complex)

    def mul(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        return np.einsum("i,j,ijk->k", a, b, self.mult)

    def star(self, a: np.ndarray) -> np.ndarray:
        return self.star_matrix @ np.conj(a)

    def left_mult(self, a: np.ndarray) -> np.ndarray:
        """Matrix of x ↦ a·x on coefficients."""
        return np.einsum("i,ijk->kj", a, self.mult)

    def right_mult(self, a: np.ndarray) -> np.ndarray:
        """Matrix of x ↦ x·a on coefficients."""
        return np.einsum("j,ijk->ki", a, self.mult)

    # A⊗A in coefficient form

    def mul2(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        # one leg of the structure constants at a time; batch axes broadcast
        c = self.mult
        t = np.einsum("...ij,iak->...jak", x, c)
        t = np.einsum("...jak,...ab->...jbk", t, y)
        return np.einsum("...jbk,jbl->...kl", t, c)

    def star2(self, x: np.ndarray) -> np.ndarray:
        st = self.star_matrix
        return st @ np.conj(x) @ st.T

    def mul3(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        c = self.mult
        t = np.einsum("...ijk,iap->...jkap", x, c)
        t = np.einsum("...jkap,...abc->...jkbcp", t, y)
        t = np.einsum("...jkbcp,jbq->...kcpq", t, c)
        return np.einsum("...kcpq,kcr->...pqr", t, c)

    def unit2(self) -> np.ndarray:
        return np.outer(self.unit, self.unit)

    def tensor_matrix(self, x: np.ndarray) -> np.ndarray:
        """Matrix of an A⊗A element acting on ℂ^N⊗ℂ^N."""
        return np.einsum("ij,iab,jcd->acbd", x, self.basis, self.basis).reshape(
            self.ambient_dim ** 2, self.ambient_dim ** 2
        )


def apply2(f: np.ndarray, g: np.ndarray, x: np.ndarray) -> np.ndarray:
    """(F⊗G)(X) for linear maps F, G given as coefficient matrices."""
    return f @ x @ g.T


def check_star_algebra(alg: FiniteStarAlgebra, tol: float) -> CheckReport:
    """Verify linear independence, product closure, adjoint closure and the unit."""
    report = CheckReport(label=f"algebra {alg.label}")
    prefix = f"algebra.{alg.label}"
    d = alg.dim

    rank = numerical_rank(alg._flat)
    report.record(
        f"{prefix}.independent.1",
        "basis is linearly independent",
        0.0 if rank == d else 1.0,
        tol,
        detail=f"rank {rank} of {d}",
    )

    residuals = span_membership(alg.products.reshape(d * d, -1).T, alg._flat).reshape(d, d)
    report.record_family(
        f"{prefix}.product_closure.1",
        "bᵢbⱼ ∈ span(basis)",
        ((f"({i},{j})", residuals[i, j]) for i in range(d) for j in range(d)),
        tol,
    )

    adjoints = np.conj(alg.basis).transpose(0, 2, 1)
    adj_res = span_membership(adjoints.reshape(d, -1).T, alg._flat)
    report.record_family(
        f"{prefix}.adjoint_closure.1",
        "bᵢ* ∈ span(basis)",
        ((f"{i}", adj_res[i]) for i in range(d)),
        tol,
    )

    unit = alg.element(alg.unit)
    report.record_family(
        f"{prefix}.unit.1",
        "1·bᵢ = bᵢ = bᵢ·1",
        (
            (f"{i}", max(rel_residual(unit @ alg.basis[i], alg.basis[i]), rel_residual(alg.basis[i] @ unit, alg.basis[i])))
            for i in range(d)
        ),
        tol,
    )
    return report
