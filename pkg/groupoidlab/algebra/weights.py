"""Faithful weights and their GNS representations."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from groupoidlab.algebra.star import FiniteStarAlgebra
from groupoidlab.errors import AssumptionViolationError, NonFaithfulWeightError
from groupoidlab.linalg.dense import hermitian_defect, mat_pow, rel_residual
from groupoidlab.types import CheckReport


@dataclass(frozen=True, eq=False)
class Weight:
    """A linear functional given by its values on the basis of an algebra."""

    algebra: FiniteStarAlgebra
    values: np.ndarray

    def __post_init__(self):
        values = np.asarray(self.values, dtype=complex).reshape(-1)
        if values.shape[0] != self.algebra.dim:
            raise AssumptionViolationError(
                f"weight on {self.algebra.label} needs {self.algebra.dim} values, got {values.shape[0]}"
            )
        object.__setattr__(self, "values", values)

    def __call__(self, x: np.ndarray) -> complex:
        return complex(np.dot(self.values, x))

    @cached_property
    def gram(self) -> np.ndarray:
        """G[i,j] = φ(bᵢ* bⱼ)."""
        alg = self.algebra
        return np.einsum("mi,mjk,k->ij", alg.star_matrix, alg.mult, self.values)

    @cached_property
    def pair_matrix(self) -> np.ndarray:
        """P[i,j] = φ(bᵢ bⱼ)."""
        return np.einsum("ijk,k->ij", self.algebra.mult, self.values)

    def pullback(self, linear_map: np.ndarray) -> "Weight":
        """φ∘F for a coefficient matrix F mapping into this weight's algebra."""
        return Weight(self.algebra, linear_map.T @ self.values)

    def faithfulness_defect(self) -> float:
        """0 when the Gram matrix is Hermitian positive-definite, else a positive defect."""
        g = self.gram
        herm = hermitian_defect(g)
        evals = np.linalg.eigvalsh((g + g.conj().T) / 2)
        scale = max(float(np.max(np.abs(evals))), 1e-300)
        positivity = 0.0 if evals[0] > 1e-12 * scale else 1.0
        return max(herm, positivity)


@dataclass(frozen=True, eq=False)
class GNSRep:
    """GNS realization (H, π, Λ) in an orthonormal frame of ℂ^d.

    Attributes:
        weight: The represented weight
        lam: Columns are the coordinates of Λ(bᵢ)
        pi: Array (d, D, D) of representation matrices π(bᵢ)
    """

    weight: Weight
    lam: np.ndarray
    pi: np.ndarray

    @property
    def dim(self) -> int:
        return self.lam.shape[0]

    @cached_property
    def lam_inv(self) -> np.ndarray:
        return np.linalg.inv(self.lam)

    @cached_property
    def _pi_flat_pinv(self) -> np.ndarray:
        return np.linalg.pinv(self.pi.reshape(self.pi.shape[0], -1).T)

    def vector(self, x: np.ndarray) -> np.ndarray:
        """Λ(x)."""
        return self.lam @ x

    def rep(self, x: np.ndarray) -> np.ndarray:
        """π(x) for coefficients of shape (..., d)."""
        return np.einsum("...k,kij->...ij", x, self.pi)

    def pullback(self, op: np.ndarray) -> tuple[np.ndarray, float]:
        """Coefficients x with π(x) closest to op, and the relative defect."""
        op = np.asarray(op)
        lead = op.shape[:-2]
        flat = op.reshape(-1, self.dim ** 2)
        coeffs = flat @ self._pi_flat_pinv.T
        back = coeffs @ self.pi.reshape(self.pi.shape[0], -1)
        norms = np.maximum(1.0, np.linalg.norm(flat, axis=1))
        defect = float(np.max(np.linalg.norm(back - flat, axis=1) / norms, initial=0.0))
        return coeffs.reshape(*lead, self.pi.shape[0]), defect

    def operator_map(self, ops: np.ndarray) -> tuple[np.ndarray, float]:
        """Coefficient matrix of k ↦ pullback(ops[k]) and its defect."""
        coeffs, defect = self.pullback(ops)
        return coeffs.T, defect


def gns(weight: Weight) -> GNSRep:
    """Build the GNS representation of a faithful weight.

    Λ is the Hermitian square root of the Gram matrix, so ⟨Λ(a), Λ(b)⟩ = φ(b*a).

    Raises:
        NonFaithfulWeightError: If the Gram matrix is not Hermitian positive-definite
    """
    g = weight.gram
    if hermitian_defect(g) > 1e-10:
        raise NonFaithfulWeightError(f"weight on {weight.algebra.label}: Gram matrix is not Hermitian")
    evals = np.linalg.eigvalsh((g + g.conj().T) / 2)
    scale = max(float(np.max(np.abs(evals))), 1e-300)
    if evals[0] <= 1e-12 * scale:
        raise NonFaithfulWeightError(
            f"weight on {weight.algebra.label} is not faithful (min Gram eigenvalue {evals[0]:.3e})"
        )
    lam = mat_pow((g + g.conj().T) / 2, 0.5)
    lam_inv = np.linalg.inv(lam)
    # L_k[m, j] = mult[k, j, m] is left multiplication by b_k on coefficients.
    left = weight.algebra.mult.transpose(0, 2, 1)
    pi = np.einsum("ab,kbc,cd->kad", lam, left, lam_inv)
    return GNSRep(weight=weight, lam=lam, pi=pi)


def gns_checks(rep: GNSRep, tol: float, name: str) -> CheckReport:
    """Inner product, *-homomorphism and covariance identities of a GNS representation."""
    report = CheckReport(label=f"gns {name}")
    alg = rep.weight.algebra
    d = alg.dim
    prefix = f"algebra.gns_{name}"

    report.record(
        f"{prefix}.inner_product.1",
        "⟨Λ(a), Λ(b)⟩ = φ(b*a)",
        rel_residual(rep.lam.conj().T @ rep.lam, rep.weight.gram),
        tol,
    )
    prods = np.einsum("iab,jbc->ijac", rep.pi, rep.pi)
    expected = np.einsum("ijk,kab->ijab", alg.mult, rep.pi)
    report.record(f"{prefix}.multiplicative.1", "π(a)π(b) = π(ab)", rel_residual(prods, expected), tol)
    stars = np.einsum("mi,mab->iab", alg.star_matrix, rep.pi)
    report.record(
        f"{prefix}.star.1",
        "π(a*) = π(a)*",
        rel_residual(np.conj(rep.pi).transpose(0, 2, 1), stars),
        tol,
    )
    report.record(
        f"{prefix}.unital.1", "π(1) = 1", rel_residual(rep.rep(alg.unit), np.eye(rep.dim)), tol
    )
    covariance = np.einsum("iab,bj->ija", rep.pi, rep.lam)
    expected_cov = np.einsum("ijk,ak->ija", alg.mult, rep.lam)
    report.record(
        f"{prefix}.covariance.1",
        "π(a)Λ(b) = Λ(ab)",
        rel_residual(covariance, expected_cov),
        tol,
        detail=f"dim H = {d}",
    )
    return report
