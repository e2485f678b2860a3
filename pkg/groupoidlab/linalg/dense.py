"""Dense complex linear algebra: tensor products, functional calculus, spans."""

from __future__ import annotations

from typing import Sequence

import numpy as np
from scipy import linalg as sla

from groupoidlab.errors import DomainError, ResourceLimitError

DEFAULT_MAX_DIM = 4096
POSITIVITY_FLOOR = 1e-12


def rel_residual(actual: np.ndarray, expected: np.ndarray) -> float:
    """Relative Frobenius residual with denominator max(1, ||expected||)."""
    actual = np.asarray(actual)
    expected = np.asarray(expected)
    if actual.shape != expected.shape:
        raise DomainError(f"shape mismatch: {actual.shape} vs {expected.shape}")
    return float(np.linalg.norm(actual - expected) / max(1.0, np.linalg.norm(expected)))


def kron(a: np.ndarray, b: np.ndarray, max_dim: int = DEFAULT_MAX_DIM) -> np.ndarray:
    """Tensor product with (a⊗b)[(i,k),(j,l)] = a[i,j]·b[k,l].

    Raises:
        ResourceLimitError: If either resulting dimension exceeds max_dim
    """
    a = np.atleast_2d(a)
    b = np.atleast_2d(b)
    rows = a.shape[0] * b.shape[0]
    cols = a.shape[1] * b.shape[1]
    if rows > max_dim or cols > max_dim:
        raise ResourceLimitError(f"kron would produce {rows}x{cols}, limit is {max_dim}")
    return np.kron(a, b)


def hermitian_defect(p: np.ndarray) -> float:
    return rel_residual(p, p.conj().T)


def mat_pow(p: np.ndarray, z: complex, floor: float = POSITIVITY_FLOOR) -> np.ndarray:
    """Functional calculus p^z for a positive-definite Hermitian matrix.

    Returns U·diag(λ^z)·U* from the eigendecomposition of p.

    Raises:
        DomainError: If p is not Hermitian or not positive-definite
    """
    p = np.asarray(p, dtype=complex)
    if p.ndim != 2 or p.shape[0] != p.shape[1]:
        raise DomainError(f"mat_pow needs a square matrix, got shape {p.shape}")
    if hermitian_defect(p) > 1e-10:
        raise DomainError("mat_pow input is not Hermitian")
    evals, evecs = np.linalg.eigh((p + p.conj().T) / 2)
    scale = max(float(np.max(np.abs(evals))), 1e-300)
    if np.min(evals) <= floor * scale:
        raise DomainError(f"mat_pow input is not positive-definite (min eigenvalue {np.min(evals):.3e})")
    powers = np.exp(complex(z) * np.log(evals))
    return (evecs * powers) @ evecs.conj().T


def _as_columns(basis: np.ndarray | Sequence[np.ndarray]) -> np.ndarray:
    if isinstance(basis, np.ndarray) and basis.ndim == 2:
        return basis
    vectors = [np.asarray(b).reshape(-1) for b in basis]
    if not vectors:
        raise DomainError("span requires a non-empty basis")
    return np.column_stack(vectors)


def span_coeffs(
    v: np.ndarray, basis: np.ndarray | Sequence[np.ndarray]
) -> tuple[np.ndarray, float]:
    """Least-norm coefficients of v in the span of basis, with normalized residual.

    Args:
        v: Target vector
        basis: Matrix whose columns are the spanning vectors, or a list of vectors

    Returns:
        (coeffs, residual) with residual = min ||Σ cᵢbᵢ − v|| / max(1, ||v||)
    """
    cols = _as_columns(basis)
    if cols.shape[1] == 0:
        raise DomainError("span requires a non-empty basis")
    v = np.asarray(v).reshape(-1)
    coeffs, *_ = np.linalg.lstsq(cols, v, rcond=None)
    residual = np.linalg.norm(cols @ coeffs - v) / max(1.0, np.linalg.norm(v))
    return coeffs, float(residual)


def span_membership(vectors: np.ndarray, basis: np.ndarray) -> np.ndarray:
    """Per-column span_coeffs residual of `vectors` against the columns of `basis`."""
    vectors = np.atleast_2d(vectors)
    coeffs, *_ = np.linalg.lstsq(basis, vectors, rcond=None)
    defect = np.linalg.norm(basis @ coeffs - vectors, axis=0)
    return defect / np.maximum(1.0, np.linalg.norm(vectors, axis=0))


def orth(a: np.ndarray, rcond: float = 1e-10) -> np.ndarray:
    return sla.orth(np.atleast_2d(a), rcond=rcond)


def span_distance(u: np.ndarray, v: np.ndarray, rcond: float = 1e-10) -> float:
    """Distance between the column spans of u and v (0 iff equal, ≥1 if dimensions differ)."""
    qu = orth(u, rcond)
    qv = orth(v, rcond)
    if qu.shape[1] != qv.shape[1]:
        return float(max(1.0, abs(qu.shape[1] - qv.shape[1])))
    if qu.shape[1] == 0:
        return 0.0
    left = qu - qv @ (qv.conj().T @ qu)
    right = qv - qu @ (qu.conj().T @ qv)
    return float(max(np.linalg.norm(left, 2), np.linalg.norm(right, 2)))


def null_space(a: np.ndarray, rcond: float = 1e-10) -> np.ndarray:
    return sla.null_space(np.atleast_2d(a), rcond=rcond)


def smallest_singular_value(m: np.ndarray) -> float:
    return float(np.linalg.svd(m, compute_uv=False)[-1])


def numerical_rank(m: np.ndarray, rcond: float = 1e-10) -> int:
    s = np.linalg.svd(np.atleast_2d(m), compute_uv=False)
    if s.size == 0 or s[0] == 0:
        return 0
    return int(np.sum(s > rcond * s[0]))


def solve_linear_map(sources: np.ndarray, targets: np.ndarray) -> tuple[np.ndarray, float]:
    """Least-squares M with M @ sources ≈ targets, and the relative defect."""
    m = targets @ np.linalg.pinv(sources)
    return m, rel_residual(m @ sources, targets)


def partial_isometry_defect(x: np.ndarray) -> float:
    return rel_residual(x @ x.conj().T @ x, x)


def projection_defect(p: np.ndarray) -> float:
    """Defect of p being an orthogonal projection (self-adjoint idempotent)."""
    return max(rel_residual(p @ p, p), hermitian_defect(p))


def leg_operator(
    op: np.ndarray, dims: Sequence[int], legs: Sequence[int], max_dim: int = DEFAULT_MAX_DIM
) -> np.ndarray:
    """Embed an operator acting on the given legs of a tensor product of spaces.

    `op` acts on the tensor product of the spaces `dims[l]` for l in `legs`
    (in that order); the result acts on the full product with the identity elsewhere.
    """
    dims = list(dims)
    total = int(np.prod(dims))
    if total > max_dim:
        raise ResourceLimitError(f"leg embedding of dimension {total} exceeds max_dim {max_dim}")
    n = len(dims)
    legs = list(legs)
    rest = [i for i in range(n) if i not in legs]
    op_t = op.reshape([dims[i] for i in legs] * 2)
    eye = np.eye(int(np.prod([dims[i] for i in rest])) if rest else 1).reshape(
        [dims[i] for i in rest] * 2
    )
    k = len(legs)
    r = len(rest)
    # Output axes first (legs then rest), input axes after.
    full = np.tensordot(op_t, eye, axes=0) if r else op_t
    out_axes = list(range(k)) + list(range(2 * k, 2 * k + r))
    in_axes = list(range(k, 2 * k)) + list(range(2 * k + r, 2 * k + 2 * r))
    order = legs + rest
    perm_out = [out_axes[order.index(i)] for i in range(n)]
    perm_in = [in_axes[order.index(i)] for i in range(n)]
    return full.transpose(perm_out + perm_in).reshape(total, total)
