"""Tomita–Takesaki modular data of a faithful weight at finite dimension."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from groupoidlab.algebra.weights import GNSRep, Weight
from groupoidlab.errors import AssumptionViolationError
from groupoidlab.linalg.conjlinear import ConjLinearOp
from groupoidlab.linalg.dense import mat_pow, rel_residual, smallest_singular_value
from groupoidlab.types import CheckReport


@dataclass(frozen=True, eq=False)
class ModularData:
    """Modular objects of a GNS representation.

    Attributes:
        rep: The GNS representation
        t_op: T with TΛ(x) = Λ(x*)
        j_op: Modular conjugation, T = J∇^{1/2}
        nabla: Modular operator ∇ = T*T
    """

    rep: GNSRep
    t_op: ConjLinearOp
    j_op: ConjLinearOp
    nabla: np.ndarray
    _cache: dict = field(default_factory=dict, init=False, repr=False)

    def nabla_pow(self, z: complex) -> np.ndarray:
        key = ("pow", complex(z))
        if key not in self._cache:
            self._cache[key] = mat_pow(self.nabla, z)
        return self._cache[key]

    def sigma(self, z: complex) -> np.ndarray:
        """Coefficient matrix of σ_z(x) = pullback of ∇^{iz}π(x)∇^{-iz}."""
        return self.sigma_with_defect(z)[0]

    def sigma_with_defect(self, z: complex) -> tuple[np.ndarray, float]:
        key = ("sigma", complex(z))
        if key not in self._cache:
            left = self.nabla_pow(1j * z)
            right = self.nabla_pow(-1j * z)
            conj = np.einsum("ab,kbc,cd->kad", left, self.rep.pi, right)
            self._cache[key] = self.rep.operator_map(conj)
        return self._cache[key]


def modular_data(rep: GNSRep) -> ModularData:
    """Compute T, ∇ and J for a GNS representation.

    Raises:
        AssumptionViolationError: If T is singular (impossible for faithful weights)
    """
    alg = rep.weight.algebra
    m = rep.lam @ alg.star_matrix @ np.conj(rep.lam_inv)
    if smallest_singular_value(m) <= 1e-12 * max(1.0, float(np.linalg.norm(m, 2))):
        raise AssumptionViolationError(f"Tomita operator of {alg.label} weight is singular")
    t_op = ConjLinearOp(m)
    nabla = m.T @ np.conj(m)
    nabla = (nabla + nabla.conj().T) / 2
    j_op = t_op.after(mat_pow(nabla, -0.5))
    return ModularData(rep=rep, t_op=t_op, j_op=j_op, nabla=nabla)


def kms_verify(weight: Weight, md: ModularData, tol: float, ts: Sequence[float] = (0.3, 1.0, -0.7), name: str = "phi") -> CheckReport:
    """KMS identity φ(xy) = φ(y σ_{-i}(x)) on basis pairs and φ∘σ_t = φ."""
    report = CheckReport(label=f"kms {name}")
    alg = weight.algebra
    prefix = f"algebra.kms_{name}"

    lhs = weight.pair_matrix
    s = md.sigma(-1j)
    rhs = np.einsum("mi,jmk,k->ij", s, alg.mult, weight.values)
    d = alg.dim
    report.record_family(
        f"{prefix}.kms.1",
        "φ(xy) = φ(y·σ_{-i}(x))",
        ((f"({i},{j})", abs(lhs[i, j] - rhs[i, j]) / max(1.0, abs(lhs[i, j]))) for i in range(d) for j in range(d)),
        tol,
    )
    report.record_family(
        f"{prefix}.invariance.1",
        "φ∘σ_t = φ",
        ((f"t={t}", rel_residual(md.sigma(t).T @ weight.values, weight.values)) for t in ts),
        tol,
    )
    return report


def tomita_checks(md: ModularData, tol: float, ts: Sequence[float] = (0.3, 1.0, -0.7), name: str = "phi") -> CheckReport:
    """Finite-dimensional Tomita theory identities for one weight."""
    report = CheckReport(label=f"tomita {name}")
    rep = md.rep
    alg = rep.weight.algebra
    prefix = f"algebra.tomita_{name}"
    dim = rep.dim
    eye = np.eye(dim)

    report.record(
        f"{prefix}.t_on_vectors.1",
        "TΛ(x) = Λ(x*)",
        rel_residual(md.t_op.linear_part @ np.conj(rep.lam), rep.lam @ alg.star_matrix),
        tol,
    )
    report.record(
        f"{prefix}.t_polar.1",
        "T = J∇^{1/2}",
        rel_residual(md.j_op.after(md.nabla_pow(0.5)).linear_part, md.t_op.linear_part),
        tol,
    )
    report.record(f"{prefix}.j_involution.1", "J² = 1", md.j_op.involution_defect(), tol)
    report.record(
        f"{prefix}.j_selfadjoint.1", "J* = J", md.j_op.distance(md.j_op.adjoint()), tol
    )
    report.record(
        f"{prefix}.j_nabla.1",
        "J∇J = ∇^{-1}",
        rel_residual(md.j_op.sandwich(md.nabla), md.nabla_pow(-1)),
        tol,
    )
    report.record_family(
        f"{prefix}.sigma_invariance.1",
        "∇^{it}π(A)∇^{-it} = π(A)",
        ((f"t={t}", md.sigma_with_defect(t)[1]) for t in ts),
        tol,
    )
    commutant = [md.j_op.sandwich(p) for p in rep.pi]
    residuals = [
        rel_residual(jp @ p, p @ jp) for jp in commutant for p in rep.pi
    ]
    report.record(
        f"{prefix}.commutant.1",
        "Jπ(A)J commutes with π(A)",
        max(residuals, default=0.0),
        tol,
    )
    report.record_family(
        f"{prefix}.group_law.1",
        "σ_s∘σ_t = σ_{s+t}",
        ((f"s={s},t={t}", rel_residual(md.sigma(s) @ md.sigma(t), md.sigma(s + t))) for s in ts for t in ts),
        tol,
    )
    report.record_family(
        f"{prefix}.unitary.1",
        "∇^{it} is unitary",
        ((f"t={t}", rel_residual(md.nabla_pow(1j * t) @ md.nabla_pow(1j * t).conj().T, eye)) for t in ts),
        tol,
    )
    return report
