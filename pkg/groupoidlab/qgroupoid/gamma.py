"""The anti-homomorphisms γ_B: B → C and γ_C: C → B attached to E."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from groupoidlab.algebra.star import FiniteStarAlgebra
from groupoidlab.linalg.dense import rel_residual
from groupoidlab.qgroupoid.model import QuantumGroupoid
from groupoidlab.types import CheckReport


@dataclass(frozen=True, eq=False)
class GammaMaps:
    """Coefficient matrices of γ_B (B → C) and γ_C (C → B)."""

    gamma_b: np.ndarray
    gamma_c: np.ndarray

    @cached_property
    def gamma_b_inv(self) -> np.ndarray:
        return np.linalg.inv(self.gamma_b)

    @cached_property
    def gamma_c_inv(self) -> np.ndarray:
        return np.linalg.inv(self.gamma_c)


def gamma_maps(qg: QuantumGroupoid) -> GammaMaps:
    """γ_B = R_BC∘σ^ν_{i/2} and γ_C = R_BC⁻¹∘σ^μ_{-i/2}."""
    gamma_b = qg.r_bc @ qg.md_nu.sigma(0.5j)
    gamma_c = qg.r_bc_inv @ qg.md_mu.sigma(-0.5j)
    return GammaMaps(gamma_b=gamma_b, gamma_c=gamma_c)


def _anti_multiplicative(f: np.ndarray, src: FiniteStarAlgebra, dst: FiniteStarAlgebra) -> float:
    image_of_product = np.einsum("ijk,mk->ijm", src.mult, f)
    product_of_images = np.einsum("aj,bi,abm->ijm", f, f, dst.mult)
    return rel_residual(image_of_product, product_of_images)


def gamma_relations(qg: QuantumGroupoid, gm: GammaMaps, tol: float) -> CheckReport:
    """The slice relations of E that characterize γ_B and γ_C."""
    report = CheckReport(label=f"gamma {qg.label}")
    A, B, C = qg.A, qg.B, qg.C
    u = qg.unit
    e = qg.E
    bs = qg.incl_B.T
    cs = qg.incl_C.T

    def left_leg(xs: np.ndarray) -> np.ndarray:
        return np.einsum("bi,j->bij", xs, u)

    def right_leg(xs: np.ndarray) -> np.ndarray:
        return np.einsum("i,bj->bij", u, xs)

    gb_images = (qg.incl_C @ gm.gamma_b).T
    report.record(
        "qgroupoid.gamma.1",
        "E(b⊗1) = E(1⊗γ_B(b))",
        rel_residual(A.mul2(e, left_leg(bs)), A.mul2(e, right_leg(gb_images))),
        tol,
    )
    gb_inv_images = (qg.incl_B @ gm.gamma_b_inv).T
    report.record(
        "qgroupoid.gamma.2",
        "E(1⊗c) = E(γ_B⁻¹(c)⊗1)",
        rel_residual(A.mul2(e, right_leg(cs)), A.mul2(e, left_leg(gb_inv_images))),
        tol,
    )
    gc_images = (qg.incl_B @ gm.gamma_c).T
    report.record(
        "qgroupoid.gamma.3",
        "(1⊗c)E = (γ_C(c)⊗1)E",
        rel_residual(A.mul2(right_leg(cs), e), A.mul2(left_leg(gc_images), e)),
        tol,
    )
    gc_inv_images = (qg.incl_C @ gm.gamma_c_inv).T
    report.record(
        "qgroupoid.gamma.4",
        "(b⊗1)E = (1⊗γ_C⁻¹(b))E",
        rel_residual(A.mul2(left_leg(bs), e), A.mul2(right_leg(gc_inv_images), e)),
        tol,
    )

    # b ↦ γ_C(γ_B(b)*)* on B coefficients
    inner = C.star_matrix @ np.conj(gm.gamma_b)
    roundtrip = B.star_matrix @ np.conj(gm.gamma_c @ inner)
    report.record(
        "qgroupoid.gamma.5", "γ_C(γ_B(b)*)* = b", rel_residual(roundtrip, np.eye(B.dim)), tol
    )

    e_bc = qg.proj_B @ e @ qg.proj_C.T
    swapped = qg.incl_C @ gm.gamma_b @ e_bc @ gm.gamma_c.T @ qg.incl_B.T
    report.record("qgroupoid.gamma.6", "(γ_B⊗γ_C)(E) = flip(E)", rel_residual(swapped, e.T), tol)

    report.record(
        "qgroupoid.gamma_antimultiplicative.1",
        "γ_B(b₁b₂) = γ_B(b₂)γ_B(b₁)",
        _anti_multiplicative(gm.gamma_b, B, C),
        tol,
    )
    report.record(
        "qgroupoid.gamma_antimultiplicative.2",
        "γ_C(c₁c₂) = γ_C(c₂)γ_C(c₁)",
        _anti_multiplicative(gm.gamma_c, C, B),
        tol,
    )
    return report
