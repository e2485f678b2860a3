"""The quantum groupoid data model in coefficient form."""

from __future__ import annotations

from dataclasses import dataclass, replace
from functools import cached_property

import numpy as np

from groupoidlab.algebra.modular import ModularData, modular_data
from groupoidlab.algebra.star import FiniteStarAlgebra
from groupoidlab.algebra.weights import GNSRep, Weight, gns
from groupoidlab.errors import ConfigError


@dataclass(frozen=True, eq=False)
class QuantumGroupoid:
    """The tuple (A, Δ, E, B, C, R_BC, ν, φ, ψ) in matrix form.

    Δ is stored on the basis of A: Δ(b_k) = Σ delta[k,i,j] bᵢ⊗bⱼ. B and C are
    subalgebras of A given in the same ambient matrix space; r_bc is the
    coefficient matrix of R_BC: B → C.

    Attributes:
        label: Model name used in reports
        inversion_oracle: Optional coefficient matrix of the expected antipode
    """

    A: FiniteStarAlgebra
    delta: np.ndarray
    E: np.ndarray
    B: FiniteStarAlgebra
    C: FiniteStarAlgebra
    r_bc: np.ndarray
    nu: Weight
    phi: Weight
    psi: Weight
    label: str = "model"
    inversion_oracle: np.ndarray | None = None

    def __post_init__(self):
        d = self.A.dim
        delta = np.asarray(self.delta, dtype=complex)
        e = np.asarray(self.E, dtype=complex)
        if delta.shape != (d, d, d):
            raise ConfigError(f"delta must have shape {(d, d, d)}, got {delta.shape}")
        if e.shape != (d, d):
            raise ConfigError(f"E must have shape {(d, d)}, got {e.shape}")
        for sub in (self.B, self.C):
            if sub.ambient_dim != self.A.ambient_dim:
                raise ConfigError(f"{sub.label} does not live in the ambient space of A")
        r_bc = np.asarray(self.r_bc, dtype=complex)
        if r_bc.shape != (self.C.dim, self.B.dim):
            raise ConfigError(f"r_bc must have shape {(self.C.dim, self.B.dim)}, got {r_bc.shape}")
        if self.nu.algebra is not self.B:
            raise ConfigError("nu must be a weight on B")
        if self.phi.algebra is not self.A or self.psi.algebra is not self.A:
            raise ConfigError("phi and psi must be weights on A")
        object.__setattr__(self, "delta", delta)
        object.__setattr__(self, "E", e)
        object.__setattr__(self, "r_bc", r_bc)

    @property
    def dim(self) -> int:
        return self.A.dim

    @property
    def unit(self) -> np.ndarray:
        return self.A.unit

    # base algebras

    @cached_property
    def incl_B(self) -> np.ndarray:
        return self.A.coords(self.B.basis).T

    @cached_property
    def incl_C(self) -> np.ndarray:
        return self.A.coords(self.C.basis).T

    @cached_property
    def proj_B(self) -> np.ndarray:
        return np.linalg.pinv(self.incl_B)

    @cached_property
    def proj_C(self) -> np.ndarray:
        return np.linalg.pinv(self.incl_C)

    @cached_property
    def r_bc_inv(self) -> np.ndarray:
        return np.linalg.inv(self.r_bc)

    @cached_property
    def mu(self) -> Weight:
        """μ = ν∘R_BC⁻¹ on C."""
        return Weight(self.C, self.r_bc_inv.T @ self.nu.values)

    # representations and modular data

    @cached_property
    def rep_phi(self) -> GNSRep:
        return gns(self.phi)

    @cached_property
    def rep_psi(self) -> GNSRep:
        return gns(self.psi)

    @cached_property
    def md_phi(self) -> ModularData:
        return modular_data(self.rep_phi)

    @cached_property
    def md_psi(self) -> ModularData:
        return modular_data(self.rep_psi)

    @cached_property
    def md_nu(self) -> ModularData:
        return modular_data(gns(self.nu))

    @cached_property
    def md_mu(self) -> ModularData:
        return modular_data(gns(self.mu))

    # comultiplication helpers

    def comult(self, x: np.ndarray) -> np.ndarray:
        """Δ(x) as a (d, d) coefficient array; x may carry leading axes."""
        return np.einsum("...k,kij->...ij", x, self.delta)

    def comult_left(self, x: np.ndarray) -> np.ndarray:
        """(Δ⊗id)(X) for X in A⊗A."""
        return np.einsum("ij,iab->abj", x, self.delta)

    def comult_right(self, x: np.ndarray) -> np.ndarray:
        """(id⊗Δ)(X) for X in A⊗A."""
        return np.einsum("ij,jab->iab", x, self.delta)

    def leg13(self, x: np.ndarray) -> np.ndarray:
        """X₁₃ in A⊗A⊗A for X in A⊗A."""
        return np.einsum("ik,j->ijk", x, self.unit)

    def leg12(self, x: np.ndarray) -> np.ndarray:
        return np.einsum("ij,k->ijk", x, self.unit)

    def leg23(self, x: np.ndarray) -> np.ndarray:
        return np.einsum("i,jk->ijk", self.unit, x)

    def slice_first(self, weight: Weight, x: np.ndarray) -> np.ndarray:
        """(ω⊗id)(X) for X in A⊗A (leading axes allowed)."""
        return np.einsum("i,...ij->...j", weight.values, x)

    def slice_second(self, weight: Weight, x: np.ndarray) -> np.ndarray:
        """(id⊗ω)(X) for X in A⊗A (leading axes allowed)."""
        return np.einsum("...ij,j->...i", x, weight.values)

    def with_psi(self, psi: Weight) -> "QuantumGroupoid":
        return replace(self, psi=psi)

    def with_phi(self, phi: Weight) -> "QuantumGroupoid":
        return replace(self, phi=phi)

    def with_E(self, e: np.ndarray) -> "QuantumGroupoid":
        return replace(self, E=e)
