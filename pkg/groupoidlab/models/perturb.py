"""Deliberate model perturbations used as negative controls."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

import numpy as np

from groupoidlab.algebra.weights import Weight
from groupoidlab.errors import ConfigError
from groupoidlab.models.groupoid import FiniteGroupoid
from groupoidlab.qgroupoid.model import QuantumGroupoid


@dataclass(frozen=True)
class Perturbation:
    """Perturbations applied to a built model.

    Attributes:
        e_noise: Frobenius size of seeded self-adjoint noise added to E
        seed: Seed for the noise
        phi_off_unit: Value placed on λ_p and λ_{p⁻¹} for the first non-unit p
    """

    e_noise: float = 0.0
    seed: int = 0
    phi_off_unit: float = 0.0

    def __post_init__(self):
        if self.e_noise < 0:
            raise ConfigError(f"perturb.E_noise must be >= 0, got {self.e_noise}")

    @property
    def active(self) -> bool:
        return self.e_noise > 0 or self.phi_off_unit != 0

    @classmethod
    def from_dict(cls, data: dict[str, Any] | None) -> "Perturbation":
        if not data:
            return cls()
        unknown = sorted(set(data) - {"E_noise", "seed", "phi_off_unit"})
        if unknown:
            raise ConfigError(f"unknown perturb keys: {', '.join(unknown)}")
        try:
            return cls(
                e_noise=float(data.get("E_noise", 0.0)),
                seed=int(data.get("seed", 0)),
                phi_off_unit=float(data.get("phi_off_unit", 0.0)),
            )
        except (TypeError, ValueError) as e:
            raise ConfigError(f"invalid perturb block: {e}")

    def to_dict(self) -> dict[str, Any]:
        return {"E_noise": self.e_noise, "seed": self.seed, "phi_off_unit": self.phi_off_unit}


def perturb_E(qg: QuantumGroupoid, size: float, seed: int) -> QuantumGroupoid:
    """Add self-adjoint noise H = (X + X*)/2, scaled to Frobenius norm `size`, to E."""
    rng = np.random.default_rng(seed)
    d = qg.dim
    x = rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))
    h = (x + qg.A.star2(x)) / 2
    h = h * (size / np.linalg.norm(h))
    return qg.with_E(qg.E + h)


def perturb_phi_off_unit(qg: QuantumGroupoid, g: FiniteGroupoid, value: float) -> QuantumGroupoid:
    """Give φ a nonzero value on the first non-unit arrow and its inverse."""
    non_units = [p for p in g.arrows if not g.is_unit(p)]
    if not non_units:
        raise ConfigError("phi_off_unit needs a groupoid with a non-unit arrow")
    p = non_units[0]
    values = qg.phi.values.copy()
    values[g.index(p)] += value
    if g.inv[p] != p:
        values[g.index(g.inv[p])] += value
    return qg.with_phi(Weight(qg.A, values))


def apply_perturbation(qg: QuantumGroupoid, g: FiniteGroupoid, perturbation: Perturbation) -> QuantumGroupoid:
    if perturbation.e_noise > 0:
        qg = perturb_E(qg, perturbation.e_noise, perturbation.seed)
    if perturbation.phi_off_unit != 0:
        qg = perturb_phi_off_unit(qg, g, perturbation.phi_off_unit)
    return qg
