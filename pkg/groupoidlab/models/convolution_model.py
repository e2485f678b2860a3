"""The cocommutative model: the convolution algebra of a finite groupoid."""

from __future__ import annotations

import numpy as np

from groupoidlab.algebra.star import FiniteStarAlgebra
from groupoidlab.algebra.weights import Weight
from groupoidlab.models.groupoid import FiniteGroupoid, HaarWeights
from groupoidlab.qgroupoid.model import QuantumGroupoid


def regular_operators(g: FiniteGroupoid) -> np.ndarray:
    """λ_p on ℓ²(arrows): λ_p δ_q = δ_{pq} when composable, else 0."""
    n = len(g)
    lam = np.zeros((n, n, n), dtype=complex)
    for p, q in g.composable_pairs():
        lam[g.index(p), g.index(g.compose[(p, q)]), g.index(q)] = 1.0
    return lam


def convolution_algebra_model(g: FiniteGroupoid, hw: HaarWeights) -> QuantumGroupoid:
    """Quantum groupoid spanned by the left regular operators λ_p.

    Δλ_p = λ_p⊗λ_p, E = Σ_u λ_u⊗λ_u, B = C = span{λ_u} with R_BC = id,
    φ(λ_p) = m(p)[p unit] and ψ(λ_p) = n(p)[p unit]; ν is counting measure.
    """
    n = len(g)
    lam = regular_operators(g)
    A = FiniteStarAlgebra(lam, label="A")

    delta = np.zeros((n, n, n), dtype=complex)
    for i in range(n):
        delta[i, i, i] = 1.0
    unit_idx = [g.index(u) for u in g.units]
    e = np.zeros((n, n), dtype=complex)
    for i in unit_idx:
        e[i, i] = 1.0

    units = lam[unit_idx]
    B = FiniteStarAlgebra(units, label="B")
    C = FiniteStarAlgebra(units.copy(), label="C")

    k = len(g.units)
    phi = Weight(A, [hw.m[p] if g.is_unit(p) else 0.0 for p in g.arrows])
    psi = Weight(A, [hw.n[p] if g.is_unit(p) else 0.0 for p in g.arrows])

    oracle = np.zeros((n, n), dtype=complex)
    for p in g.arrows:
        oracle[g.index(g.inv[p]), g.index(p)] = 1.0

    return QuantumGroupoid(
        A=A,
        delta=delta,
        E=e,
        B=B,
        C=C,
        r_bc=np.eye(k),
        nu=Weight(B, np.ones(k)),
        phi=phi,
        psi=psi,
        label="convolution",
        inversion_oracle=oracle,
    )
