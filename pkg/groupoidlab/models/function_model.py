"""The commutative model: functions on the arrows of a finite groupoid."""

from __future__ import annotations

import numpy as np

from groupoidlab.algebra.star import FiniteStarAlgebra
from groupoidlab.algebra.weights import Weight
from groupoidlab.models.groupoid import FiniteGroupoid, HaarWeights
from groupoidlab.qgroupoid.model import QuantumGroupoid


def _diagonals(indicators: np.ndarray) -> np.ndarray:
    n = indicators.shape[1]
    out = np.zeros((indicators.shape[0], n, n), dtype=complex)
    idx = np.arange(n)
    out[:, idx, idx] = indicators
    return out


def function_algebra_model(g: FiniteGroupoid, hw: HaarWeights) -> QuantumGroupoid:
    """Quantum groupoid of functions on G.

    A is the diagonal matrices indexed by arrows with basis δ_p,
    Δf(p,q) = f(pq) on composable pairs, E the indicator of composable pairs,
    B the pullbacks along src and C the pullbacks along tgt.
    φ(δ_p) = m(src p) and ψ(δ_p) = n(tgt p); ν is counting measure.
    """
    n = len(g)
    A = FiniteStarAlgebra(_diagonals(np.eye(n)), label="A")

    delta = np.zeros((n, n, n), dtype=complex)
    e = np.zeros((n, n), dtype=complex)
    for p, q in g.composable_pairs():
        i, j = g.index(p), g.index(q)
        delta[g.index(g.compose[(p, q)]), i, j] = 1.0
        e[i, j] = 1.0

    src_ind = np.array([[1.0 if g.src[p] == u else 0.0 for p in g.arrows] for u in g.units])
    tgt_ind = np.array([[1.0 if g.tgt[p] == u else 0.0 for p in g.arrows] for u in g.units])
    B = FiniteStarAlgebra(_diagonals(src_ind), label="B")
    C = FiniteStarAlgebra(_diagonals(tgt_ind), label="C")

    k = len(g.units)
    nu = Weight(B, np.ones(k))
    phi = Weight(A, [hw.m[g.src[p]] for p in g.arrows])
    psi = Weight(A, [hw.n[g.tgt[p]] for p in g.arrows])

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
        nu=nu,
        phi=phi,
        psi=psi,
        label="function",
        inversion_oracle=oracle,
    )
