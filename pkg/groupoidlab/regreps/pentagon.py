"""Pentagon-type identities for W with both legs on H_φ."""

from __future__ import annotations

import numpy as np

from groupoidlab.linalg.dense import DEFAULT_MAX_DIM, leg_operator, rel_residual
from groupoidlab.types import CheckReport

_LEGS = {"12": (0, 1), "13": (0, 2), "23": (1, 2)}


def _times(x: np.ndarray, op: np.ndarray, legs: tuple[int, int]) -> np.ndarray:
    """x·op_legs for a three-leg tensor x[o0, o1, o2, i0, i1, i2] and op on H⊗H."""
    dim = x.shape[0]
    l1, l2 = legs
    (rest,) = {0, 1, 2} - {l1, l2}
    t = np.tensordot(x, op.reshape(dim, dim, dim, dim), axes=([3 + l1, 3 + l2], [0, 1]))
    pos = {rest: 3, l1: 4, l2: 5}
    return t.transpose(0, 1, 2, pos[0], pos[1], pos[2])


def leg_chain(factors: list[tuple[np.ndarray, str]], max_dim: int = DEFAULT_MAX_DIM) -> np.ndarray:
    """Product of operators on H⊗H placed on legs "12", "13" or "23" of H⊗H⊗H.

    Returns the product as a (D, D, D, D, D, D) tensor, outputs first.

    Raises:
        ResourceLimitError: If H⊗H⊗H exceeds max_dim
    """
    first, legs = factors[0]
    dim = int(round(np.sqrt(first.shape[0])))
    x = leg_operator(first, [dim, dim, dim], _LEGS[legs], max_dim).reshape((dim,) * 6)
    for op, legs in factors[1:]:
        x = _times(x, op, _LEGS[legs])
    return x


def pentagon_checks(
    w: np.ndarray,
    e_rep: np.ndarray,
    g_l: np.ndarray,
    tol: float,
    pi: np.ndarray | None = None,
    max_dim: int = DEFAULT_MAX_DIM,
) -> CheckReport:
    """The six leg identities and coassociativity of Δ̃(x) = W*(1⊗x)W.

    Args:
        w: W on H_φ⊗H_φ
        e_rep: E represented on H_φ⊗H_φ
        g_l: G_L on H_φ⊗H_φ
        pi: Optional (d, D, D) spanning set for Δ̃; defaults to the slices of W
        max_dim: Largest three-leg dimension allowed

    Raises:
        ResourceLimitError: If H_φ⊗H_φ⊗H_φ exceeds max_dim
    """
    report = CheckReport(label="pentagon")
    dim = int(round(np.sqrt(w.shape[0])))
    wh = w.conj().T

    def chain(*factors):
        return leg_chain(list(factors), max_dim)

    identities = [
        ("W₁₂W₁₃W₂₃ = W₂₃W₁₂", chain((w, "12"), (w, "13"), (w, "23")), chain((w, "23"), (w, "12"))),
        ("W₁₃W₂₃W₂₃* = W₁₂*W₁₂W₁₃", chain((w, "13"), (w, "23"), (wh, "23")), chain((wh, "12"), (w, "12"), (w, "13"))),
        ("W₁₂*W₂₃W₁₂ = W₁₃W₂₃", chain((wh, "12"), (w, "23"), (w, "12")), chain((w, "13"), (w, "23"))),
        ("W₂₃W₁₂W₂₃* = W₁₂W₁₃", chain((w, "23"), (w, "12"), (wh, "23")), chain((w, "12"), (w, "13"))),
        ("W₁₂W₁₂*W₂₃ = W₂₃W₁₂W₁₂*", chain((w, "12"), (wh, "12"), (w, "23")), chain((w, "23"), (w, "12"), (wh, "12"))),
        ("W₁₂W₂₃*W₂₃ = W₂₃*W₂₃W₁₂", chain((w, "12"), (wh, "23"), (w, "23")), chain((wh, "23"), (w, "23"), (w, "12"))),
    ]
    for k, (anchor, lhs, rhs) in enumerate(identities, start=1):
        report.record(f"regreps.pentagon.{k}", anchor, rel_residual(lhs, rhs), tol)

    if pi is None:
        slices = w.reshape(dim, dim, dim, dim).transpose(1, 3, 0, 2)
        pi = slices.reshape(dim * dim, dim, dim)
    eye = np.eye(dim)
    # [out, out, in, in] tensors; the three-leg sandwiches contract them directly
    w4 = w.reshape(dim, dim, dim, dim)
    wh4 = wh.reshape(dim, dim, dim, dim)

    def coassociativity():
        for k, x in enumerate(pi):
            dx = (wh @ np.kron(eye, x) @ w).reshape(dim, dim, dim, dim)
            # W₁₂*(1⊗Δ̃x)W₁₂ and W₂₃*(Δ̃x)₁₃W₂₃
            left = np.einsum("abxy,ycvC,xvAB->abcABC", wh4, dx, w4, optimize=True)
            right = np.einsum("bcyz,azAv,yvBC->abcABC", wh4, dx, w4, optimize=True)
            yield f"x{k}", rel_residual(left, right)

    report.record_family(
        "regreps.extended_coassociativity.1", "(Δ̃⊗id)Δ̃ = (id⊗Δ̃)Δ̃", coassociativity(), tol
    )
    report.record(
        "regreps.pentagon_projections.1",
        "W*W = E and WW* = G_L on H_φ⊗H_φ",
        max(rel_residual(wh @ w, e_rep), rel_residual(w @ wh, g_l)),
        tol,
    )
    return report
