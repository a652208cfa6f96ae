"""Brute-force reference: the full 6N x 6N step unitary, built literally.

Nothing here shares evolution code with the fast engine or the momentum-space
path; the conditional move is assembled from its six projector-times-cyclic-
permutation terms and multiplied against coin (x) identity.  Intended for
validation and for computing reference time averages, not for performance.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .dihedral import DihedralParams
from .walk import CoinOperator, WalkerState

__all__ = ["DenseUnitary", "build_dense_unitary", "oracle_evolve", "oracle_time_average"]

MAX_DENSE_N = 256


@dataclass(frozen=True)
class DenseUnitary:
    """One-step operator on the flattened (coin, sheet, position) basis."""

    matrix: np.ndarray
    params: DihedralParams


def _guard(p: DihedralParams) -> None:
    if p.n > MAX_DENSE_N:
        raise ValueError(f"dense oracle limited to N <= {MAX_DENSE_N}, got N={p.n}")


def build_dense_unitary(coin: CoinOperator, p: DihedralParams) -> DenseUnitary:
    """Assemble the step operator from its definition."""
    _guard(p)
    n = p.n
    coin_basis = np.eye(3)
    sheet_basis = np.eye(2)
    forward = np.roll(np.eye(n), 1, axis=0)    # position +1
    backward = np.roll(np.eye(n), -1, axis=0)  # position -1
    stay = np.eye(n)

    def term(c_out, c_in, s_out, s_in, pos):
        return np.kron(
            np.outer(coin_basis[c_out], coin_basis[c_in]),
            np.kron(np.outer(sheet_basis[s_out], sheet_basis[s_in]), pos),
        )

    move = (
        term(0, 0, 0, 0, forward)
        + term(0, 0, 1, 1, backward)
        + term(1, 1, 0, 0, stay)
        + term(1, 1, 1, 1, stay)
        + term(2, 2, 0, 1, stay)
        + term(2, 2, 1, 0, stay)
    )
    matrix = move @ np.kron(coin.matrix, np.eye(2 * n))
    defect = np.abs(matrix.conj().T @ matrix - np.eye(6 * n)).max()
    if defect > 1e-12:
        raise ValueError(f"dense step operator not unitary (defect {defect:.2e})")
    matrix.setflags(write=False)
    return DenseUnitary(matrix=matrix, params=p)


def oracle_evolve(initial: WalkerState, coin: CoinOperator, t: int) -> WalkerState:
    """t repeated dense matrix-vector applications of the step operator."""
    if t < 0:
        raise ValueError(f"step count must be >= 0, got {t}")
    _guard(initial.params)
    u = build_dense_unitary(coin, initial.params).matrix
    vec = initial.amplitudes.reshape(-1).copy()
    for _ in range(t):
        vec = u @ vec
    return WalkerState(vec.reshape(3, 2, initial.params.n), initial.params)


def oracle_time_average(initial: WalkerState, coin: CoinOperator, horizon: int, vertex: int) -> float:
    """Mean probability at one vertex over times 0 .. horizon-1, by literal summation."""
    if horizon < 1:
        raise ValueError(f"horizon must be >= 1, got {horizon}")
    p = initial.params
    _guard(p)
    if not 0 <= vertex < 2 * p.n:
        raise ValueError(f"vertex index {vertex} out of range")
    s, x = divmod(vertex, p.n)
    u = build_dense_unitary(coin, p).matrix
    vec = initial.amplitudes.reshape(-1).copy()
    total = 0.0
    for t in range(horizon):
        amps = vec.reshape(3, 2, p.n)
        total += float((np.abs(amps[:, s, x]) ** 2).sum())
        if t + 1 < horizon:
            vec = u @ vec
    return total / horizon
