"""Momentum-space analysis of the walk.

The walk unitary commutes with rotation of the position register, so the
discrete Fourier transform over position splits it into N independent 6x6
unitary blocks, one per momentum index k.  This module builds those blocks,
diagonalizes them, evolves states through the eigenbasis at a cost
independent of the step count, and evaluates the long-time limit of the
time-averaged vertex distribution.

Transform convention: the forward transform is the unnormalized sum
block(k) = sum_x exp(+2*pi*i*k*x/N) * psi(x); the inverse carries the 1/N
factor and the opposite phase sign.  Only this pairing makes the round trip
the identity.

Two limit formulas are provided.  `limiting_return_probability_theorem1`
keeps only the diagonal (k, j) terms of the time average, which amounts to
assuming all 6N eigenvalues are distinct.  They are not: four eigenvalues are
flat (shared by every k) and the two dispersive bands coincide at k and N-k,
so the surviving cross terms matter.  `limiting_distribution` groups all
equal eigenvalues before taking the time average and is the formula that
matches brute-force time averages.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.linalg

from .dihedral import DihedralParams, GroupElement
from .walk import (
    CoinOperator,
    Distribution,
    InitialCoinState,
    WalkerState,
    initial_state,
)

__all__ = [
    "FourierState",
    "FourierBlock",
    "EigenSystem",
    "DegeneracyClass",
    "AnalyticEigenvalues",
    "dtft_forward",
    "dtft_inverse",
    "momentum_block",
    "momentum_blocks",
    "numeric_eigensystem",
    "analytic_eigenvalues",
    "evolve_fourier",
    "limiting_return_probability_theorem1",
    "limiting_profile",
    "limiting_distribution",
]

BLOCK_UNITARITY_TOL = 1e-12
DEGENERACY_TOL = 1e-8

_FLAT_REAL = np.array([-1.0, 1.0], dtype=complex)
_FLAT_COMPLEX_IM = 2.0 * np.sqrt(2.0) / 3.0


@dataclass(frozen=True)
class FourierState:
    """Momentum-space state: blocks[k] is the 6-vector at momentum k."""

    blocks: np.ndarray
    params: DihedralParams

    def __post_init__(self):
        b = np.asarray(self.blocks, dtype=complex)
        if b.shape != (self.params.n, 6):
            raise ValueError(f"blocks must have shape ({self.params.n}, 6), got {b.shape}")
        object.__setattr__(self, "blocks", b)


def dtft_forward(state: WalkerState) -> FourierState:
    """Forward transform over position, one 6-vector per momentum index."""
    n = state.params.n
    stacked = state.internal_vectors()
    blocks = n * np.fft.ifft(stacked, axis=1)
    return FourierState(blocks.T.copy(), state.params)


def dtft_inverse(fs: FourierState) -> WalkerState:
    """Inverse transform; `dtft_inverse(dtft_forward(s))` reproduces s."""
    n = fs.params.n
    stacked = np.fft.fft(fs.blocks.T, axis=1) / n
    return WalkerState(stacked.reshape(3, 2, n), fs.params)


@dataclass(frozen=True)
class FourierBlock:
    """The 6x6 unitary driving momentum component k of an order-N walk."""

    k: int
    order: int
    phase: complex
    matrix: np.ndarray


def momentum_block(coin: CoinOperator, k: int, p: DihedralParams) -> FourierBlock:
    """Build the momentum-k block as (Fourier shift) x (coin on internal space).

    The Fourier image of the conditional move is diagonal in the coin-0 slots
    (phases K and 1/K for the two sheets), the identity on the coin-1 slots,
    and the sheet swap on the coin-2 slots.
    """
    if not 0 <= k < p.n:
        raise ValueError(f"momentum index {k} out of range [0, {p.n})")
    phase = np.exp(2j * np.pi * k / p.n)
    shift = np.zeros((6, 6), dtype=complex)
    shift[0, 0] = phase
    shift[1, 1] = 1.0 / phase
    shift[2, 2] = 1.0
    shift[3, 3] = 1.0
    shift[4, 5] = 1.0
    shift[5, 4] = 1.0
    matrix = shift @ np.kron(coin.matrix, np.eye(2))
    defect = np.abs(matrix.conj().T @ matrix - np.eye(6)).max()
    if defect > BLOCK_UNITARITY_TOL:
        raise ValueError(f"momentum block k={k} not unitary (defect {defect:.2e})")
    matrix = matrix.copy()
    matrix.setflags(write=False)
    return FourierBlock(k=k, order=p.n, phase=phase, matrix=matrix)


def momentum_blocks(coin: CoinOperator, p: DihedralParams) -> list[FourierBlock]:
    return [momentum_block(coin, k, p) for k in range(p.n)]


@dataclass(frozen=True)
class DegeneracyClass:
    """All (k, j) index pairs sharing one eigenvalue within tolerance."""

    value: complex
    members: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class EigenSystem:
    """Per-momentum spectra of the walk blocks.

    eigenvalues[k, j] and the column eigenvectors[k][:, j] form an
    orthonormal eigenbasis of block k (orthonormal within degenerate
    subspaces as well).  normalizers[k, j] records the norm each raw vector
    was divided by.  classes partitions all (k, j) pairs by eigenvalue
    equality within 1e-8.
    """

    params: DihedralParams
    eigenvalues: np.ndarray
    eigenvectors: np.ndarray
    normalizers: np.ndarray
    classes: tuple[DegeneracyClass, ...]


def _cluster_eigenvalues(eigenvalues: np.ndarray) -> tuple[DegeneracyClass, ...]:
    reps: list[complex] = []
    members: list[list[tuple[int, int]]] = []
    n = eigenvalues.shape[0]
    for k in range(n):
        for j in range(6):
            value = complex(eigenvalues[k, j])
            for idx, rep in enumerate(reps):
                if abs(value - rep) <= DEGENERACY_TOL:
                    members[idx].append((k, j))
                    break
            else:
                reps.append(value)
                members.append([(k, j)])
    return tuple(
        DegeneracyClass(value=rep, members=tuple(mem)) for rep, mem in zip(reps, members)
    )


def numeric_eigensystem(blocks: list[FourierBlock]) -> EigenSystem:
    """Diagonalize every block via a complex Schur factorization.

    For a unitary (hence normal) matrix the Schur form is diagonal, so the
    Schur basis is an orthonormal eigenbasis even inside degenerate
    eigenspaces, which plain nonsymmetric eigensolvers do not guarantee.
    """
    if not blocks:
        raise ValueError("no momentum blocks given")
    orders = {b.order for b in blocks}
    if len(orders) != 1:
        raise ValueError("blocks mix different group orders")
    n = orders.pop()
    ks = sorted(b.k for b in blocks)
    if ks != list(range(n)):
        raise ValueError(f"blocks must cover momentum indices 0..{n - 1} exactly once")
    by_k = {b.k: b for b in blocks}
    eigenvalues = np.empty((n, 6), dtype=complex)
    eigenvectors = np.empty((n, 6, 6), dtype=complex)
    normalizers = np.empty((n, 6))
    for k in range(n):
        try:
            tri, basis = scipy.linalg.schur(by_k[k].matrix, output="complex")
        except Exception as exc:  # pragma: no cover - LAPACK failure path
            raise RuntimeError(f"eigendecomposition failed for momentum index {k}") from exc
        norms = np.linalg.norm(basis, axis=0)
        eigenvalues[k] = np.diag(tri)
        eigenvectors[k] = basis / norms
        normalizers[k] = norms
    params = DihedralParams(n)
    return EigenSystem(
        params=params,
        eigenvalues=eigenvalues,
        eigenvectors=eigenvectors,
        normalizers=normalizers,
        classes=_cluster_eigenvalues(eigenvalues),
    )


@dataclass(frozen=True)
class AnalyticEigenvalues:
    """Closed-form spectrum of a diffusion-coin block at momentum k.

    values holds the six eigenvalues.  The first four are flat across k:
    -1, +1 and (1 -+ 2*sqrt(2)*i)/3.  The last two are the dispersive pair,
    evaluated through a trigonometric form that is unimodular by construction
    and free of square-root branch ambiguity.  dispersive_numerators are the
    algebraic numerators of those two values (each eigenvalue equals
    -numerator / (6*phase)), and radicand is the quantity under their square
    root, phase^2 + 10*phase + 1.
    """

    k: int
    values: np.ndarray
    dispersive_numerators: tuple[complex, complex]
    radicand: complex


def analytic_eigenvalues(k: int, p: DihedralParams) -> AnalyticEigenvalues:
    """Closed-form eigenvalues of the diffusion-coin block at momentum k."""
    if not 0 <= k < p.n:
        raise ValueError(f"momentum index {k} out of range [0, {p.n})")
    theta = 2.0 * np.pi * k / p.n
    phase = np.exp(1j * theta)
    root = np.sin(theta / 2.0) * np.sqrt(2.0 * np.cos(theta) + 10.0)
    lam5 = -((np.cos(theta) + 2.0) - 1j * root) / 3.0
    lam6 = -((np.cos(theta) + 2.0) + 1j * root) / 3.0
    values = np.array(
        [
            -1.0,
            1.0,
            (1.0 - 2.0 * np.sqrt(2.0) * 1j) / 3.0,
            (1.0 + 2.0 * np.sqrt(2.0) * 1j) / 3.0,
            lam5,
            lam6,
        ],
        dtype=complex,
    )
    # Branch-fixed square root: sqrt(radicand) = exp(i*theta/2) * sqrt(2cos(theta)+10).
    branch_root = np.exp(1j * theta / 2.0) * np.sqrt(2.0 * np.cos(theta) + 10.0)
    base = phase**2 + 4.0 * phase + 1.0
    num5 = base - phase * branch_root + branch_root
    num6 = base + phase * branch_root - branch_root
    return AnalyticEigenvalues(
        k=k,
        values=values,
        dispersive_numerators=(num5, num6),
        radicand=phase**2 + 10.0 * phase + 1.0,
    )


def is_grover(coin: CoinOperator) -> bool:
    ref = np.array([[-1, 2, 2], [2, -1, 2], [2, 2, -1]], dtype=complex) / 3
    return bool(np.abs(coin.matrix - ref).max() <= 1e-14)


def evolve_fourier(initial: WalkerState, coin: CoinOperator, t: int) -> WalkerState:
    """Evolve t steps through the block eigenbases.

    After the one-time eigensolve the cost does not depend on t: each block's
    coefficients are multiplied by eigenvalue powers and transformed back.
    """
    if t < 0:
        raise ValueError(f"step count must be >= 0, got {t}")
    p = initial.params
    system = numeric_eigensystem(momentum_blocks(coin, p))
    fs = dtft_forward(initial)
    out = np.empty_like(fs.blocks)
    for k in range(p.n):
        basis = system.eigenvectors[k]
        coeffs = basis.conj().T @ fs.blocks[k]
        out[k] = basis @ (system.eigenvalues[k] ** t * coeffs)
    return dtft_inverse(FourierState(out, p))


def _projection_coefficients(system: EigenSystem, fs: FourierState) -> np.ndarray:
    """coeffs[k, j] = <eigenvector_j(k) | block_k>."""
    n = system.params.n
    coeffs = np.empty((n, 6), dtype=complex)
    for k in range(n):
        coeffs[k] = system.eigenvectors[k].conj().T @ fs.blocks[k]
    return coeffs


def limiting_return_probability_theorem1(
    coin0: InitialCoinState, start: GroupElement, coin: CoinOperator, p: DihedralParams
) -> float:
    """Long-time return probability assuming every eigenvalue pair is distinct.

    Sums the squared eigenbasis projections of the initial state over all
    (k, j), scaled by 1/N^2.  Because the projections at each k exhaust a unit
    vector, this collapses to 1/N for any localized start; it is kept in the
    diagonal form so the collapse is a measured fact rather than an identity
    we baked in.
    """
    state = initial_state(coin0, start, p)
    system = numeric_eigensystem(momentum_blocks(coin, p))
    coeffs = _projection_coefficients(system, dtft_forward(state))
    return float((np.abs(coeffs) ** 2).sum() / p.n**2)


def limiting_profile(initial: WalkerState, coin: CoinOperator) -> Distribution:
    """Long-time limit of the time-averaged vertex distribution.

    Cross terms between equal eigenvalues survive time averaging, so the
    initial state is projected onto each degeneracy class as a whole; the
    limit at a vertex is the summed squared magnitude of each class's
    real-space field at that vertex.
    """
    p = initial.params
    n = p.n
    system = numeric_eigensystem(momentum_blocks(coin, p))
    fs = dtft_forward(initial)
    coeffs = _projection_coefficients(system, fs)
    positions = np.arange(n)
    probs = np.zeros(2 * n)
    for cls in system.classes:
        field = np.zeros((6, n), dtype=complex)
        for k, j in cls.members:
            weight = coeffs[k, j] / n
            if weight == 0:
                continue
            phases = np.exp(-2j * np.pi * k * positions / n)
            field += weight * np.outer(system.eigenvectors[k][:, j], phases)
        for s in (0, 1):
            probs[s * n : (s + 1) * n] += (np.abs(field[s::2, :]) ** 2).sum(axis=0)
    return Distribution(probs, p)


def limiting_distribution(
    coin0: InitialCoinState,
    start: GroupElement,
    coin: CoinOperator,
    p: DihedralParams,
    vertex: int,
) -> float:
    """Degeneracy-aware limiting probability at one vertex index."""
    if not 0 <= vertex < 2 * p.n:
        raise ValueError(f"vertex index {vertex} out of range [0, {2 * p.n})")
    profile = limiting_profile(initial_state(coin0, start, p), coin)
    return profile[vertex]
