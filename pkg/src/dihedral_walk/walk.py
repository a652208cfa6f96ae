"""Real-space engine for the three-state walk on the dihedral Cayley graph.

The walker carries a 3-dimensional coin register (rotate / stay / reflect)
over the 2N vertices, stored as a complex tensor indexed (coin, sheet,
position).  One step applies the coin to the internal register at every
vertex, then the conditional move: coin 0 advances the position by +1 on the
rotation sheet and -1 on the reflection sheet, coin 1 stays put, coin 2 swaps
sheets in place.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .dihedral import DihedralParams, GroupElement, encode_vertex

__all__ = [
    "CoinOperator",
    "grover_coin",
    "dft_coin",
    "InitialCoinState",
    "WalkerState",
    "Distribution",
    "initial_state",
    "superposition_state",
    "step",
    "evolve",
    "position_distribution",
    "time_averaged_distribution",
]

UNITARITY_TOL = 1e-12
NORM_DRIFT_TOL = 1e-10

# Internal 6-vector order per position: (coin, sheet) =
# (0,0), (0,1), (1,0), (1,1), (2,0), (2,1).


class CoinOperator:
    """A 3x3 unitary acting on the coin register.

    The matrix is validated against U*U = I at construction (tolerance 1e-12)
    and exposed read-only.
    """

    __slots__ = ("_matrix",)

    def __init__(self, matrix: np.ndarray):
        m = np.asarray(matrix, dtype=complex)
        if m.shape != (3, 3):
            raise ValueError(f"coin must be 3x3, got shape {m.shape}")
        defect = np.abs(m.conj().T @ m - np.eye(3)).max()
        if defect > UNITARITY_TOL:
            raise ValueError(f"coin is not unitary (defect {defect:.2e})")
        m = m.copy()
        m.setflags(write=False)
        self._matrix = m

    @property
    def matrix(self) -> np.ndarray:
        return self._matrix

    def __repr__(self):
        return f"CoinOperator({np.array2string(self._matrix, precision=4)})"


def grover_coin() -> CoinOperator:
    """The symmetric diffusion coin (1/3)*[[-1,2,2],[2,-1,2],[2,2,-1]]."""
    return CoinOperator(np.array([[-1, 2, 2], [2, -1, 2], [2, 2, -1]], dtype=complex) / 3)


def dft_coin() -> CoinOperator:
    """The degree-3 discrete-Fourier coin, entry (r, c) = exp(2*pi*i*r*c/3)/sqrt(3)."""
    r = np.arange(3)
    return CoinOperator(np.exp(2j * np.pi / 3) ** np.outer(r, r) / np.sqrt(3))


@dataclass(frozen=True)
class InitialCoinState:
    """Coin amplitudes (alpha, beta, gamma) over the rotate/stay/reflect basis."""

    alpha: complex
    beta: complex
    gamma: complex

    def __post_init__(self):
        norm2 = abs(self.alpha) ** 2 + abs(self.beta) ** 2 + abs(self.gamma) ** 2
        if abs(norm2 - 1.0) > UNITARITY_TOL:
            raise ValueError(f"coin state not normalized: |.|^2 = {norm2!r}")

    def as_array(self) -> np.ndarray:
        return np.array([self.alpha, self.beta, self.gamma], dtype=complex)


class WalkerState:
    """Wave function over (coin, sheet, position), unit norm.

    `amplitudes` has shape (3, 2, N).  Construction re-checks the norm with a
    loose drift alarm (1e-10) so silent non-unitarity in a long evolution
    surfaces immediately.
    """

    __slots__ = ("amplitudes", "params")

    def __init__(self, amplitudes: np.ndarray, params: DihedralParams):
        a = np.asarray(amplitudes, dtype=complex)
        if a.shape != (3, 2, params.n):
            raise ValueError(f"amplitudes must have shape (3, 2, {params.n}), got {a.shape}")
        norm2 = float(np.vdot(a, a).real)
        if abs(norm2 - 1.0) > NORM_DRIFT_TOL:
            raise ValueError(f"state norm drifted: |psi|^2 = {norm2!r}")
        self.amplitudes = a
        self.params = params

    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))

    def internal_vectors(self) -> np.ndarray:
        """View of the amplitudes as N stacked 6-vectors (order (c, s))."""
        return self.amplitudes.reshape(6, self.params.n)


def initial_state(coin: InitialCoinState, start: GroupElement, p: DihedralParams) -> WalkerState:
    """Walker localized at one vertex with the given coin amplitudes."""
    return superposition_state(coin, [(start, 1.0 + 0j)], p)


def superposition_state(
    coin: InitialCoinState,
    positions: Iterable[tuple[GroupElement, complex]],
    p: DihedralParams,
) -> WalkerState:
    """Walker spread over several vertices, each carrying the same coin state.

    The position weights together with the coin amplitudes must give a unit
    norm overall; overlapping vertices accumulate.
    """
    amps = np.zeros((3, 2, p.n), dtype=complex)
    coin_vec = coin.as_array()
    any_position = False
    for g, w in positions:
        encode_vertex(g, p)  # validates
        amps[:, g.s, g.t] += complex(w) * coin_vec
        any_position = True
    if not any_position:
        raise ValueError("at least one initial position is required")
    return WalkerState(amps, p)


def step(state: WalkerState, coin: CoinOperator) -> WalkerState:
    """One application of the walk unitary: coin first, then conditional move."""
    a = np.tensordot(coin.matrix, state.amplitudes, axes=([1], [0]))
    out = np.empty_like(a)
    out[0, 0] = np.roll(a[0, 0], 1)
    out[0, 1] = np.roll(a[0, 1], -1)
    out[1] = a[1]
    out[2, 0] = a[2, 1]
    out[2, 1] = a[2, 0]
    return WalkerState(out, state.params)


def evolve(state: WalkerState, coin: CoinOperator, t: int) -> WalkerState:
    """t-fold composition of `step` (t >= 0)."""
    if t < 0:
        raise ValueError(f"step count must be >= 0, got {t}")
    for _ in range(t):
        state = step(state, coin)
    return state


@dataclass(frozen=True)
class Distribution:
    """Probabilities over the 2N vertices, indexed by the canonical label."""

    probs: np.ndarray
    params: DihedralParams

    def __post_init__(self):
        q = np.asarray(self.probs, dtype=float)
        if q.shape != (2 * self.params.n,):
            raise ValueError(f"expected {2 * self.params.n} entries, got shape {q.shape}")
        if q.min() < -1e-15:
            raise ValueError(f"negative probability {q.min()!r}")
        if abs(q.sum() - 1.0) > NORM_DRIFT_TOL:
            raise ValueError(f"probabilities sum to {q.sum()!r}")
        object.__setattr__(self, "probs", q)

    def __getitem__(self, vertex: int) -> float:
        return float(self.probs[vertex])


def position_distribution(state: WalkerState) -> Distribution:
    """Vertex probabilities: internal components summed per (sheet, position)."""
    probs = (np.abs(state.amplitudes) ** 2).sum(axis=0).reshape(-1)
    return Distribution(probs, state.params)


def time_averaged_distribution(initial: WalkerState, coin: CoinOperator, horizon: int) -> Distribution:
    """Average of the vertex distribution over times 0 .. horizon-1.

    Computed in a single evolution pass; horizon must be >= 1.
    """
    if horizon < 1:
        raise ValueError(f"horizon must be >= 1, got {horizon}")
    acc = np.zeros(2 * initial.params.n)
    state = initial
    for t in range(horizon):
        acc += (np.abs(state.amplitudes) ** 2).sum(axis=0).reshape(-1)
        if t + 1 < horizon:
            state = step(state, coin)
    return Distribution(acc / horizon, initial.params)


def running_average_series(
    initial: WalkerState, coin: CoinOperator, horizon: int, vertex: int
) -> np.ndarray:
    """Partial time averages at one vertex: entry T-1 holds the mean over t < T."""
    if horizon < 1:
        raise ValueError(f"horizon must be >= 1, got {horizon}")
    if not 0 <= vertex < 2 * initial.params.n:
        raise ValueError(f"vertex index {vertex} out of range")
    n = initial.params.n
    s, x = divmod(vertex, n)
    series = np.empty(horizon)
    state = initial
    acc = 0.0
    for t in range(horizon):
        acc += float((np.abs(state.amplitudes[:, s, x]) ** 2).sum())
        series[t] = acc / (t + 1)
        if t + 1 < horizon:
            state = step(state, coin)
    return series


def random_states(p: DihedralParams, count: int, rng: np.random.Generator) -> Sequence[WalkerState]:
    """Haar-ish random unit states, used by the verification suites."""
    out = []
    for _ in range(count):
        a = rng.normal(size=(3, 2, p.n)) + 1j * rng.normal(size=(3, 2, p.n))
        out.append(WalkerState(a / np.linalg.norm(a), p))
    return out
