"""Self-check suites behind the `verify` CLI subcommand.

Each check exercises one cross-cutting property (engine vs dense reference vs
momentum-space path, block unitarity, spectrum identities, limit
consistency).  Checks call into the package through module attributes so a
tampered build is caught no matter which layer was altered.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from . import dihedral, oracle, spectral, walk

__all__ = ["CheckResult", "run_verification", "QUICK_SIZES", "FULL_EXTRA_SIZES"]

QUICK_SIZES = (3, 5, 8)
FULL_EXTRA_SIZES = (20, 50)


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str


def _group_axioms(sizes) -> CheckResult:
    worst = ""
    for n in sizes:
        p = dihedral.DihedralParams(n)
        elems = [dihedral.GroupElement(s, t) for s in (0, 1) for t in range(n)]
        ident = dihedral.GroupElement(0, 0)
        rng = np.random.default_rng(7 * n)
        for _ in range(60):
            a, b, c = (elems[rng.integers(len(elems))] for _ in range(3))
            lhs = dihedral.multiply(dihedral.multiply(a, b, p), c, p)
            rhs = dihedral.multiply(a, dihedral.multiply(b, c, p), p)
            if lhs != rhs:
                return CheckResult("group-axioms", False, f"associativity broke at N={n}")
        for g in elems:
            if dihedral.multiply(ident, g, p) != g or dihedral.multiply(g, ident, p) != g:
                return CheckResult("group-axioms", False, f"identity broke at N={n}")
            if dihedral.multiply(dihedral.inverse(g, p), g, p) != ident:
                return CheckResult("group-axioms", False, f"inverse broke at N={n}")
            v = dihedral.encode_vertex(g, p)
            if dihedral.decode_vertex(v, p) != g:
                return CheckResult("group-axioms", False, f"vertex codec broke at N={n}")
        worst = f"N in {tuple(sizes)}"
    return CheckResult("group-axioms", True, worst)


def _step_unitarity(sizes) -> CheckResult:
    rng = np.random.default_rng(11)
    worst = 0.0
    coins = [walk.grover_coin(), walk.dft_coin()]
    for n in sizes:
        p = dihedral.DihedralParams(n)
        for state in walk.random_states(p, 10, rng):
            for coin in coins:
                out = walk.step(state, coin)
                worst = max(worst, abs(out.norm() - 1.0))
    ok = worst <= 1e-12
    return CheckResult("step-unitarity", ok, f"max norm defect {worst:.2e}")


def _oracle_equivalence(sizes, t_max=30) -> CheckResult:
    rng = np.random.default_rng(13)
    worst = 0.0
    coin = walk.grover_coin()
    for n in sizes:
        p = dihedral.DihedralParams(n)
        for state in walk.random_states(p, 4, rng):
            t = int(rng.integers(1, t_max + 1))
            direct = walk.evolve(state, coin, t)
            dense = oracle.oracle_evolve(state, coin, t)
            worst = max(worst, float(np.abs(direct.amplitudes - dense.amplitudes).max()))
    ok = worst <= 1e-12
    return CheckResult("oracle-equivalence", ok, f"max amplitude gap {worst:.2e}")


def _fourier_equivalence(sizes, t_max=30, tol=1e-10) -> CheckResult:
    rng = np.random.default_rng(17)
    worst = 0.0
    coin = walk.grover_coin()
    for n in sizes:
        p = dihedral.DihedralParams(n)
        for state in walk.random_states(p, 4, rng):
            t = int(rng.integers(1, t_max + 1))
            direct = walk.evolve(state, coin, t)
            fourier = spectral.evolve_fourier(state, coin, t)
            worst = max(worst, float(np.abs(direct.amplitudes - fourier.amplitudes).max()))
    ok = worst <= tol
    return CheckResult("fourier-equivalence", ok, f"max amplitude gap {worst:.2e}")


def _block_spectrum(sizes) -> CheckResult:
    flat = np.array([-1, 1, (1 - 2j * np.sqrt(2)) / 3, (1 + 2j * np.sqrt(2)) / 3])
    worst_mod = 0.0
    worst_flat = 0.0
    worst_trace = 0.0
    for n in sizes:
        p = dihedral.DihedralParams(n)
        blocks = spectral.momentum_blocks(walk.grover_coin(), p)
        system = spectral.numeric_eigensystem(blocks)
        for k in range(n):
            values = system.eigenvalues[k]
            worst_mod = max(worst_mod, float(np.abs(np.abs(values) - 1.0).max()))
            for f in flat:
                worst_flat = max(worst_flat, float(np.abs(values - f).min()))
            analytic = spectral.analytic_eigenvalues(k, p)
            worst_trace = max(
                worst_trace, abs(analytic.values.sum() - np.trace(blocks[k].matrix))
            )
    ok = worst_mod <= 1e-10 and worst_flat <= 1e-8 and worst_trace <= 1e-10
    return CheckResult(
        "block-spectrum",
        ok,
        f"unimodularity {worst_mod:.2e}, flat bands {worst_flat:.2e}, trace {worst_trace:.2e}",
    )


def _dense_block_diagonalization(sizes) -> CheckResult:
    worst = 0.0
    coin = walk.grover_coin()
    for n in sizes:
        p = dihedral.DihedralParams(n)
        u = oracle.build_dense_unitary(coin, p).matrix
        grid = np.exp(2j * np.pi * np.outer(np.arange(n), np.arange(n)) / n)
        fwd = np.kron(np.eye(6), grid)
        inv = np.kron(np.eye(6), grid.conj().T / n)
        tensor = (fwd @ u @ inv).reshape(6, n, 6, n)
        for k in range(n):
            block = spectral.momentum_block(coin, k, p).matrix
            worst = max(worst, float(np.abs(tensor[:, k, :, k] - block).max()))
            off = np.abs(tensor[:, k, :, :]).max(axis=(0, 1))
            off[k] = 0.0
            worst = max(worst, float(off.max()))
    ok = worst <= 1e-10
    return CheckResult("dense-block-diagonalization", ok, f"max block gap {worst:.2e}")


def _limit_consistency(sizes, horizon, tol) -> CheckResult:
    coin = walk.grover_coin()
    worst = 0.0
    gaps = []
    for n in sizes:
        p = dihedral.DihedralParams(n)
        start = dihedral.GroupElement(1, 0)
        vertex = dihedral.encode_vertex(start, p)
        coin0 = walk.InitialCoinState(1.0, 0.0, 0.0)
        state = walk.initial_state(coin0, start, p)
        averaged = oracle.oracle_time_average(state, coin, horizon, vertex)
        degenerate = spectral.limiting_distribution(coin0, start, coin, p, vertex)
        diagonal = spectral.limiting_return_probability_theorem1(coin0, start, coin, p)
        worst = max(worst, abs(averaged - degenerate))
        gaps.append((n, diagonal, degenerate, diagonal - degenerate))
    ok = worst <= tol
    gap_text = "; ".join(
        f"N={n}: diagonal-form {d:.6f} vs degeneracy-aware {g:.6f} (gap {delta:+.6f})"
        for n, d, g, delta in gaps
    )
    return CheckResult(
        "limit-consistency",
        ok,
        f"max |time-average - limit| {worst:.2e} at horizon {horizon}; {gap_text}",
    )


def run_verification(scale: str = "quick") -> tuple[bool, list[CheckResult]]:
    """Run the property suites; scale is 'quick' or 'full'."""
    if scale not in ("quick", "full"):
        raise ValueError(f"scale must be 'quick' or 'full', got {scale!r}")
    sizes = QUICK_SIZES
    results = [
        _group_axioms(sizes),
        _step_unitarity(sizes),
        _oracle_equivalence(sizes),
        _fourier_equivalence(sizes),
        _block_spectrum(sizes),
        _dense_block_diagonalization(sizes),
        _limit_consistency(sizes, horizon=2000, tol=5e-3),
    ]
    if scale == "full":
        results.append(_oracle_equivalence(FULL_EXTRA_SIZES, t_max=50))
        results.append(_fourier_equivalence(FULL_EXTRA_SIZES, t_max=200, tol=1e-9))
        results.append(_block_spectrum(FULL_EXTRA_SIZES))
        results.append(
            _limit_consistency(QUICK_SIZES[1:] + FULL_EXTRA_SIZES, horizon=10_000, tol=5e-3)
        )
    ok = all(r.passed for r in results)
    return ok, results


def format_report(results: list[CheckResult]) -> str:
    lines = []
    for r in results:
        lines.append(f"[{'PASS' if r.passed else 'FAIL'}] {r.name}: {r.detail}")
    failed = [r.name for r in results if not r.passed]
    if failed:
        lines.append(f"verification FAILED, first failing property: {failed[0]}")
    else:
        lines.append("verification passed")
    return "\n".join(lines)
