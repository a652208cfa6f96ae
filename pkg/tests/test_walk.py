import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dihedral_walk.dihedral import DihedralParams, GroupElement
from dihedral_walk.walk import (
    CoinOperator,
    Distribution,
    InitialCoinState,
    WalkerState,
    dft_coin,
    evolve,
    grover_coin,
    initial_state,
    position_distribution,
    step,
    superposition_state,
    time_averaged_distribution,
)

from helpers import HOP_IN, HOP_OUT, STAY, random_state

P5 = DihedralParams(5)


def test_grover_coin_entries():
    m = grover_coin().matrix
    assert m[0, 0] == pytest.approx(-1 / 3)
    assert m[0, 1] == pytest.approx(2 / 3)
    assert np.allclose(m, m.T)


def test_grover_coin_is_an_involution_fixing_uniform():
    m = grover_coin().matrix
    assert np.abs(m @ m - np.eye(3)).max() < 1e-15
    u = np.ones(3) / np.sqrt(3)
    assert np.abs(m @ u - u).max() < 1e-15


def test_dft_coin_entries():
    m = dft_coin().matrix
    assert m[1, 1] == pytest.approx(np.exp(2j * np.pi / 3) / np.sqrt(3))
    assert np.allclose(m[:, 0], np.ones(3) / np.sqrt(3))
    assert np.abs(m.conj().T @ m - np.eye(3)).max() < 1e-14


def test_coin_operator_rejects_non_unitary():
    with pytest.raises(ValueError):
        CoinOperator(np.ones((3, 3)))
    with pytest.raises(ValueError):
        CoinOperator(np.eye(4))


def test_initial_coin_state_rejects_unnormalized():
    with pytest.raises(ValueError):
        InitialCoinState(1.0, 1.0, 0.0)
    InitialCoinState(1 / np.sqrt(2), 1j / np.sqrt(2), 0.0)


def test_initial_state_places_amplitudes():
    s = initial_state(InitialCoinState(1, 0, 0), GroupElement(0, 0), P5)
    assert s.amplitudes[0, 0, 0] == 1.0
    assert np.count_nonzero(s.amplitudes) == 1

    s = initial_state(InitialCoinState(0, 1, 0), GroupElement(1, 0), P5)
    assert s.amplitudes[1, 1, 0] == 1.0
    assert s.norm() == pytest.approx(1.0)


def test_superposition_state_checks_norm():
    coin = InitialCoinState(1, 0, 0)
    w = 1 / np.sqrt(2)
    s = superposition_state(coin, [(GroupElement(0, 0), w), (GroupElement(1, 0), w)], P5)
    assert s.norm() == pytest.approx(1.0)
    with pytest.raises(ValueError):
        superposition_state(coin, [(GroupElement(0, 0), 1.0), (GroupElement(1, 0), 1.0)], P5)
    with pytest.raises(ValueError):
        superposition_state(coin, [], P5)


def test_one_step_hand_values():
    s = initial_state(InitialCoinState(1, 0, 0), GroupElement(0, 0), P5)
    out = step(s, grover_coin())
    assert out.amplitudes[0, 0, 1] == pytest.approx(-1 / 3, abs=1e-15)
    assert out.amplitudes[1, 0, 0] == pytest.approx(2 / 3, abs=1e-15)
    assert out.amplitudes[2, 1, 0] == pytest.approx(2 / 3, abs=1e-15)
    assert np.count_nonzero(out.amplitudes) == 3
    d = position_distribution(out)
    assert d[0] == pytest.approx(4 / 9, abs=1e-15)
    assert d[1] == pytest.approx(1 / 9, abs=1e-15)
    assert d[5] == pytest.approx(4 / 9, abs=1e-15)


def test_uniform_coin_splits_evenly():
    u = 1 / np.sqrt(3)
    s = initial_state(InitialCoinState(u, u, u), GroupElement(0, 0), P5)
    d = position_distribution(step(s, grover_coin()))
    for v in (0, 1, 5):
        assert d[v] == pytest.approx(1 / 3)


def test_zero_steps_is_identity_and_one_step_is_step():
    s = random_state(P5, seed=3)
    same = evolve(s, grover_coin(), 0)
    assert np.array_equal(same.amplitudes, s.amplitudes)
    one = evolve(s, grover_coin(), 1)
    assert np.array_equal(one.amplitudes, step(s, grover_coin()).amplitudes)
    with pytest.raises(ValueError):
        evolve(s, grover_coin(), -1)


def test_step_matches_hop_stencil():
    # independent check of the engine against the three-band stencil
    s = random_state(P5, seed=11)
    out = step(s, grover_coin())
    vecs = s.internal_vectors()
    expect = np.empty_like(vecs)
    for x in range(5):
        expect[:, x] = (
            HOP_IN @ vecs[:, (x + 1) % 5]
            + HOP_OUT @ vecs[:, (x - 1) % 5]
            + STAY @ vecs[:, x]
        )
    assert np.abs(out.internal_vectors() - expect).max() < 1e-15


@given(st.integers(0, 10_000), st.sampled_from([3, 5, 8]), st.sampled_from(["grover", "dft"]))
@settings(max_examples=120, deadline=None)
def test_step_preserves_norm(seed, n, coin_name):
    p = DihedralParams(n)
    coin = grover_coin() if coin_name == "grover" else dft_coin()
    s = random_state(p, seed)
    assert abs(step(s, coin).norm() - 1.0) < 1e-12


def test_walker_state_norm_alarm():
    a = np.zeros((3, 2, 5), dtype=complex)
    a[0, 0, 0] = 1.1
    with pytest.raises(ValueError):
        WalkerState(a, P5)


def test_distribution_validation():
    with pytest.raises(ValueError):
        Distribution(np.full(10, 0.2), P5)  # sums to 2
    with pytest.raises(ValueError):
        Distribution(np.zeros(9), P5)  # wrong length


def test_long_run_regression_values():
    p = DihedralParams(50)
    s = initial_state(InitialCoinState(1, 0, 0), GroupElement(1, 0), p)
    d = position_distribution(evolve(s, grover_coin(), 200))
    assert d[50] == pytest.approx(0.28048372059269516, abs=1e-12)
    assert d[0] == pytest.approx(0.24640957235954003, abs=1e-12)
    top_two = set(np.argsort(d.probs)[-2:].tolist())
    assert top_two == {0, 50}


def test_time_average_single_term_and_normalization():
    s = initial_state(InitialCoinState(0, 0, 1), GroupElement(1, 2), P5)
    ta1 = time_averaged_distribution(s, grover_coin(), 1)
    assert np.array_equal(ta1.probs, position_distribution(s).probs)
    ta = time_averaged_distribution(s, grover_coin(), 37)
    assert ta.probs.sum() == pytest.approx(1.0, abs=1e-10)
    with pytest.raises(ValueError):
        time_averaged_distribution(s, grover_coin(), 0)


@given(st.lists(st.floats(-1, 1), min_size=3, max_size=3), st.integers(0, 40))
@settings(max_examples=40, deadline=None)
def test_reflection_symmetry_for_balanced_starts(coin_amps, t):
    # a walker spread evenly over (0,0) and (1,0) with a real coin state keeps
    # the sheet-swap-and-negate symmetry at every later time
    vec = np.array(coin_amps)
    norm = np.linalg.norm(vec)
    if norm < 1e-6:
        vec = np.array([1.0, 0.0, 0.0])
        norm = 1.0
    a, b, c = vec / norm
    p = DihedralParams(7)
    w = 1 / np.sqrt(2)
    s = superposition_state(
        InitialCoinState(a, b, c), [(GroupElement(0, 0), w), (GroupElement(1, 0), w)], p
    )
    d = position_distribution(evolve(s, grover_coin(), t)).probs.reshape(2, 7)
    mirrored = d[::-1][:, (-np.arange(7)) % 7]
    assert np.abs(d - mirrored).max() < 1e-10
