"""Shared fixtures-in-plain-python for the test suite."""

import numpy as np

from dihedral_walk.dihedral import DihedralParams
from dihedral_walk.walk import WalkerState

# Stencil matrices of one diffusion-coin step: the new 6-vector at position x
# mixes the old 6-vectors at x+1 (HOP_IN), x-1 (HOP_OUT) and x (STAY).
HOP_IN = np.zeros((6, 6))
HOP_IN[1] = [0, -1, 0, 2, 0, 2]
HOP_OUT = np.zeros((6, 6))
HOP_OUT[0] = [-1, 0, 2, 0, 2, 0]
STAY = np.zeros((6, 6))
STAY[2] = [2, 0, -1, 0, 2, 0]
STAY[3] = [0, 2, 0, -1, 0, 2]
STAY[4] = [0, 2, 0, 2, 0, -1]
STAY[5] = [2, 0, 2, 0, -1, 0]
HOP_IN /= 3
HOP_OUT /= 3
STAY /= 3


def random_state(p: DihedralParams, seed) -> WalkerState:
    rng = np.random.default_rng(seed)
    a = rng.normal(size=(3, 2, p.n)) + 1j * rng.normal(size=(3, 2, p.n))
    return WalkerState(a / np.linalg.norm(a), p)
