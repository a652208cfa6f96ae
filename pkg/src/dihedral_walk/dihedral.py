"""Exact arithmetic for the dihedral group D_N and the vertex codec.

Elements are written in the normal form (reflection)^s (rotation)^t and held
as pairs (s, t) with s in {0, 1} and t in Z_N.  Vertices of the Cayley graph
are the 2N group elements; the integer label s*N + t is the canonical key
used by every CSV/JSON file this project writes.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

__all__ = [
    "DihedralParams",
    "GroupElement",
    "Generator",
    "multiply",
    "inverse",
    "apply_generator_left",
    "encode_vertex",
    "decode_vertex",
    "cayley_neighbors",
]


@dataclass(frozen=True)
class DihedralParams:
    """Order parameter of the group: number of rotations N (N >= 3)."""

    n: int

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 3:
            raise ValueError(f"dihedral order must be an integer >= 3, got {self.n!r}")

    @property
    def num_vertices(self) -> int:
        return 2 * self.n


@dataclass(frozen=True)
class GroupElement:
    """Dihedral element (s, t): s = 0 rotation / 1 reflection, t in [0, N)."""

    s: int
    t: int


class Generator(enum.Enum):
    """The three walk moves, in the fixed order used everywhere."""

    ROTATION = "rotation"
    IDENTITY = "identity"
    REFLECTION = "reflection"


def _check(g: GroupElement, p: DihedralParams) -> None:
    if g.s not in (0, 1) or not 0 <= g.t < p.n:
        raise ValueError(f"invalid element {g} for N={p.n}")


def multiply(a: GroupElement, b: GroupElement, p: DihedralParams) -> GroupElement:
    """Group product a*b in normal form.

    Moving the rotation part of `a` past the reflection part of `b` flips its
    sign, so the product is (s_a xor s_b, (-1)^{s_b} t_a + t_b mod N).
    """
    _check(a, p)
    _check(b, p)
    t = (b.t - a.t if b.s else b.t + a.t) % p.n
    return GroupElement(a.s ^ b.s, t)


def inverse(g: GroupElement, p: DihedralParams) -> GroupElement:
    """Inverse element: rotations invert to -t, reflections are involutions."""
    _check(g, p)
    return GroupElement(g.s, g.t if g.s else (-g.t) % p.n)


def apply_generator_left(g: GroupElement, gen: Generator, p: DihedralParams) -> GroupElement:
    """Left-multiply g by the rotation, identity, or reflection generator.

    This is exactly the position action of the walk's shift: the rotation
    advances t by +1 on the rotation sheet and by -1 on the reflection sheet,
    and the reflection swaps sheets keeping t.
    """
    _check(g, p)
    if gen is Generator.ROTATION:
        return GroupElement(g.s, (g.t - 1) % p.n if g.s else (g.t + 1) % p.n)
    if gen is Generator.IDENTITY:
        return g
    if gen is Generator.REFLECTION:
        return GroupElement(1 - g.s, g.t)
    raise ValueError(f"unknown generator {gen!r}")


def encode_vertex(g: GroupElement, p: DihedralParams) -> int:
    """Canonical vertex label s*N + t."""
    _check(g, p)
    return g.s * p.n + g.t


def decode_vertex(v: int, p: DihedralParams) -> GroupElement:
    """Inverse of encode_vertex; rejects labels outside [0, 2N)."""
    if not 0 <= v < 2 * p.n:
        raise ValueError(f"vertex index {v} out of range [0, {2 * p.n})")
    return GroupElement(v // p.n, v % p.n)


def cayley_neighbors(v: int, p: DihedralParams) -> list[tuple[Generator, int]]:
    """Targets of the three moves from vertex v, in generator order."""
    g = decode_vertex(v, p)
    return [
        (gen, encode_vertex(apply_generator_left(g, gen, p), p))
        for gen in (Generator.ROTATION, Generator.IDENTITY, Generator.REFLECTION)
    ]
