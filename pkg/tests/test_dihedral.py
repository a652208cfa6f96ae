import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dihedral_walk.dihedral import (
    DihedralParams,
    Generator,
    GroupElement,
    apply_generator_left,
    cayley_neighbors,
    decode_vertex,
    encode_vertex,
    inverse,
    multiply,
)

P5 = DihedralParams(5)


def all_elements(p):
    return [GroupElement(s, t) for s in (0, 1) for t in range(p.n)]


orders = st.integers(min_value=3, max_value=16)


@st.composite
def element_triples(draw):
    n = draw(orders)
    p = DihedralParams(n)
    elems = [
        GroupElement(draw(st.integers(0, 1)), draw(st.integers(0, n - 1))) for _ in range(3)
    ]
    return p, elems


def test_params_rejects_degenerate_orders():
    for bad in (2, 1, 0, -4):
        with pytest.raises(ValueError):
            DihedralParams(bad)
    DihedralParams(3)


def test_identity_element():
    assert multiply(GroupElement(0, 0), GroupElement(1, 4), P5) == GroupElement(1, 4)


def test_reflection_conjugates_rotation_to_its_inverse():
    # two reflections on either side of a rotation invert it
    assert multiply(GroupElement(1, 1), GroupElement(1, 0), P5) == GroupElement(0, 4)


def test_rotation_subgroup_is_cyclic_addition():
    assert multiply(GroupElement(0, 2), GroupElement(0, 4), P5) == GroupElement(0, 1)


@given(element_triples())
@settings(max_examples=200)
def test_group_axioms(data):
    p, (a, b, c) = data
    ident = GroupElement(0, 0)
    assert multiply(multiply(a, b, p), c, p) == multiply(a, multiply(b, c, p), p)
    assert multiply(ident, a, p) == a
    assert multiply(a, ident, p) == a
    assert multiply(inverse(a, p), a, p) == ident
    assert multiply(a, inverse(a, p), p) == ident


@pytest.mark.parametrize("n", range(3, 17))
def test_generator_orders_and_relation(n):
    p = DihedralParams(n)
    rot = GroupElement(0, 1)
    ref = GroupElement(1, 0)
    ident = GroupElement(0, 0)
    g = ident
    for k in range(1, n):
        g = multiply(rot, g, p)
        assert g != ident
    assert multiply(rot, g, p) == ident
    assert multiply(ref, ref, p) == ident
    # reflection * rotation * reflection = inverse rotation
    conj = multiply(ref, multiply(rot, ref, p), p)
    assert conj == inverse(rot, p)


def test_shift_action_examples():
    assert apply_generator_left(GroupElement(0, 2), Generator.ROTATION, P5) == GroupElement(0, 3)
    assert apply_generator_left(GroupElement(1, 0), Generator.ROTATION, P5) == GroupElement(1, 4)
    assert apply_generator_left(GroupElement(0, 3), Generator.REFLECTION, P5) == GroupElement(1, 3)
    assert apply_generator_left(GroupElement(1, 2), Generator.IDENTITY, P5) == GroupElement(1, 2)


@pytest.mark.parametrize("n", [3, 5, 8, 12])
def test_generator_action_is_left_multiplication(n):
    p = DihedralParams(n)
    as_element = {
        Generator.ROTATION: GroupElement(0, 1),
        Generator.IDENTITY: GroupElement(0, 0),
        Generator.REFLECTION: GroupElement(1, 0),
    }
    for g in all_elements(p):
        for gen, elem in as_element.items():
            assert apply_generator_left(g, gen, p) == multiply(elem, g, p)


def test_vertex_codec_examples():
    assert encode_vertex(GroupElement(0, 0), P5) == 0
    assert encode_vertex(GroupElement(1, 0), P5) == 5
    assert encode_vertex(GroupElement(1, 3), P5) == 8


@pytest.mark.parametrize("n", [3, 5, 8, 16])
def test_vertex_codec_is_a_bijection(n):
    p = DihedralParams(n)
    seen = set()
    for g in all_elements(p):
        v = encode_vertex(g, p)
        assert 0 <= v < 2 * n
        assert decode_vertex(v, p) == g
        seen.add(v)
    assert len(seen) == 2 * n


def test_decode_rejects_out_of_range():
    with pytest.raises(ValueError):
        decode_vertex(10, P5)
    with pytest.raises(ValueError):
        decode_vertex(-1, P5)


def test_invalid_elements_rejected():
    with pytest.raises(ValueError):
        multiply(GroupElement(0, 5), GroupElement(0, 0), P5)
    with pytest.raises(ValueError):
        multiply(GroupElement(2, 0), GroupElement(0, 0), P5)


def test_cayley_neighbors():
    assert cayley_neighbors(0, P5) == [
        (Generator.ROTATION, 1),
        (Generator.IDENTITY, 0),
        (Generator.REFLECTION, 5),
    ]
    assert cayley_neighbors(5, P5) == [
        (Generator.ROTATION, 9),
        (Generator.IDENTITY, 5),
        (Generator.REFLECTION, 0),
    ]
    assert cayley_neighbors(7, P5) == [
        (Generator.ROTATION, 6),
        (Generator.IDENTITY, 7),
        (Generator.REFLECTION, 2),
    ]
