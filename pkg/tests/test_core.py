from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import graph_with, graphs, graphs_with_cycle
from msgraph.core import (
    CycleError,
    InvalidWidthError,
    Multisign,
    MultisignedCompleteGraph,
    SignParseError,
    VertexError,
    WidthMismatchError,
    canonical_cycle,
    cycle_multisign,
    edge_sign,
    ms_from_text,
    ms_identity,
    ms_mul,
    ms_pow_parity,
    ms_to_text,
    pair_index,
    triangle_multisign,
)
from msgraph.gen import gen_constant

T = ms_from_text


def test_identity():
    assert ms_to_text(ms_identity(1)) == "+"
    assert ms_to_text(ms_identity(3)) == "+++"
    assert ms_identity(3).components == (1, 1, 1)


@pytest.mark.parametrize("m", [0, 65, -1])
def test_identity_rejects_bad_width(m):
    with pytest.raises(InvalidWidthError):
        ms_identity(m)


@pytest.mark.parametrize(
    "a, b, expected",
    [("+-", "+-", "++"), ("-+", "--", "+-"), ("-", "+", "-")],
)
def test_mul_examples(a, b, expected):
    assert ms_mul(T(a), T(b)) == T(expected)
    assert T(a) * T(b) == T(expected)


def test_mul_width_mismatch():
    with pytest.raises(WidthMismatchError):
        ms_mul(T("+"), T("++"))


@pytest.mark.parametrize(
    "g, k, expected", [("-", 3, "-"), ("-+", 4, "++"), ("+", 7, "+"), ("--", 0, "++")]
)
def test_pow_parity(g, k, expected):
    assert ms_pow_parity(T(g), k) == T(expected)


@pytest.mark.parametrize("g", ["-", "+-", "--+"])
def test_pow_parity_matches_repeated_product(g):
    g = T(g)
    acc = ms_identity(g.width)
    for k in range(10):
        assert ms_pow_parity(g, k) == acc
        acc = acc * g


@pytest.mark.parametrize("m", [1, 2, 3])
def test_group_laws_exhaustive(m):
    elems = [Multisign(m, b) for b in range(1 << m)]
    e = ms_identity(m)
    for a, b, c in product(elems, repeat=3):
        assert (a * b) * c == a * (b * c)
    for a, b in product(elems, repeat=2):
        assert a * b == b * a
    for a in elems:
        assert a * e == a
        assert a * a == e


@given(st.integers(1, 64).flatmap(lambda m: st.tuples(*[st.integers(0, (1 << m) - 1)] * 3, st.just(m))))
def test_group_laws_random(abcm):
    a, b, c, m = abcm
    a, b, c = Multisign(m, a), Multisign(m, b), Multisign(m, c)
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a * a == ms_identity(m)


def test_text_encoding():
    g = T("+-+")
    assert g.width == 3
    assert g.components == (1, -1, 1)
    assert ms_to_text(T("--")) == "--"
    assert Multisign.from_components([1, -1, 1]) == g


@pytest.mark.parametrize("text, position", [("x+", 0), ("+-?", 2), ("", 0), ("+" * 65, 64)])
def test_text_errors(text, position):
    with pytest.raises(SignParseError) as info:
        ms_from_text(text)
    assert info.value.position == position


@given(st.text(alphabet="+-", min_size=1, max_size=64))
def test_text_round_trip(s):
    assert ms_to_text(ms_from_text(s)) == s


def test_pair_index_is_row_major_upper_triangle():
    n = 6
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    assert [pair_index(n, u, v) for u, v in pairs] == list(range(len(pairs)))
    assert pair_index(n, 4, 2) == pair_index(n, 2, 4)


def test_graph_validation():
    with pytest.raises(ValueError):
        MultisignedCompleteGraph(2, 1, (0,))
    with pytest.raises(ValueError):
        MultisignedCompleteGraph(3, 1, (0, 0))
    with pytest.raises(ValueError):
        MultisignedCompleteGraph(3, 1, (0, 0, 2))


def test_edge_sign():
    g = gen_constant(4, 1, T("-"))
    assert edge_sign(g, 0, 3) == T("-")
    one = graph_with(4, e01="-")
    assert edge_sign(one, 1, 0) == T("-")
    assert edge_sign(one, 2, 3) == T("+")
    with pytest.raises(VertexError):
        edge_sign(g, 2, 2)
    with pytest.raises(VertexError):
        edge_sign(g, 0, 4)


def test_cycle_multisign_examples():
    assert cycle_multisign(gen_constant(5, 1, T("-")), (0, 1, 2, 3, 4)) == T("-")
    assert cycle_multisign(gen_constant(6, 1, T("-")), (0, 1, 2, 3, 4, 5)) == T("+")
    # edges 02, 21, 13, 30 all avoid {0,1}
    assert cycle_multisign(graph_with(4, e01="-"), (0, 2, 1, 3)) == T("+")


@pytest.mark.parametrize("cycle", [(0, 1), (0, 1, 1), (0, 1, 5)])
def test_cycle_multisign_errors(cycle):
    g = gen_constant(5, 1, T("+"))
    with pytest.raises((CycleError, VertexError)):
        cycle_multisign(g, cycle)


def test_triangle_examples():
    assert triangle_multisign(gen_constant(6, 1, T("-")), 1, 3, 5) == T("-")
    g = graph_with(4, e01="-")
    assert triangle_multisign(g, 0, 1, 2) == T("-")
    assert triangle_multisign(g, 0, 2, 3) == T("+")
    with pytest.raises(VertexError):
        triangle_multisign(g, 0, 0, 1)


@given(graphs_with_cycle())
def test_cycle_multisign_rotation_reflection_invariant(gc):
    g, cycle = gc
    value = cycle_multisign(g, cycle)
    k = len(cycle)
    for seq in (cycle, cycle[::-1]):
        for r in range(k):
            assert cycle_multisign(g, seq[r:] + seq[:r]) == value


@given(graphs(), st.data())
def test_triangle_agrees_with_cycle_in_all_orders(g, data):
    a, b, c = data.draw(st.permutations(range(g.n)))[:3]
    value = cycle_multisign(g, (a, b, c))
    for order in [(a, b, c), (a, c, b), (b, a, c), (b, c, a), (c, a, b), (c, b, a)]:
        assert triangle_multisign(g, *order) == value


@given(st.integers(3, 9), st.integers(1, 5), st.data())
def test_constant_graph_cycle_is_parity_power(n, m, data):
    g = Multisign(m, data.draw(st.integers(0, (1 << m) - 1)))
    graph = gen_constant(n, m, g)
    k = data.draw(st.integers(3, n))
    assert cycle_multisign(graph, tuple(range(k))) == ms_pow_parity(g, k)


def test_canonical_cycle():
    assert canonical_cycle((3, 1, 4, 2)) == (1, 3, 2, 4)
    assert canonical_cycle((2, 0, 1)) == (0, 1, 2)
    assert canonical_cycle((0, 4, 3, 2, 1)) == (0, 1, 2, 3, 4)
