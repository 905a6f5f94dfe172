from itertools import permutations

import pytest
from hypothesis import strategies as st

from msgraph.core import MultisignedCompleteGraph, ms_from_text


def graph_with(n, m=1, default="+", **overrides):
    """K_n where every edge is ``default`` except ``overrides`` like ``e01="-"``."""
    signs = {}
    for key, text in overrides.items():
        u, v = int(key[1]), int(key[2])
        signs[(min(u, v), max(u, v))] = ms_from_text(text).bits
    base = ms_from_text(default * m if len(default) == 1 else default).bits
    return MultisignedCompleteGraph.from_function(n, m, lambda u, v: signs.get((u, v), base))


def naive_hamiltonian_signs(graph):
    """Every Hamiltonian cycle as a set of undirected edges, with its multisign.

    Deduplicates by edge set instead of by canonical vertex order, so it is
    independent of the enumeration order used by the library.
    """
    seen = {}
    n = graph.n
    for perm in permutations(range(n)):
        edges = frozenset(frozenset((perm[i], perm[(i + 1) % n])) for i in range(n))
        if edges in seen:
            continue
        acc = 0
        for e in edges:
            u, v = sorted(e)
            acc ^= graph.bits(u, v)
        seen[edges] = acc
    return seen


@st.composite
def graphs(draw, nmin=3, nmax=7, mmax=4):
    n = draw(st.integers(nmin, nmax))
    m = draw(st.integers(1, mmax))
    edges = draw(
        st.lists(st.integers(0, (1 << m) - 1), min_size=n * (n - 1) // 2, max_size=n * (n - 1) // 2)
    )
    return MultisignedCompleteGraph(n, m, tuple(edges))


@st.composite
def graphs_with_cycle(draw, nmin=3, nmax=7, mmax=4, hamiltonian=False):
    g = draw(graphs(nmin=nmin, nmax=nmax, mmax=mmax))
    perm = draw(st.permutations(range(g.n)))
    k = g.n if hamiltonian else draw(st.integers(3, g.n))
    return g, tuple(perm[:k])


@pytest.fixture
def k4_one_negative():
    return graph_with(4, e01="-")


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
