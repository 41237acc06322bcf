"""Shared test helpers: brute-force oracles independent of the solvers.

The oracles enumerate colorings by raw product over palettes and check edge
constraints directly, so solver results can be validated against a second,
independent route.
"""

from itertools import product

import pytest
from hypothesis import strategies as st

from signedcolor import SignedGraph, build_graph, zk


def brute_valid(g: SignedGraph, phi) -> bool:
    return all(phi[u] != s * phi[v] for u, v, s in g.edges)


def brute_colorable(g: SignedGraph, palette) -> bool:
    """Exhaustive product search with a constant palette."""
    palette = sorted(palette)
    for combo in product(palette, repeat=g.n):
        if brute_valid(g, combo):
            return True
    return g.n == 0


def brute_list_colorable(g: SignedGraph, lists) -> bool:
    domains = [sorted(lists[v]) for v in g.vertices]
    for combo in product(*domains):
        if brute_valid(g, combo):
            return True
    return g.n == 0


def brute_chi(g: SignedGraph) -> int:
    for k in range(0, 2 * g.n + 2):
        if brute_colorable(g, zk(k)):
            return k
    raise AssertionError("no k found")


@st.composite
def signed_graphs(draw, max_n=5, max_extra_edges=8):
    """Random small signed multigraphs (connected not guaranteed)."""
    n = draw(st.integers(min_value=1, max_value=max_n))
    edges = []
    if n >= 2:
        k = draw(st.integers(min_value=0, max_value=max_extra_edges))
        for _ in range(k):
            u = draw(st.integers(min_value=0, max_value=n - 1))
            v = draw(st.integers(min_value=0, max_value=n - 1))
            if u == v:
                continue
            s = draw(st.sampled_from([1, -1]))
            edges.append((u, v, s))
    return build_graph(n, edges)


@pytest.fixture
def k1():
    return SignedGraph(1)
