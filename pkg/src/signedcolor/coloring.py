"""Exact coloring of signed graphs.

A coloring assigns an integer to every vertex so that across each edge e
between v and w we have phi(v) != sign(e) * phi(w); a differently-signed
parallel pair therefore forces |phi(v)| != |phi(w)|.  The signed chromatic
number is the least k admitting a coloring inside the symmetric palette
Z_k, where Z_{2h} = {+-1, ..., +-h} and Z_{2h+1} additionally contains 0.
"""

from __future__ import annotations

from typing import Iterable, Mapping, Sequence

from .graph import SignedGraph


def zk(k: int) -> frozenset[int]:
    """The palette Z_k."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    h = k // 2
    colors = set(range(1, h + 1)) | set(range(-h, 0))
    if k % 2 == 1:
        colors.add(0)
    return frozenset(colors)


def is_symmetric(colors: Iterable[int]) -> bool:
    cs = set(colors)
    return cs == {-c for c in cs}


def color_key(c: int) -> tuple[int, int]:
    """Sort key realizing the fixed total order 0 < 1 < -1 < 2 < -2 < ..."""
    return (abs(c), 0 if c >= 0 else 1)


def _color_stream():
    yield 0
    i = 1
    while True:
        yield i
        yield -i
        i += 1


def is_valid_coloring(g: SignedGraph, phi: Mapping[int, int]) -> bool:
    """Check every edge constraint; raises if phi is not total on V(g)."""
    missing = [v for v in g.vertices if v not in phi]
    if missing:
        raise ValueError(f"partial assignment: vertex {missing[0]} uncolored")
    return all(phi[u] != s * phi[v] for u, v, s in g.edges)


# -- orderings ----------------------------------------------------------------

def elimination_ordering(g: SignedGraph) -> tuple[int, ...]:
    """Repeated minimum-degree removal order (ties broken by vertex id)."""
    degs = list(g.degrees)
    alive = set(g.vertices)
    order = []
    while alive:
        v = min(alive, key=lambda w: (degs[w], w))
        order.append(v)
        alive.remove(v)
        for u, _, _ in g.adjacency[v]:
            if u in alive:
                degs[u] -= 1
    return tuple(order)


def coloring_number(g: SignedGraph) -> int:
    """Degeneracy plus one: max over subgraphs of the minimum degree, plus 1."""
    if g.n == 0:
        return 0
    degs = list(g.degrees)
    alive = set(g.vertices)
    worst = 0
    while alive:
        v = min(alive, key=lambda w: (degs[w], w))
        worst = max(worst, degs[v])
        alive.remove(v)
        for u, _, _ in g.adjacency[v]:
            if u in alive:
                degs[u] -= 1
    return worst + 1


# -- backtracking engine -------------------------------------------------------

def _constraints(g: SignedGraph) -> tuple[tuple[tuple[int, int], ...], ...]:
    """Per vertex, deduplicated (neighbor, sign) pairs."""
    out = []
    for v in g.vertices:
        seen = set()
        for u, s, _ in g.adjacency[v]:
            seen.add((u, s))
        out.append(tuple(sorted(seen)))
    return tuple(out)


def _search(
    g: SignedGraph,
    domains: Sequence[Sequence[int]],
    restrict_first_nonneg: bool = False,
) -> dict[int, int] | None:
    """Backtracking with forward checking over a static vertex order.

    Vertices are colored in reversed elimination order; assigning a color c
    at v deletes sign*c from each later neighbor's domain.  Colors are tried
    in the fixed total order 0 < 1 < -1 < 2 < -2 < ...
    """
    n = g.n
    if n == 0:
        return {}
    order = elimination_ordering(g)[::-1]
    pos = [0] * n
    for i, v in enumerate(order):
        pos[v] = i
    cons = _constraints(g)
    doms = [tuple(sorted(domains[v], key=color_key)) for v in g.vertices]
    color = [0] * n

    def extend(i: int, doms: list) -> bool:
        if i == n:
            return True
        v = order[i]
        for c in doms[v]:
            if restrict_first_nonneg and i == 0 and c < 0:
                continue
            nxt = list(doms)
            ok = True
            for u, s in cons[v]:
                if pos[u] > i:
                    filtered = tuple(x for x in nxt[u] if x != s * c)
                    if not filtered:
                        ok = False
                        break
                    nxt[u] = filtered
            if not ok:
                continue
            color[v] = c
            if extend(i + 1, nxt):
                return True
        return False

    if extend(0, doms):
        return {v: color[v] for v in g.vertices}
    return None


def solve_with_colorset(g: SignedGraph, colors: Iterable[int]) -> dict[int, int] | None:
    """Exhaustive search for a coloring with image inside the given set.

    Returns a valid coloring or None if none exists.  When the color set is
    symmetric, the first branching vertex is restricted to nonnegative
    colors (global negation maps colorings to colorings); this reduction is
    deliberately absent from the list-coloring solver.
    """
    cs = frozenset(colors)
    return _search(g, [cs] * g.n if g.n else [], restrict_first_nonneg=is_symmetric(cs))


def signed_chromatic_number(g: SignedGraph) -> int:
    """Least k such that g has a coloring into Z_k (at most max degree + 1)."""
    for k in range(0, g.max_degree + 2):
        if solve_with_colorset(g, zk(k)) is not None:
            return k
    raise AssertionError("unreachable: every graph is (max degree + 1)-colorable")


def greedy_coloring(
    g: SignedGraph, ordering: Sequence[int] | None = None
) -> dict[int, int]:
    """Sequential coloring from Z_col(g), first admissible color per vertex.

    With the default (reversed elimination) ordering the image always lies
    in Z_col(g).  For other orderings the palette is extended along the
    canonical color order when exhausted, so the output is always valid.
    """
    if ordering is None:
        ordering = elimination_ordering(g)[::-1]
    if sorted(ordering) != list(g.vertices):
        raise ValueError("ordering must be a permutation of the vertices")
    base = sorted(zk(coloring_number(g)), key=color_key)
    cons = _constraints(g)
    phi: dict[int, int] = {}
    for v in ordering:
        forbidden = {s * phi[u] for u, s in cons[v] if u in phi}
        choice = next((c for c in base if c not in forbidden), None)
        if choice is None:
            base_set = set(base)
            choice = next(
                c for c in _color_stream()
                if c not in base_set and c not in forbidden
            )
        phi[v] = choice
    return phi


def underlying_chromatic_number(g: SignedGraph) -> int:
    """Ordinary chromatic number of the simple support."""
    support = g.simple_support()
    for k in range(0, support.n + 1):
        if _search(support, [range(k)] * support.n if support.n else []) is not None:
            return k
    raise AssertionError("unreachable: n colors always suffice")


def is_k_critical(g: SignedGraph, k: int) -> bool:
    """chi = k, and every single-edge and single-vertex deletion has chi < k.

    By monotonicity this covers all proper subgraphs.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    if signed_chromatic_number(g) != k:
        return False
    smaller = zk(k - 1)
    for eid in range(g.m):
        if solve_with_colorset(g.delete_edge(eid), smaller) is None:
            return False
    for v in g.vertices:
        sub, _ = g.delete_vertex(v)
        if solve_with_colorset(sub, smaller) is None:
            return False
    return True
