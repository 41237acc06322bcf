"""Signed multigraphs: immutable edge lists with stable integer edge ids.

A signed graph here is a loopless multigraph whose edges each carry a sign
from {+1, -1}.  Vertices are the dense ids 0..n-1 and the position of an
edge in the ``edges`` tuple is its id, so deletions and derived
constructions (line graphs, block subgraphs) are deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Mapping, NamedTuple, Sequence


class Edge(NamedTuple):
    u: int
    v: int
    sign: int


@dataclass(frozen=True)
class SignedGraph:
    """Immutable signed multigraph on vertices 0..n-1."""

    n: int
    edges: tuple[Edge, ...] = ()

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be nonnegative")
        for i, e in enumerate(self.edges):
            if not (0 <= e.u < self.n and 0 <= e.v < self.n):
                raise ValueError(f"edge {i}: endpoint out of range: {e}")
            if e.u == e.v:
                raise ValueError(f"edge {i}: loops are not allowed: {e}")
            if e.sign not in (1, -1):
                raise ValueError(f"edge {i}: sign must be +1 or -1: {e}")

    # -- basic queries ----------------------------------------------------

    @property
    def vertices(self) -> range:
        return range(self.n)

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency(self) -> tuple[tuple[tuple[int, int, int], ...], ...]:
        """Per vertex: tuple of (neighbor, sign, edge id), in edge-id order."""
        adj: list[list[tuple[int, int, int]]] = [[] for _ in range(self.n)]
        for eid, (u, v, s) in enumerate(self.edges):
            adj[u].append((v, s, eid))
            adj[v].append((u, s, eid))
        return tuple(tuple(a) for a in adj)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        degs = [0] * self.n
        for u, v, _ in self.edges:
            degs[u] += 1
            degs[v] += 1
        return tuple(degs)

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return self.degrees[v]

    @property
    def max_degree(self) -> int:
        return max(self.degrees, default=0)

    @property
    def min_degree(self) -> int:
        return min(self.degrees, default=0)

    def multiplicity(self, u: int, v: int) -> int:
        self._check_vertex(u)
        self._check_vertex(v)
        return sum(1 for e in self.edges if {e.u, e.v} == {u, v})

    @cached_property
    def pair_multiplicities(self) -> dict[tuple[int, int], int]:
        mult: dict[tuple[int, int], int] = {}
        for u, v, _ in self.edges:
            key = (u, v) if u < v else (v, u)
            mult[key] = mult.get(key, 0) + 1
        return mult

    @property
    def max_multiplicity(self) -> int:
        return max(self.pair_multiplicities.values(), default=0)

    def edges_between(self, u: int, v: int) -> tuple[int, ...]:
        """Edge ids joining u and v."""
        return tuple(eid for nbr, _, eid in self.adjacency[u] if nbr == v)

    def positive_neighbors(self, v: int) -> frozenset[int]:
        return frozenset(u for u, s, _ in self.adjacency[v] if s == 1)

    def negative_neighbors(self, v: int) -> frozenset[int]:
        return frozenset(u for u, s, _ in self.adjacency[v] if s == -1)

    def is_connected(self) -> bool:
        if self.n <= 1:
            return True
        seen = {0}
        stack = [0]
        while stack:
            v = stack.pop()
            for u, _, _ in self.adjacency[v]:
                if u not in seen:
                    seen.add(u)
                    stack.append(u)
        return len(seen) == self.n

    def components(self) -> list[frozenset[int]]:
        seen: set[int] = set()
        comps = []
        for start in self.vertices:
            if start in seen:
                continue
            comp = {start}
            stack = [start]
            while stack:
                v = stack.pop()
                for u, _, _ in self.adjacency[v]:
                    if u not in comp:
                        comp.add(u)
                        stack.append(u)
            seen |= comp
            comps.append(frozenset(comp))
        return comps

    # -- sign algebra ------------------------------------------------------

    def switch(self, x: Iterable[int]) -> "SignedGraph":
        """Reverse the sign of every edge with exactly one end in x."""
        xs = frozenset(x)
        for v in xs:
            self._check_vertex(v)
        new_edges = tuple(
            Edge(u, v, -s if (u in xs) != (v in xs) else s)
            for u, v, s in self.edges
        )
        return SignedGraph(self.n, new_edges)

    def negate(self) -> "SignedGraph":
        return SignedGraph(self.n, tuple(Edge(u, v, -s) for u, v, s in self.edges))

    def sign_product(self, edge_ids: Iterable[int]) -> int:
        prod = 1
        for eid in edge_ids:
            self._check_edge(eid)
            prod *= self.edges[eid].sign
        return prod

    def is_all_positive(self) -> bool:
        return all(s == 1 for _, _, s in self.edges)

    # -- deletion and subgraphs ---------------------------------------------

    def delete_edge(self, eid: int) -> "SignedGraph":
        self._check_edge(eid)
        return SignedGraph(self.n, self.edges[:eid] + self.edges[eid + 1:])

    def delete_vertex(self, v: int) -> tuple["SignedGraph", dict[int, int]]:
        """Delete v; returns the re-indexed graph and the old->new id map."""
        self._check_vertex(v)
        keep = [w for w in self.vertices if w != v]
        return self.induced(keep)

    def induced(self, vertices: Iterable[int]) -> tuple["SignedGraph", dict[int, int]]:
        """Induced subgraph on the given vertices, re-indexed densely.

        Returns the subgraph and the old->new id map; surviving edges keep
        their relative order.
        """
        keep = sorted(set(vertices))
        for v in keep:
            self._check_vertex(v)
        idmap = {old: new for new, old in enumerate(keep)}
        new_edges = tuple(
            Edge(idmap[u], idmap[v], s)
            for u, v, s in self.edges
            if u in idmap and v in idmap
        )
        return SignedGraph(len(keep), new_edges), idmap

    def simple_support(self) -> "SignedGraph":
        """Underlying simple graph (parallel edges collapsed, all-positive)."""
        seen: set[tuple[int, int]] = set()
        edges = []
        for u, v, _ in self.edges:
            key = (u, v) if u < v else (v, u)
            if key not in seen:
                seen.add(key)
                edges.append(Edge(key[0], key[1], 1))
        return SignedGraph(self.n, tuple(edges))

    # -- internals -----------------------------------------------------------

    def _check_vertex(self, v: int) -> None:
        if not (isinstance(v, int) and 0 <= v < self.n):
            raise ValueError(f"invalid vertex id: {v!r}")

    def _check_edge(self, eid: int) -> None:
        if not (isinstance(eid, int) and 0 <= eid < len(self.edges)):
            raise ValueError(f"invalid edge id: {eid!r}")

    def __repr__(self) -> str:  # compact, deterministic
        es = ",".join(f"({u},{v},{'+' if s == 1 else '-'})" for u, v, s in self.edges)
        return f"SignedGraph(n={self.n}, edges=[{es}])"


def build_graph(vertex_count: int, edges: Iterable[tuple[int, int, int]]) -> SignedGraph:
    """Build a signed graph from (u, v, sign) triples, keeping edge order."""
    return SignedGraph(vertex_count, tuple(Edge(u, v, s) for u, v, s in edges))


def double(h: SignedGraph) -> SignedGraph:
    """Replace every edge of a simple all-positive graph by a +/- parallel pair."""
    if h.max_multiplicity > 1:
        raise ValueError("doubling requires a simple graph")
    if not h.is_all_positive():
        raise ValueError("doubling requires an all-positive graph")
    edges = []
    for u, v, _ in h.edges:
        edges.append(Edge(u, v, 1))
        edges.append(Edge(u, v, -1))
    return SignedGraph(h.n, tuple(edges))


# -- convenient constructors (used heavily by tests and suites) --------------

def complete(n: int, sign: int = 1) -> SignedGraph:
    return SignedGraph(
        n, tuple(Edge(i, j, sign) for i in range(n) for j in range(i + 1, n))
    )


def cycle(signs: Sequence[int]) -> SignedGraph:
    """Cycle v0 - v1 - ... - v(n-1) - v0 with the given edge signs."""
    n = len(signs)
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return SignedGraph(
        n, tuple(Edge(i, (i + 1) % n, signs[i]) for i in range(n))
    )


def path(signs: Sequence[int]) -> SignedGraph:
    """Path on len(signs)+1 vertices with the given edge signs."""
    return SignedGraph(
        len(signs) + 1, tuple(Edge(i, i + 1, s) for i, s in enumerate(signs))
    )
