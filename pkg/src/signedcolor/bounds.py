"""Criticality bounds and the signed line graph.

Everything here is exact: the Gallai-style deficiency and the edge-count
bound for list-critical graphs are evaluated in rational arithmetic, never
floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .graph import Edge, SignedGraph
from .lists import solve_list_coloring
from .structure import BrickClass, all_blocks_are_bricks, blocks, classify_brick, is_balanced


@dataclass(frozen=True)
class GallaiMembership:
    """Membership in the Gallai class for a given k, with per-condition flags.

    The class consists of the connected simple signed graphs with maximum
    degree at most k-1 whose blocks are all bricks, excluding the balanced
    complete graph of order k.
    """

    member: bool
    connected: bool
    simple: bool
    degree_ok: bool
    blocks_bricks: bool
    not_balanced_complete_k: bool


def gallai_class_member(t: SignedGraph, k: int) -> GallaiMembership:
    if k < 4:
        raise ValueError("k must be at least 4")
    connected = t.is_connected()
    simple = t.max_multiplicity <= 1
    degree_ok = t.max_degree <= k - 1
    bricks_ok = all_blocks_are_bricks(t)[0] if connected else False
    is_balanced_kk = (
        t.n == k
        and simple
        and len(t.pair_multiplicities) == k * (k - 1) // 2
        and is_balanced(t).balanced
    )
    member = connected and simple and degree_ok and bricks_ok and not is_balanced_kk
    return GallaiMembership(
        member, connected, simple, degree_ok, bricks_ok, not is_balanced_kk
    )


def gallai_deficiency(t: SignedGraph, k: int) -> Fraction:
    """m(T) = (k - 2 + 2/(k-1)) |V| - 2 |E|, exactly."""
    if k < 4:
        raise ValueError("k must be at least 4")
    r = Fraction(k - 2) + Fraction(2, k - 1)
    return r * t.n - 2 * t.m


def edge_bound_check(g: SignedGraph, k: int) -> tuple[bool, int, Fraction]:
    """Compare 2|E| against (k - 1 + (k-3)/(k^2-3)) |V|, exactly.

    Intended for simple k-list-critical graphs other than the balanced
    complete graph of order k; k-criticality is the certificate the
    verification suites use, since it implies k-list-criticality.
    """
    if k < 4:
        raise ValueError("k must be at least 4")
    lhs = 2 * g.m
    rhs = (Fraction(k - 1) + Fraction(k - 3, k * k - 3)) * g.n
    return lhs >= rhs, lhs, rhs


def low_vertex_subgraph(
    g: SignedGraph, lists
) -> tuple[frozenset[int], frozenset[int], tuple[SignedGraph, dict[int, int]]]:
    """Split V into H = {v : d(v) > |L(v)|} and F = V - H; returns G[F] too."""
    missing = [v for v in g.vertices if v not in lists]
    if missing:
        raise ValueError(f"partial list assignment: vertex {missing[0]} has no list")
    h = frozenset(v for v in g.vertices if g.degrees[v] > len(lists[v]))
    f = frozenset(g.vertices) - h
    return h, f, g.induced(f)


def is_list_critical(g: SignedGraph, lists) -> bool:
    """No L-coloring, but every single-edge or single-vertex deletion has one."""
    if solve_list_coloring(g, lists) is not None:
        return False
    for eid in range(g.m):
        if solve_list_coloring(g.delete_edge(eid), lists) is None:
            return False
    for v in g.vertices:
        sub, idmap = g.delete_vertex(v)
        sub_lists = {new: lists[old] for old, new in idmap.items()}
        if solve_list_coloring(sub, sub_lists) is None:
            return False
    return True


@dataclass(frozen=True)
class ComponentReport:
    vertices: tuple[int, ...]
    degrees_match_lists: bool
    blocks_bricks: bool
    brick_classes: tuple[BrickClass, ...]


@dataclass(frozen=True)
class ListCriticalReport:
    """Structure of a list-critical graph around its low-degree vertices.

    For each component X of G[F]: degrees equal list sizes on X and every
    block of G[X] is a brick.  When the lists all have size k-1, either H
    is nonempty or the whole graph is a brick, and a complete subgraph of
    order k inside G[F] forces G to be the balanced complete graph K_k.
    """

    h_vertices: frozenset[int]
    f_vertices: frozenset[int]
    components: tuple[ComponentReport, ...]
    uniform_list_size: int | None
    h_nonempty_or_brick: bool | None
    clique_forces_balanced_complete: bool | None

    @property
    def degrees_ok(self) -> bool:
        return all(c.degrees_match_lists for c in self.components)

    @property
    def blocks_ok(self) -> bool:
        return all(c.blocks_bricks for c in self.components)

    @property
    def all_hold(self) -> bool:
        extras = [self.h_nonempty_or_brick, self.clique_forces_balanced_complete]
        return (
            self.degrees_ok
            and self.blocks_ok
            and all(x is not False for x in extras)
        )


def _is_whole_graph_brick(g: SignedGraph) -> bool:
    if not g.is_connected():
        return False
    decomp = blocks(g)
    return len(decomp.blocks) == 1 and classify_brick(g).is_brick


def _contains_clique(g: SignedGraph, k: int) -> bool:
    """Does the simple support contain a complete subgraph of order k?"""
    if k <= 1:
        return g.n >= k
    pairs = set(g.pair_multiplicities)
    for combo in combinations(range(g.n), k):
        if all(
            (u, v) in pairs
            for u, v in combinations(combo, 2)
        ):
            return True
    return False


def check_list_critical_structure(g: SignedGraph, lists) -> ListCriticalReport:
    """Evaluate the low-vertex structure of a list-critical graph.

    Raises if the input is not actually list-critical.
    """
    if not is_list_critical(g, lists):
        raise ValueError("input is not list-critical")
    h, f, (gf, idmap) = low_vertex_subgraph(g, lists)
    back = {new: old for old, new in idmap.items()}
    comps = []
    for comp in gf.components():
        orig = tuple(sorted(back[w] for w in comp))
        sub, _ = g.induced(orig)
        degrees_ok = all(g.degrees[v] == len(lists[v]) for v in orig)
        bricks_ok, classes = all_blocks_are_bricks(sub)
        comps.append(ComponentReport(orig, degrees_ok, bricks_ok, classes))

    sizes = {len(lists[v]) for v in g.vertices}
    uniform = sizes.pop() if len(sizes) == 1 and g.n else None
    h_or_brick: bool | None = None
    clique_flag: bool | None = None
    if uniform is not None:
        k = uniform + 1
        h_or_brick = bool(h) or _is_whole_graph_brick(g)
        if f and _contains_clique(g.induced(f)[0], k):
            clique_flag = (
                g.n == k
                and g.max_multiplicity <= 1
                and len(g.pair_multiplicities) == k * (k - 1) // 2
                and is_balanced(g).balanced
            )
        else:
            clique_flag = True
    return ListCriticalReport(
        h, f, tuple(comps), uniform, h_or_brick, clique_flag
    )


def signed_line_graph(g: SignedGraph) -> SignedGraph:
    """Signed simple graph on the edges of g: two edges sharing an endpoint
    are adjacent, with sign the product of their signs.

    Parallel edges share both endpoints but still contribute a single line
    edge, since the line graph is simple.  The result is always balanced
    with parts the positive and negative edges of g.
    """
    line_edges = []
    for i, j in combinations(range(g.m), 2):
        e, f = g.edges[i], g.edges[j]
        if {e.u, e.v} & {f.u, f.v}:
            line_edges.append(Edge(i, j, e.sign * f.sign))
    return SignedGraph(g.m, tuple(line_edges))
