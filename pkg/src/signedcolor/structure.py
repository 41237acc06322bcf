"""Structural analysis of signed graphs.

Balance and antibalance with explicit witnesses, switching equivalence,
biconnected (block) decomposition, and the five-way brick taxonomy behind
the Brooks-type and degree-choosability characterizations.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .graph import Edge, SignedGraph


@dataclass(frozen=True)
class BalanceResult:
    """Outcome of a balance test.

    If balanced, ``parts`` is the partition (X, Y) such that an edge is
    negative exactly when it joins X to Y.  Otherwise ``cycle`` is an edge-id
    sequence of a cycle with negative sign product.
    """

    balanced: bool
    parts: tuple[frozenset[int], frozenset[int]] | None = None
    cycle: tuple[int, ...] | None = None

    def __bool__(self) -> bool:
        return self.balanced


def is_balanced(g: SignedGraph) -> BalanceResult:
    """Balance test by spanning-forest switching normalization.

    A BFS forest is grown in edge-id order; each vertex gets a side so that
    tree edges join equal sides iff positive.  The graph is balanced iff
    every non-tree edge is consistent with the sides; the first inconsistent
    edge closes an unbalanced cycle through the forest.
    """
    side = [0] * g.n  # 0 = unseen, else +1/-1
    parent: list[tuple[int, int] | None] = [None] * g.n  # (parent vertex, edge id)
    for root in g.vertices:
        if side[root]:
            continue
        side[root] = 1  # forest roots go to X
        queue = [root]
        while queue:
            v = queue.pop(0)
            for u, s, eid in g.adjacency[v]:
                if not side[u]:
                    side[u] = side[v] * s
                    parent[u] = (v, eid)
                    queue.append(u)
    for eid, (u, v, s) in enumerate(g.edges):
        if s != side[u] * side[v]:
            return BalanceResult(False, cycle=_forest_cycle(g, parent, u, v, eid))
    x = frozenset(v for v in g.vertices if side[v] == 1)
    y = frozenset(g.vertices) - x
    return BalanceResult(True, parts=(x, y))


def _forest_cycle(g, parent, u, v, closing_eid) -> tuple[int, ...]:
    """Edge ids of the cycle formed by the forest path u..v plus one edge."""
    def root_path(w):
        path = [w]
        edges = []
        while parent[w] is not None:
            w, eid = parent[w]
            path.append(w)
            edges.append(eid)
        return path, edges

    pu, eu = root_path(u)
    pv, ev = root_path(v)
    iu = {w: i for i, w in enumerate(pu)}
    meet_idx = next(i for i, w in enumerate(pv) if w in iu)
    meet = pv[meet_idx]
    cycle = eu[: iu[meet]] + ev[:meet_idx][::-1] + [closing_eid]
    return tuple(cycle)


def is_antibalanced(g: SignedGraph) -> BalanceResult:
    """A signed graph is antibalanced iff its negation is balanced.

    When true, the parts satisfy: an edge is positive iff it joins the parts.
    A cycle witness violates antibalance (even cycle with negative product or
    odd cycle with positive product).
    """
    return is_balanced(g.negate())


def is_switching_equivalent(
    g: SignedGraph, h: SignedGraph
) -> tuple[bool, frozenset[int] | None]:
    """Decide whether h = g/X for some X; returns (verdict, X or None).

    Both graphs must have the same underlying graph with identical edge ids.
    The per-edge sign ratio defines a signed graph that is balanced exactly
    when the two are switching equivalent; its X-part is a valid switch set.
    """
    if g.n != h.n or len(g.edges) != len(h.edges):
        raise ValueError("underlying graphs differ")
    ratio_edges = []
    for eg, eh in zip(g.edges, h.edges):
        if {eg.u, eg.v} != {eh.u, eh.v}:
            raise ValueError("underlying graphs differ (edge endpoints)")
        ratio_edges.append(Edge(eg.u, eg.v, eg.sign * eh.sign))
    res = is_balanced(SignedGraph(g.n, tuple(ratio_edges)))
    if not res.balanced:
        return False, None
    # ratio edge is -1 exactly on the coboundary of either part
    return True, res.parts[1]


@dataclass(frozen=True)
class Block:
    """One block of a decomposition, re-indexed densely.

    ``vertices[i]`` is the original id of the block's vertex i;
    ``edge_ids[j]`` the original id of its edge j.
    """

    graph: SignedGraph
    vertices: tuple[int, ...]
    edge_ids: tuple[int, ...]


@dataclass(frozen=True)
class BlockDecomposition:
    blocks: tuple[Block, ...]
    cut_vertices: frozenset[int]

    def blocks_at(self, v: int) -> tuple[int, ...]:
        """Indices of the blocks containing vertex v."""
        return tuple(
            i for i, b in enumerate(self.blocks) if v in b.vertices
        )


def blocks(g: SignedGraph) -> BlockDecomposition:
    """Biconnected decomposition of the underlying multigraph.

    A parallel pair is 2-connected and forms a single block; isolated
    vertices are single-vertex blocks.
    """
    disc = [0] * g.n  # 0 = unvisited, else 1-based discovery time
    low = [0] * g.n
    stack: list[int] = []  # edge ids
    out: list[tuple[int, ...]] = []
    timer = 1

    def dfs(root: int) -> None:
        nonlocal timer
        # iterative DFS to keep edge-stack semantics of the classic algorithm
        disc[root] = low[root] = timer
        timer += 1
        work: list[tuple[int, int, int]] = [(root, -1, 0)]  # vertex, entry eid, adj pos
        while work:
            v, entry_eid, pos = work.pop()
            adj = g.adjacency[v]
            advanced = False
            while pos < len(adj):
                u, _, eid = adj[pos]
                pos += 1
                if eid == entry_eid:
                    continue
                if not disc[u]:
                    stack.append(eid)
                    disc[u] = low[u] = timer
                    timer += 1
                    work.append((v, entry_eid, pos))
                    work.append((u, eid, 0))
                    advanced = True
                    break
                if disc[u] < disc[v]:  # back edge (also covers parallels)
                    stack.append(eid)
                    low[v] = min(low[v], disc[u])
            if advanced:
                continue
            # v finished; propagate low to parent and maybe pop a block
            if entry_eid >= 0:
                e = g.edges[entry_eid]
                p = e.u if e.v == v else e.v
                low[p] = min(low[p], low[v])
                if low[v] >= disc[p]:
                    cut = stack.index(entry_eid)
                    comp = stack[cut:]
                    del stack[cut:]
                    out.append(tuple(sorted(comp)))

    for v in g.vertices:
        if not disc[v] and g.degrees[v] == 0:
            out.append(())
            disc[v] = timer
            timer += 1
        elif not disc[v]:
            dfs(v)

    block_list = []
    isolated = iter(v for v in g.vertices if g.degrees[v] == 0)
    for eids in out:
        if eids:
            verts = sorted({w for eid in eids for w in g.edges[eid][:2]})
        else:
            verts = [next(isolated)]
        idmap = {old: new for new, old in enumerate(verts)}
        sub = SignedGraph(
            len(verts),
            tuple(Edge(idmap[g.edges[e].u], idmap[g.edges[e].v], g.edges[e].sign)
                  for e in eids),
        )
        block_list.append(Block(sub, tuple(verts), eids))
    block_list.sort(key=lambda b: b.vertices)
    counts: dict[int, int] = {}
    for b in block_list:
        for v in b.vertices:
            counts[v] = counts.get(v, 0) + 1
    cut = frozenset(v for v, c in counts.items() if c >= 2)
    return BlockDecomposition(tuple(block_list), cut)


class BrickKind(Enum):
    BALANCED_COMPLETE = "balanced complete"
    BALANCED_ODD_CYCLE = "balanced odd cycle"
    UNBALANCED_EVEN_CYCLE = "unbalanced even cycle"
    DOUBLED_COMPLETE = "doubled complete"
    DOUBLED_ODD_CYCLE = "doubled odd cycle"
    NOT_A_BRICK = "not a brick"


@dataclass(frozen=True)
class BrickClass:
    kind: BrickKind
    order: int | None = None
    reason: str | None = None

    @property
    def is_brick(self) -> bool:
        return self.kind is not BrickKind.NOT_A_BRICK

    @property
    def regular_degree(self) -> int | None:
        """Uniform degree of the brick shape, or None for non-bricks."""
        if self.kind is BrickKind.BALANCED_COMPLETE:
            return self.order - 1
        if self.kind in (BrickKind.BALANCED_ODD_CYCLE, BrickKind.UNBALANCED_EVEN_CYCLE):
            return 2
        if self.kind is BrickKind.DOUBLED_COMPLETE:
            return 2 * self.order - 2
        if self.kind is BrickKind.DOUBLED_ODD_CYCLE:
            return 4
        return None


def _support_shape(g: SignedGraph) -> str:
    """'complete', 'cycle', or 'other' for the simple support."""
    n = g.n
    pairs = set(g.pair_multiplicities)
    if len(pairs) == n * (n - 1) // 2:
        return "complete"
    support_degs = [0] * n
    for u, v in pairs:
        support_degs[u] += 1
        support_degs[v] += 1
    if n >= 3 and all(d == 2 for d in support_degs):
        return "cycle"  # connected and 2-regular simple support
    return "other"


def classify_brick(b: SignedGraph) -> BrickClass:
    """Classify a block against the five brick shapes.

    Ties break toward the complete classes: a balanced triangle is reported
    as a balanced complete graph and a single doubled pair as a doubled
    complete graph on 2 vertices.  Raises ValueError if the input is not
    itself a single block.
    """
    if not b.is_connected():
        raise ValueError("input must be connected")
    decomp = blocks(b)
    if len(decomp.blocks) != 1:
        raise ValueError("input must be a single block")
    n = b.n
    if n == 1:
        return BrickClass(BrickKind.BALANCED_COMPLETE, 1)
    mults = b.pair_multiplicities
    if b.max_multiplicity == 1:
        shape = _support_shape(b)
        if shape == "complete":
            if is_balanced(b).balanced:
                return BrickClass(BrickKind.BALANCED_COMPLETE, n)
            return BrickClass(
                BrickKind.NOT_A_BRICK, reason="unbalanced complete graph"
            )
        if shape == "cycle":
            prod = b.sign_product(range(b.m))
            if n % 2 == 1 and prod == 1:
                return BrickClass(BrickKind.BALANCED_ODD_CYCLE, n)
            if n % 2 == 0 and prod == -1:
                return BrickClass(BrickKind.UNBALANCED_EVEN_CYCLE, n)
            parity = "odd" if n % 2 else "even"
            kind = "balanced" if prod == 1 else "unbalanced"
            return BrickClass(
                BrickKind.NOT_A_BRICK, reason=f"{kind} {parity} cycle"
            )
        return BrickClass(
            BrickKind.NOT_A_BRICK, reason="simple block, neither complete nor a cycle"
        )
    # some multiplicity >= 2: bricks require every pair doubled with signs +,-
    for (u, v), mult in mults.items():
        eids = b.edges_between(u, v)
        if mult != 2 or sorted(b.edges[e].sign for e in eids) != [-1, 1]:
            return BrickClass(
                BrickKind.NOT_A_BRICK,
                reason="parallel edges not a single differently-signed pair",
            )
    shape = _support_shape(b)
    if shape == "complete":
        return BrickClass(BrickKind.DOUBLED_COMPLETE, n)
    if shape == "cycle":
        if n % 2 == 1:
            return BrickClass(BrickKind.DOUBLED_ODD_CYCLE, n)
        return BrickClass(BrickKind.NOT_A_BRICK, reason="doubled even cycle")
    return BrickClass(
        BrickKind.NOT_A_BRICK, reason="doubled support neither complete nor a cycle"
    )


def all_blocks_are_bricks(g: SignedGraph) -> tuple[bool, tuple[BrickClass, ...]]:
    """Classify every block; true iff none fails. Requires connected input."""
    if not g.is_connected():
        raise ValueError("input must be connected")
    classes = tuple(classify_brick(b.graph) for b in blocks(g).blocks)
    return all(c.is_brick for c in classes), classes
