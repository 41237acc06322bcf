"""List coloring of signed graphs and the uncolorable-pair calculus.

An uncolorable pair is a connected signed graph G with lists satisfying
|L(v)| >= d(v) everywhere and no L-coloring.  Such pairs are rigid: lists
are degree-sized, every block is a brick, and the lists follow the sign
structure block by block.  This module provides the list solver, the pair
reduction, structure checks, constructive bad assignments, the
degree-choosability decision, and a brute-force choosability oracle.
"""

from __future__ import annotations

from dataclasses import dataclass

from .coloring import _search, color_key, coloring_number, is_symmetric
from .graph import SignedGraph
from .structure import (
    BrickClass,
    BrickKind,
    all_blocks_are_bricks,
    blocks,
    classify_brick,
    is_balanced,
)

ListAssignment = dict[int, frozenset[int]]


class BudgetExceededError(Exception):
    """Raised when a brute-force enumeration would exceed its size budget."""


def _check_total(g: SignedGraph, lists) -> None:
    missing = [v for v in g.vertices if v not in lists]
    if missing:
        raise ValueError(f"partial list assignment: vertex {missing[0]} has no list")


def solve_list_coloring(g: SignedGraph, lists) -> dict[int, int] | None:
    """Exhaustive search for a coloring with phi(v) in lists[v] for all v."""
    _check_total(g, lists)
    return _search(g, [lists[v] for v in g.vertices])


def reduce_pair(
    g: SignedGraph, lists, v: int, c: int
) -> tuple[SignedGraph, ListAssignment]:
    """Delete a non-separating vertex colored c and prune neighbor lists.

    Positive neighbors of v lose c, negative neighbors lose -c, neighbors
    joined by both signs lose both.  If (g, lists) was an uncolorable pair,
    the result is one again.
    """
    _check_total(g, lists)
    if g.n < 2:
        raise ValueError("reduction needs at least 2 vertices")
    if c not in lists[v]:
        raise ValueError(f"color {c} not in the list of vertex {v}")
    sub, idmap = g.delete_vertex(v)
    if len(sub.components()) != len(g.components()):
        raise ValueError(f"vertex {v} is separating")
    pos = g.positive_neighbors(v)
    neg = g.negative_neighbors(v)
    new_lists: ListAssignment = {}
    for old, new in idmap.items():
        removed = set()
        if old in pos:
            removed.add(c)
        if old in neg:
            removed.add(-c)
        new_lists[new] = frozenset(lists[old]) - removed
    return sub, new_lists


@dataclass(frozen=True)
class UncolorablePair:
    """A solver-certified uncolorable pair."""

    graph: SignedGraph
    lists: ListAssignment


def make_uncolorable_pair(g: SignedGraph, lists) -> UncolorablePair:
    """Validate and certify (g, lists): connected, |L| >= d, and UNSAT."""
    _check_total(g, lists)
    if not g.is_connected():
        raise ValueError("an uncolorable pair must be connected")
    for v in g.vertices:
        if len(lists[v]) < g.degrees[v]:
            raise ValueError(f"list of vertex {v} is smaller than its degree")
    if solve_list_coloring(g, lists) is not None:
        raise ValueError("pair is not actually uncolorable: a coloring exists")
    return UncolorablePair(g, {v: frozenset(lists[v]) for v in g.vertices})


@dataclass(frozen=True)
class BlockCase:
    """Per-block list structure: sign relation along edges plus case shape.

    ``tag`` is "c1" for all-positive blocks (lists constant) and "c2"
    otherwise (lists a symmetric constant, or split as C / -C over the
    balance parts); the two c2 alternatives are reported independently.
    """

    block_index: int
    tag: str
    edge_relation: bool
    constant: frozenset[int] | None
    symmetric_constant: bool
    parts_form: bool

    @property
    def holds(self) -> bool:
        if not self.edge_relation:
            return False
        if self.tag == "c1":
            return self.constant is not None
        return self.symmetric_constant or self.parts_form


@dataclass(frozen=True)
class PairStructureReport:
    degree_lists: bool            # (a) |L(v)| = d(v) everywhere
    edge_shape: bool              # (b) single edge or differently-signed pair
    list_relations: bool          # (c) per-block sign structure of the lists
    even_regularity: bool         # (d) blocks with parallels are even-regular
    blocks_bricks: bool           # (e) every block is a brick
    cases: tuple[BlockCase, ...]
    brick_classes: tuple[BrickClass, ...]

    @property
    def all_hold(self) -> bool:
        return (
            self.degree_lists
            and self.edge_shape
            and self.list_relations
            and self.even_regularity
            and self.blocks_bricks
        )


def _split_block_lists(g: SignedGraph, lists) -> list[ListAssignment]:
    """Derive per-block lists of an uncolorable pair, in block order.

    Cut-vertex lists split into the colors that do not extend into each
    side; on genuine uncolorable pairs the split is a disjoint partition
    sized by the block degrees.
    """
    decomp = blocks(g)
    result: list[ListAssignment | None] = [None] * len(decomp.blocks)
    # pieces carry original-vertex subsets with their current lists
    pieces = [(frozenset(g.vertices), dict(lists))]
    while pieces:
        verts, plists = pieces.pop()
        sub, idmap = g.induced(verts)
        sub_blocks = blocks(sub)
        back = {new: old for old, new in idmap.items()}
        if len(sub_blocks.blocks) == 1:
            b = sub_blocks.blocks[0]
            orig_vertices = tuple(sorted(back[w] for w in b.vertices))
            idx = next(
                i for i, blk in enumerate(decomp.blocks)
                if blk.vertices == orig_vertices
            )
            result[idx] = {v: frozenset(plists[v]) for v in orig_vertices}
            continue
        end_idx = next(
            i for i, blk in enumerate(sub_blocks.blocks)
            if sum(1 for w in blk.vertices if w in sub_blocks.cut_vertices) <= 1
        )
        end = sub_blocks.blocks[end_idx]
        cut_local = next(w for w in end.vertices if w in sub_blocks.cut_vertices)
        cut = back[cut_local]
        side1 = frozenset(back[w] for w in end.vertices)
        side2 = (verts - side1) | {cut}
        stuck = []
        for side in (side1, side2):
            side_sub, side_map = g.induced(side)
            order = sorted(side)  # new id i corresponds to order[i]

            def colors_stuck_at_cut():
                for c in plists[cut]:
                    domains = [
                        frozenset({c}) if old == cut else plists[old]
                        for old in order
                    ]
                    if _search(side_sub, domains) is None:
                        yield c

            stuck.append(frozenset(colors_stuck_at_cut()))
        c1, c2 = stuck
        if c1 | c2 != plists[cut] or c1 & c2:
            raise ValueError("pair is not actually uncolorable: block split failed")
        for side, cs in ((side1, c1), (side2, c2)):
            sl = {v: plists[v] for v in side}
            sl[cut] = cs
            pieces.append((side, sl))
    return [r for r in result if r is not None]


def check_pair_structure(pair: UncolorablePair) -> PairStructureReport:
    """Evaluate the structural facts every uncolorable pair must satisfy."""
    g, lists = pair.graph, pair.lists
    make_uncolorable_pair(g, lists)  # re-certify; raises if not uncolorable

    a = all(len(lists[v]) == g.degrees[v] for v in g.vertices)

    b = True
    for (u, v), mult in g.pair_multiplicities.items():
        if mult == 1:
            continue
        eids = g.edges_between(u, v)
        if mult != 2 or sorted(g.edges[e].sign for e in eids) != [-1, 1]:
            b = False
            break

    decomp = blocks(g)
    bricks_ok, brick_classes = all_blocks_are_bricks(g)

    d = True
    for blk in decomp.blocks:
        if blk.graph.max_multiplicity >= 2:
            degs = set(blk.graph.degrees)
            if len(degs) != 1 or next(iter(degs)) % 2 != 0:
                d = False

    cases = []
    block_lists = _split_block_lists(g, lists)
    for i, (blk, bl) in enumerate(zip(decomp.blocks, block_lists)):
        bg = blk.graph
        local = {w: bl[old] for w, old in enumerate(blk.vertices)}
        relation = all(
            local[u] == frozenset(s * c for c in local[v])
            for u, v, s in bg.edges
        )
        values = [local[w] for w in bg.vertices]
        constant = values[0] if all(x == values[0] for x in values) else None
        if bg.is_all_positive():
            cases.append(BlockCase(i, "c1", relation, constant,
                                   symmetric_constant=False, parts_form=False))
            continue
        sym_const = constant is not None and is_symmetric(constant)
        parts_form = False
        bal = is_balanced(bg)
        if bal.balanced:
            x, y = bal.parts
            ref = next(iter(x), None)
            if ref is not None:
                cset = local[ref]
                neg = frozenset(-c for c in cset)
                parts_form = all(local[w] == cset for w in x) and all(
                    local[w] == neg for w in y
                )
        cases.append(BlockCase(i, "c2", relation, constant, sym_const, parts_form))

    c = all(case.holds for case in cases)
    return PairStructureReport(a, b, c, d, bricks_ok, tuple(cases), brick_classes)


_PARTS_KINDS = (BrickKind.BALANCED_COMPLETE, BrickKind.BALANCED_ODD_CYCLE)


def brick_bad_lists(b: SignedGraph, band_offset: int = 0) -> ListAssignment:
    """The canonical uncolorable lists of a brick, shifted to a color band.

    Balanced complete graphs and balanced odd cycles get C on one balance
    part and -C on the other with |C| = degree; the symmetric bricks get a
    constant symmetric set.  Color 0 is never used, so bands with distinct
    absolute values are disjoint.
    """
    cls = classify_brick(b)
    if not cls.is_brick:
        raise ValueError(f"not a brick: {cls.reason}")
    deg = b.max_degree
    if cls.kind in _PARTS_KINDS:
        band = frozenset(range(band_offset + 1, band_offset + deg + 1))
        neg = frozenset(-c for c in band)
        x, _ = is_balanced(b).parts
        return {v: band if v in x else neg for v in b.vertices}
    if deg % 2 != 0:
        raise ValueError("symmetric brick classes have even degree")
    half = deg // 2
    band = frozenset(range(band_offset + 1, band_offset + half + 1))
    sym = band | frozenset(-c for c in band)
    return {v: sym for v in b.vertices}


def band_width(cls: BrickClass) -> int:
    """Absolute color values consumed by a brick's bad lists."""
    deg = cls.regular_degree
    return deg if cls.kind in _PARTS_KINDS else deg // 2


def build_uncolorable_assignment(g: SignedGraph) -> ListAssignment:
    """Degree-sized lists with no coloring, for graphs whose blocks are bricks.

    Each block receives its bad lists in a fresh band of absolute color
    values, so the per-vertex unions across incident blocks are disjoint
    and sizes add up to the degrees.
    """
    ok, classes = all_blocks_are_bricks(g)
    if not ok:
        bad = next(c for c in classes if not c.is_brick)
        raise ValueError(f"some block is not a brick: {bad.reason}")
    lists: ListAssignment = {v: frozenset() for v in g.vertices}
    offset = 0
    for blk, cls in zip(blocks(g).blocks, classes):
        block_lists = brick_bad_lists(blk.graph, offset)
        for w, old in enumerate(blk.vertices):
            lists[old] |= block_lists[w]
        offset += band_width(cls)
    assert all(len(lists[v]) == g.degrees[v] for v in g.vertices)
    return lists


@dataclass(frozen=True)
class DegreeChoosability:
    """Verdict with certificate: a non-brick block when choosable, or
    solver-verified uncolorable degree lists when not."""

    choosable: bool
    non_brick_index: int | None = None
    non_brick: BrickClass | None = None
    bad_lists: ListAssignment | None = None

    def __bool__(self) -> bool:
        return self.choosable


def is_degree_choosable(g: SignedGraph) -> DegreeChoosability:
    """A connected signed graph is degree choosable iff some block is not a brick."""
    ok, classes = all_blocks_are_bricks(g)
    if not ok:
        idx = next(i for i, c in enumerate(classes) if not c.is_brick)
        return DegreeChoosability(True, non_brick_index=idx, non_brick=classes[idx])
    lists = build_uncolorable_assignment(g)
    if solve_list_coloring(g, lists) is not None:
        raise AssertionError("constructed bad assignment was colorable")
    return DegreeChoosability(False, bad_lists=lists)


# -- brute-force oracle ---------------------------------------------------------
#
# Colors interact only through equality and negation, so a list assignment is
# equivalent, for colorability, to its incidence data: which vertices see the
# color 0, and, per paired color {c, -c}, the two vertex sets seeing c and -c
# (an unordered pair, since flipping c and -c everywhere changes nothing).
# Enumerating that data enumerates all assignments up to sign-preserving
# recolorings, with every class appearing exactly once; all colors fit in
# Z_{2S+1} for S the total list size.

def _list_system_reps(sizes: tuple[int, ...]):
    """Yield one list assignment per recoloring class with the given sizes."""
    n = len(sizes)
    full = (1 << n) - 1
    by_low: list[list[tuple[int, int, tuple[int, ...]]]] = [[] for _ in range(n)]
    for a in range(full + 1):
        for b in range(a, full + 1):
            cover = a | b
            if not cover:
                continue
            low = (cover & -cover).bit_length() - 1
            slots = tuple(((a >> v) & 1) + ((b >> v) & 1) for v in range(n))
            by_low[low].append((a, b, slots))

    def stages(v: int, rem: list[int], chosen: list[tuple[int, int]]):
        if v == n:
            yield tuple(chosen)
            return
        if rem[v] == 0:
            yield from stages(v + 1, rem, chosen)
            return
        active = [
            t for t in by_low[v]
            if all(rem[w] >= t[2][w] for w in range(v, n) if t[2][w])
        ]

        def pick(idx: int):
            if rem[v] == 0:
                yield from stages(v + 1, rem, chosen)
                return
            if idx == len(active):
                return
            a, b, slots = active[idx]
            cmax = min(rem[w] // slots[w] for w in range(v, n) if slots[w])
            for count in range(cmax + 1):
                if count:
                    for w in range(v, n):
                        rem[w] -= slots[w] * count
                    chosen.extend([(a, b)] * count)
                yield from pick(idx + 1)
                if count:
                    for w in range(v, n):
                        rem[w] += slots[w] * count
                    del chosen[-count:]

        yield from pick(0)

    for zero in range(full + 1):
        rem = [sizes[v] - ((zero >> v) & 1) for v in range(n)]
        if any(r < 0 for r in rem):
            continue
        for chosen in stages(0, rem, []):
            lists = [set() for _ in range(n)]
            for v in range(n):
                if (zero >> v) & 1:
                    lists[v].add(0)
            for cid, (a, b) in enumerate(chosen, start=1):
                for v in range(n):
                    if (a >> v) & 1:
                        lists[v].add(cid)
                    if (b >> v) & 1:
                        lists[v].add(-cid)
            yield {v: frozenset(lists[v]) for v in range(n)}


def _all_assignments_colorable(
    g: SignedGraph, sizes: tuple[int, ...], budget: int
) -> tuple[bool, ListAssignment | None]:
    if sum(sizes) > budget:
        raise BudgetExceededError(
            f"total list size {sum(sizes)} exceeds budget {budget}"
        )
    for lists in _list_system_reps(sizes):
        if solve_list_coloring(g, lists) is None:
            return False, lists
    return True, None


def degree_choosable_oracle(g: SignedGraph, budget: int = 12) -> bool:
    """Brute-force degree choosability: try every degree-sized assignment.

    Enumerates all d-assignments up to recoloring symmetry and solves each;
    raises BudgetExceededError when the total degree exceeds the budget.
    """
    if not g.is_connected():
        raise ValueError("input must be connected")
    ok, _ = _all_assignments_colorable(g, g.degrees, budget)
    return ok


def signed_choice_number(g: SignedGraph, budget: int = 12) -> int:
    """Least k such that every k-assignment admits a coloring.

    Ascends from 1 and is bounded by the coloring number; raises
    BudgetExceededError if a level would exceed the enumeration budget.
    """
    if g.n == 0:
        return 0
    col = coloring_number(g)
    for k in range(1, col + 1):
        ok, _ = _all_assignments_colorable(g, (k,) * g.n, budget)
        if ok:
            return k
    raise AssertionError("unreachable: every graph is col-list-colorable")
