"""Exhaustive verification suites.

Each suite sweeps an enumerated universe of small signed graphs and checks
one theorem-shaped predicate, stopping at the first counterexample.  All
checked properties are invariant under switching, so the default universes
are taken up to switching isomorphism.

Universe reductions used by the 6-vertex suites (S1, S6, S10): a parallel
pair of equally-signed edges imposes the same constraint twice, so deleting
one copy changes no coloring, leaves the simple support unchanged, and can
only lower the coloring number and maximum degree.  Consequently no
3-critical graph contains such a pair (deleting the copy would not lower
the chromatic number), and the chain and doubling inequalities hold for all
graphs as soon as they hold for graphs without same-sign parallels.  Those
suites therefore enumerate with ``same_sign_parallels=False``; the full
universe at 5 vertices is still swept unreduced.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from . import formats
from .bounds import edge_bound_check, gallai_class_member, gallai_deficiency
from .coloring import (
    coloring_number,
    signed_chromatic_number,
    solve_with_colorset,
    underlying_chromatic_number,
    zk,
)
from .enumeration import (
    EnumSpec,
    _connected_supports,
    _graph_from_states,
    _states_from_graph,
    canonical_form,
    enumerate_brick_block_graphs,
    enumerate_graphs,
)
from .graph import Edge, SignedGraph, cycle, double
from .lists import (
    BudgetExceededError,
    _all_assignments_colorable,
    build_uncolorable_assignment,
    check_pair_structure,
    degree_choosable_oracle,
    make_uncolorable_pair,
    signed_choice_number,
)
from .structure import all_blocks_are_bricks, blocks, classify_brick, is_antibalanced, is_balanced


@dataclass(frozen=True)
class Counterexample:
    graph_text: str
    violation: str
    data: tuple[tuple[str, str], ...] = ()

    def graph(self) -> SignedGraph:
        return formats.parse_graph(self.graph_text).graph


@dataclass(frozen=True)
class VerificationReport:
    suite: str
    spec: EnumSpec | None
    instances: int
    skipped: int
    status: str  # "pass" | "counterexample"
    counterexample: Counterexample | None
    wall_time: float
    notes: tuple[str, ...] = ()

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def same_outcome(self, other: "VerificationReport") -> bool:
        """Equality of everything except the wall time."""
        return (
            self.suite == other.suite
            and self.spec == other.spec
            and self.instances == other.instances
            and self.skipped == other.skipped
            and self.status == other.status
            and self.counterexample == other.counterexample
            and self.notes == other.notes
        )


def _ce(g: SignedGraph, violation: str, **data) -> Counterexample:
    return Counterexample(
        formats.write_graph(g),
        violation,
        tuple(sorted((k, str(v)) for k, v in data.items())),
    )


# Streams are cached compactly (state vectors, not graphs) because several
# suites share a universe and acceptance runs them back to back.
_stream_cache: dict[EnumSpec, list[tuple[int, tuple[int, ...]]]] = {}


def _iter_spec(spec: EnumSpec):
    if spec not in _stream_cache:
        _stream_cache[spec] = [
            (g.n, _states_from_graph(g)) for g in enumerate_graphs(spec)
        ]
    for n, states in _stream_cache[spec]:
        yield _graph_from_states(n, states)


class _SuiteRun:
    def __init__(self, suite_id: str, spec: EnumSpec | None):
        self.suite_id = suite_id
        self.spec = spec
        self.instances = 0
        self.skipped = 0
        self.notes: list[str] = []
        self.start = time.perf_counter()

    def report(self, counterexample: Counterexample | None) -> VerificationReport:
        return VerificationReport(
            self.suite_id,
            self.spec,
            self.instances,
            self.skipped,
            "pass" if counterexample is None else "counterexample",
            counterexample,
            time.perf_counter() - self.start,
            tuple(self.notes),
        )


def _chi_at_most(g: SignedGraph, k: int) -> bool:
    return solve_with_colorset(g, zk(k)) is not None


def _is_brick_graph(g: SignedGraph) -> bool:
    return len(blocks(g).blocks) == 1 and classify_brick(g).is_brick


# -- the suites -----------------------------------------------------------------

def _suite_s1(spec: EnumSpec, oracle_max_vertices: int = 3, budget: int = 12):
    """Chain: chi <= choice number <= coloring number <= max degree + 1."""
    run = _SuiteRun("S1", spec)
    oracle_checked = oracle_skipped = 0
    for g in _iter_spec(spec):
        run.instances += 1
        col = coloring_number(g)
        if col > g.max_degree + 1:
            return run.report(_ce(g, "col > max_degree + 1", col=col))
        if not _chi_at_most(g, col):
            return run.report(_ce(g, "chi > col", col=col))
        if g.n <= oracle_max_vertices:
            try:
                choice = signed_choice_number(g, budget)
                chi = signed_chromatic_number(g)
                if not (chi <= choice <= col):
                    return run.report(
                        _ce(g, "chi <= choice <= col failed",
                            chi=chi, choice=choice, col=col)
                    )
                ok, witness = _all_assignments_colorable(
                    g, tuple(d + 1 for d in g.degrees), budget
                )
                if not ok:
                    return run.report(
                        _ce(g, "(d+1)-assignment uncolorable", lists=witness)
                    )
                oracle_checked += 1
            except BudgetExceededError:
                oracle_skipped += 1
    run.notes.append(
        f"choice-number clause checked on {oracle_checked} graphs up to budget "
        f"{budget}, budget-skipped on {oracle_skipped}"
    )
    return run.report(None)


def _suite_s2(spec: EnumSpec):
    """chi <= 2 if and only if antibalanced."""
    run = _SuiteRun("S2", spec)
    for g in _iter_spec(spec):
        run.instances += 1
        anti = is_antibalanced(g).balanced
        low = _chi_at_most(g, 2)
        if anti != low:
            return run.report(_ce(g, "antibalance mismatch", antibalanced=anti,
                                   chi_le_2=low))
    return run.report(None)


def _suite_s3(spec: EnumSpec, oracle_max_vertices: int = 3, budget: int = 12):
    """Brooks: every connected non-brick has chi <= max degree (list version
    on tiny graphs via the oracle)."""
    run = _SuiteRun("S3", spec)
    oracle_checked = oracle_skipped = 0
    for g in _iter_spec(spec):
        run.instances += 1
        if _is_brick_graph(g):
            continue
        if not _chi_at_most(g, g.max_degree):
            return run.report(_ce(g, "non-brick with chi > max_degree"))
        if g.n <= oracle_max_vertices:
            sizes = (g.max_degree,) * g.n
            try:
                ok, witness = _all_assignments_colorable(g, sizes, budget)
                if not ok:
                    return run.report(
                        _ce(g, "non-brick with uncolorable max-degree lists",
                            lists=witness)
                    )
                oracle_checked += 1
            except BudgetExceededError:
                oracle_skipped += 1
    run.notes.append(
        f"list clause checked on {oracle_checked} graphs up to budget {budget}, "
        f"budget-skipped on {oracle_skipped}"
    )
    return run.report(None)


def _suite_s4(spec: EnumSpec, budget: int = 12):
    """Degree choosability: brute-force oracle against the block criterion."""
    run = _SuiteRun("S4", spec)
    for g in _iter_spec(spec):
        if sum(g.degrees) > budget:
            run.skipped += 1
            continue
        run.instances += 1
        oracle = degree_choosable_oracle(g, budget)
        characterized = not all_blocks_are_bricks(g)[0]
        if oracle != characterized:
            return run.report(
                _ce(g, "oracle disagrees with block criterion",
                    oracle=oracle, blocks_all_bricks=not characterized)
            )
    run.notes.append(f"graphs over total-degree budget {budget} skipped: "
                     f"{run.skipped}")
    return run.report(None)


def _suite_s5(spec: EnumSpec):
    """Constructed bad lists on brick-block graphs are degree-sized,
    unsolvable, and structurally rigid."""
    run = _SuiteRun("S5", spec)
    run.notes.append(
        "universe built constructively by gluing bricks at cut vertices "
        "(complete for graphs whose blocks are all bricks)"
    )
    for g in enumerate_brick_block_graphs(spec.max_vertices):
        run.instances += 1
        lists = build_uncolorable_assignment(g)
        if any(len(lists[v]) != g.degrees[v] for v in g.vertices):
            return run.report(_ce(g, "constructed lists not degree-sized"))
        try:
            pair = make_uncolorable_pair(g, lists)
        except ValueError:
            return run.report(_ce(g, "constructed lists are colorable",
                                   lists=lists))
        structure = check_pair_structure(pair)
        if not structure.all_hold:
            return run.report(
                _ce(g, "pair structure flag failed",
                    a=structure.degree_lists, b=structure.edge_shape,
                    c=structure.list_relations, d=structure.even_regularity,
                    e=structure.blocks_bricks)
            )
    return run.report(None)


def _is_3_critical_fast(g: SignedGraph) -> bool:
    """3-criticality by direct solving, cheapest tests first."""
    if _chi_at_most(g, 2):
        return False
    low = zk(2)
    for eid in range(g.m):
        if solve_with_colorset(g.delete_edge(eid), low) is None:
            return False
    for v in g.vertices:
        if solve_with_colorset(g.delete_vertex(v)[0], low) is None:
            return False
    return _chi_at_most(g, 3)


def _suite_s6(spec: EnumSpec):
    """Census: the 3-critical graphs are exactly the balanced odd cycles and
    the unbalanced even cycles.

    In a multigraph universe the unbalanced even cycles include the length-2
    cycle, i.e. the differently-signed parallel pair on two vertices.
    """
    run = _SuiteRun("S6", spec)
    found: dict[tuple, SignedGraph] = {}
    for g in _iter_spec(spec):
        run.instances += 1
        if _is_3_critical_fast(g):
            found[canonical_form(g)] = g
    expected: dict[tuple, SignedGraph] = {}
    if spec.max_multiplicity >= 2 and spec.max_vertices >= 2:
        two_cycle = double(SignedGraph(2, (Edge(0, 1, 1),)))
        expected[canonical_form(two_cycle)] = two_cycle
    for m in range(3, spec.max_vertices + 1):
        if m % 2 == 1:
            c = cycle([1] * m)
        else:
            c = cycle([1] * (m - 1) + [-1])
        expected[canonical_form(c)] = c
    run.notes.append(f"3-critical classes found: {len(found)}")
    for key, g in sorted(found.items()):
        if key not in expected:
            return run.report(_ce(g, "unexpected 3-critical graph"))
    for key, g in sorted(expected.items()):
        if key not in found:
            return run.report(_ce(g, "expected 3-critical graph not found"))
    return run.report(None)


def _suite_s7(spec: EnumSpec, ks: tuple[int, ...] = (4, 5)):
    """Gallai-class deficiency bound m(T) >= 2, in exact rationals."""
    run = _SuiteRun("S7", spec)
    members = {k: 0 for k in ks}
    tight = {k: 0 for k in ks}
    for g in _iter_spec(spec):
        run.instances += 1
        for k in ks:
            if not gallai_class_member(g, k).member:
                continue
            members[k] += 1
            m = gallai_deficiency(g, k)
            if m < 2:
                return run.report(_ce(g, "gallai deficiency below 2",
                                       k=k, deficiency=m))
            if m == 2:
                tight[k] += 1
    for k in ks:
        run.notes.append(
            f"k={k}: {members[k]} class members, {tight[k]} with m(T) = 2"
        )
    return run.report(None)


def _suite_s8(spec: EnumSpec, k: int = 4):
    """Edge bound for k-critical simple graphs other than balanced K_k."""
    run = _SuiteRun("S8", spec)
    low = zk(k - 1)
    found = 0
    for g in _iter_spec(spec):
        run.instances += 1
        if solve_with_colorset(g, low) is not None:
            continue  # chi <= k-1
        critical = True
        for eid in range(g.m):
            if solve_with_colorset(g.delete_edge(eid), low) is None:
                critical = False
                break
        if critical:
            for v in g.vertices:
                if solve_with_colorset(g.delete_vertex(v)[0], low) is None:
                    critical = False
                    break
        if not critical or not _chi_at_most(g, k):
            continue
        complete_order_k = (
            g.n == k and len(g.pair_multiplicities) == k * (k - 1) // 2
        )
        if complete_order_k and is_balanced(g).balanced:
            continue
        found += 1
        ok, lhs, rhs = edge_bound_check(g, k)
        if not ok:
            return run.report(_ce(g, "edge bound violated", k=k, lhs=lhs, rhs=rhs))
    run.notes.append(f"k={k}: {found} critical graphs checked against the bound")
    return run.report(None)


def _suite_s9(spec: EnumSpec):
    """Doubling identity: chi(2H) = 2 chi(H) - 1 per simple underlying graph."""
    run = _SuiteRun("S9", spec)
    for n in range(1, spec.max_vertices + 1):
        for support in _connected_supports(n):
            run.instances += 1
            h = _graph_from_states(n, support)
            chi_h = underlying_chromatic_number(h)
            doubled = double(h)
            chi_pm = signed_chromatic_number(doubled)
            if chi_pm != 2 * chi_h - 1:
                return run.report(
                    _ce(doubled, "doubling identity failed",
                        chi_underlying=chi_h, chi_pm=chi_pm)
                )
    run.notes.append("one instance per connected simple underlying graph")
    return run.report(None)


def _suite_s10(spec: EnumSpec):
    """chi <= 2 chi(underlying simple support) - 1."""
    run = _SuiteRun("S10", spec)
    for g in _iter_spec(spec):
        run.instances += 1
        bound = 2 * underlying_chromatic_number(g) - 1
        if not _chi_at_most(g, bound):
            return run.report(_ce(g, "chi exceeds 2 chi(underlying) - 1",
                                   bound=bound))
    return run.report(None)


_REDUCED_6 = EnumSpec(max_vertices=6, max_multiplicity=2,
                      same_sign_parallels=False)

SUITES: dict[str, tuple] = {
    # id: (runner, default spec, description)
    "S1": (_suite_s1, EnumSpec(5, 2),
           "chain chi <= choice <= col <= max degree + 1"),
    "S2": (_suite_s2, EnumSpec(5, 2), "chi <= 2 iff antibalanced"),
    "S3": (_suite_s3, EnumSpec(5, 2), "Brooks bound for non-bricks"),
    "S4": (_suite_s4, EnumSpec(4, 2), "degree choosability oracle agreement"),
    "S5": (_suite_s5, EnumSpec(6, 2), "uncolorable pair construction and structure"),
    "S6": (_suite_s6, _REDUCED_6, "exact census of 3-critical graphs"),
    "S7": (_suite_s7, EnumSpec(6, 1), "Gallai deficiency bound"),
    "S8": (_suite_s8, EnumSpec(7, 1), "edge bound for 4-critical simple graphs"),
    "S9": (_suite_s9, EnumSpec(5, 1), "doubling identity per underlying graph"),
    "S10": (_suite_s10, _REDUCED_6, "chi vs doubled underlying chromatic number"),
}


def run_suite(suite_id: str, spec: EnumSpec | None = None, **options) -> VerificationReport:
    """Run one verification suite; defaults per suite when spec is omitted."""
    if suite_id not in SUITES:
        raise ValueError(f"unknown suite: {suite_id!r}")
    runner, default_spec, _ = SUITES[suite_id]
    return runner(spec if spec is not None else default_spec, **options)
