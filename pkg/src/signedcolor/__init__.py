"""Coloring and choosability of signed multigraphs.

Exact solvers for signed (list) coloring, structural characterizations
(balance, blocks, bricks, uncolorable pairs, degree choosability),
criticality bounds in exact rationals, and exhaustive verification suites
over all small signed graphs.
"""

from .bounds import (
    GallaiMembership,
    check_list_critical_structure,
    edge_bound_check,
    gallai_class_member,
    gallai_deficiency,
    is_list_critical,
    low_vertex_subgraph,
    signed_line_graph,
)
from .coloring import (
    coloring_number,
    elimination_ordering,
    greedy_coloring,
    is_k_critical,
    is_valid_coloring,
    signed_chromatic_number,
    solve_with_colorset,
    underlying_chromatic_number,
    zk,
)
from .enumeration import EnumSpec, canonical_form, enumerate_brick_block_graphs, enumerate_graphs
from .graph import Edge, SignedGraph, build_graph, complete, cycle, double, path
from .lists import (
    BudgetExceededError,
    DegreeChoosability,
    PairStructureReport,
    UncolorablePair,
    brick_bad_lists,
    build_uncolorable_assignment,
    check_pair_structure,
    degree_choosable_oracle,
    is_degree_choosable,
    make_uncolorable_pair,
    reduce_pair,
    signed_choice_number,
    solve_list_coloring,
)
from .structure import (
    BalanceResult,
    Block,
    BlockDecomposition,
    BrickClass,
    BrickKind,
    all_blocks_are_bricks,
    blocks,
    classify_brick,
    is_antibalanced,
    is_balanced,
    is_switching_equivalent,
)
from .suites import SUITES, VerificationReport, run_suite

__all__ = [name for name in dir() if not name.startswith("_")]
