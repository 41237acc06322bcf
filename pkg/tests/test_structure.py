import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from signedcolor import (
    BrickKind,
    all_blocks_are_bricks,
    blocks,
    build_graph,
    classify_brick,
    complete,
    cycle,
    double,
    is_antibalanced,
    is_balanced,
    is_switching_equivalent,
    path,
)

from conftest import signed_graphs


def _check_parts_witness(g, parts):
    x, y = parts
    assert x | y == set(g.vertices) and not (x & y)
    for u, v, s in g.edges:
        crossing = (u in x) != (v in x)
        assert (s == -1) == crossing


class TestBalance:
    def test_positive_k4_balanced_with_trivial_parts(self):
        res = is_balanced(complete(4))
        assert res.balanced
        assert res.parts == (frozenset(range(4)), frozenset())

    def test_single_negative_edge(self):
        res = is_balanced(build_graph(2, [(0, 1, -1)]))
        assert res.balanced
        assert res.parts == (frozenset({0}), frozenset({1}))

    def test_unbalanced_triangle_cycle_witness(self):
        g = cycle([1, 1, -1])
        res = is_balanced(g)
        assert not res.balanced
        assert g.sign_product(res.cycle) == -1
        assert len(res.cycle) == 3

    def test_doubled_pair_is_unbalanced(self):
        res = is_balanced(double(complete(2)))
        assert not res.balanced
        assert len(res.cycle) == 2

    def test_disconnected_input_allowed(self):
        g = build_graph(4, [(0, 1, -1), (2, 3, 1)])
        res = is_balanced(g)
        assert res.balanced
        _check_parts_witness(g, res.parts)

    @given(signed_graphs(), st.data())
    @settings(max_examples=60)
    def test_balance_switching_invariant(self, g, data):
        xs = data.draw(st.sets(st.integers(min_value=0, max_value=g.n - 1)))
        assert is_balanced(g).balanced == is_balanced(g.switch(xs)).balanced

    @given(signed_graphs())
    @settings(max_examples=60)
    def test_parts_witness_valid(self, g):
        res = is_balanced(g)
        if res.balanced:
            _check_parts_witness(g, res.parts)
        else:
            assert g.sign_product(res.cycle) == -1


class TestAntibalance:
    def test_all_negative_k3(self):
        assert is_antibalanced(complete(3, -1)).balanced

    def test_positive_k3_not_antibalanced(self):
        assert not is_antibalanced(complete(3)).balanced

    def test_positive_c4_antibalanced_with_bipartition(self):
        res = is_antibalanced(cycle([1, 1, 1, 1]))
        assert res.balanced
        x, y = res.parts
        assert {frozenset(x), frozenset(y)} == {frozenset({0, 2}), frozenset({1, 3})}

    @given(signed_graphs())
    @settings(max_examples=60)
    def test_antibalanced_iff_negation_balanced(self, g):
        assert is_antibalanced(g).balanced == is_balanced(g.negate()).balanced


class TestSwitchingEquivalence:
    def test_recovers_switch_set(self):
        g = cycle([1, -1, 1, 1, -1])
        x = frozenset({1, 3})
        ok, found = is_switching_equivalent(g, g.switch(x))
        assert ok
        assert found in (x, frozenset(g.vertices) - x)
        assert g.switch(found) == g.switch(x)

    def test_positive_vs_negative_k2(self):
        ok, found = is_switching_equivalent(
            build_graph(2, [(0, 1, 1)]), build_graph(2, [(0, 1, -1)])
        )
        assert ok
        assert found in (frozenset({0}), frozenset({1}))

    def test_triangles_of_different_sign_product(self):
        ok, found = is_switching_equivalent(cycle([1, 1, 1]), cycle([1, 1, -1]))
        assert not ok and found is None

    def test_mismatched_underlying_rejected(self):
        with pytest.raises(ValueError):
            is_switching_equivalent(complete(3), cycle([1, 1, 1, 1]))


class TestBlocks:
    def test_positive_path(self):
        decomp = blocks(path([1, 1]))
        assert len(decomp.blocks) == 2
        assert decomp.cut_vertices == frozenset({1})
        assert {b.vertices for b in decomp.blocks} == {(0, 1), (1, 2)}

    def test_doubled_triangle_single_block(self):
        decomp = blocks(double(complete(3)))
        assert len(decomp.blocks) == 1
        assert decomp.cut_vertices == frozenset()

    def test_two_triangles_sharing_a_vertex(self):
        g = build_graph(
            5, [(0, 1, 1), (1, 2, 1), (0, 2, 1), (2, 3, 1), (3, 4, 1), (2, 4, 1)]
        )
        decomp = blocks(g)
        assert len(decomp.blocks) == 2
        assert decomp.cut_vertices == frozenset({2})

    def test_isolated_vertices_are_blocks(self):
        decomp = blocks(build_graph(3, [(0, 1, 1)]))
        assert len(decomp.blocks) == 2
        assert (2,) in {b.vertices for b in decomp.blocks}

    def test_parallel_pair_is_one_block(self):
        decomp = blocks(build_graph(2, [(0, 1, 1), (0, 1, 1)]))
        assert len(decomp.blocks) == 1
        assert decomp.blocks[0].graph.m == 2

    @given(signed_graphs())
    @settings(max_examples=60)
    def test_block_tree_identity(self, g):
        if not g.is_connected():
            return
        decomp = blocks(g)
        assert sum(b.graph.n - 1 for b in decomp.blocks) == g.n - 1
        covered = sorted(eid for b in decomp.blocks for eid in b.edge_ids)
        assert covered == list(range(g.m))

    @given(signed_graphs())
    @settings(max_examples=40)
    def test_cut_vertices_are_multi_block(self, g):
        decomp = blocks(g)
        for v in g.vertices:
            assert (v in decomp.cut_vertices) == (len(decomp.blocks_at(v)) >= 2)


class TestBrickClassification:
    @pytest.mark.parametrize(
        "g,kind,order",
        [
            (complete(1), BrickKind.BALANCED_COMPLETE, 1),
            (complete(2), BrickKind.BALANCED_COMPLETE, 2),
            (build_graph(2, [(0, 1, -1)]), BrickKind.BALANCED_COMPLETE, 2),
            (complete(3), BrickKind.BALANCED_COMPLETE, 3),  # tie-break
            (complete(4), BrickKind.BALANCED_COMPLETE, 4),
            (cycle([1] * 5), BrickKind.BALANCED_ODD_CYCLE, 5),
            (cycle([1, 1, 1, -1]), BrickKind.UNBALANCED_EVEN_CYCLE, 4),
            (double(complete(2)), BrickKind.DOUBLED_COMPLETE, 2),  # tie-break
            (double(complete(3)), BrickKind.DOUBLED_COMPLETE, 3),  # tie-break
            (double(cycle([1] * 5)), BrickKind.DOUBLED_ODD_CYCLE, 5),
        ],
    )
    def test_brick_shapes(self, g, kind, order):
        cls = classify_brick(g)
        assert cls.kind is kind and cls.order == order
        assert cls.regular_degree == g.max_degree == g.min_degree

    @pytest.mark.parametrize(
        "g",
        [
            cycle([1, 1, 1, 1]),                 # balanced even cycle
            cycle([1, 1, -1]),                   # unbalanced odd cycle
            complete(4, -1),                     # unbalanced complete
            build_graph(2, [(0, 1, 1), (0, 1, 1)]),   # same-sign parallel pair
            double(cycle([1] * 4)),              # doubled even cycle
        ],
    )
    def test_non_bricks(self, g):
        cls = classify_brick(g)
        assert not cls.is_brick
        assert cls.reason

    def test_unbalanced_k4_is_not_a_brick(self):
        g = build_graph(
            4, [(0, 1, -1), (0, 2, 1), (0, 3, 1), (1, 2, 1), (1, 3, 1), (2, 3, 1)]
        )
        assert not is_balanced(g).balanced
        assert not classify_brick(g).is_brick

    def test_balanced_but_switched_k4_is_a_brick(self):
        g = complete(4).switch([0, 2])
        cls = classify_brick(g)
        assert cls.kind is BrickKind.BALANCED_COMPLETE and cls.order == 4

    def test_rejects_non_blocks(self):
        with pytest.raises(ValueError):
            classify_brick(path([1, 1]))
        with pytest.raises(ValueError):
            classify_brick(build_graph(2, []))


class TestAllBlocksAreBricks:
    def test_positive_path(self):
        ok, classes = all_blocks_are_bricks(path([1]))
        assert ok
        ok, classes = all_blocks_are_bricks(path([1, 1]))
        assert ok
        assert all(c.kind is BrickKind.BALANCED_COMPLETE for c in classes)

    def test_positive_c4(self):
        ok, classes = all_blocks_are_bricks(cycle([1, 1, 1, 1]))
        assert not ok

    def test_two_positive_triangles_sharing_a_vertex(self):
        g = build_graph(
            5, [(0, 1, 1), (1, 2, 1), (0, 2, 1), (2, 3, 1), (3, 4, 1), (2, 4, 1)]
        )
        ok, classes = all_blocks_are_bricks(g)
        assert ok and len(classes) == 2

    def test_rejects_disconnected(self):
        with pytest.raises(ValueError):
            all_blocks_are_bricks(build_graph(2, []))
