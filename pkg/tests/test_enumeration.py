import pytest

from signedcolor import (
    EnumSpec,
    SignedGraph,
    all_blocks_are_bricks,
    build_graph,
    canonical_form,
    complete,
    cycle,
    double,
    enumerate_brick_block_graphs,
    enumerate_graphs,
)
from signedcolor.enumeration import _connected_supports


def catalog(spec):
    return list(enumerate_graphs(spec))


class TestCatalogs:
    def test_two_vertices_up_to_iso(self):
        gs = catalog(EnumSpec(2, 2, modulo="iso"))
        # K_1, +edge, -edge, ++, +-, --
        assert len(gs) == 6

    def test_two_vertices_up_to_switching(self):
        gs = catalog(EnumSpec(2, 2, modulo="switching_iso"))
        # K_1, single edge, same-sign pair, opposite pair
        assert len(gs) == 4

    def test_three_vertices_simple_switching(self):
        gs = [g for g in catalog(EnumSpec(3, 1)) if g.n == 3]
        # path, balanced triangle, unbalanced triangle
        assert len(gs) == 3
        products = sorted(
            g.sign_product(range(g.m)) for g in gs if g.m == 3
        )
        assert products == [-1, 1]

    def test_underlying_simple_counts(self):
        for n, expected in [(1, 1), (2, 1), (3, 2), (4, 6), (5, 21)]:
            assert len(_connected_supports(n)) == expected

    def test_underlying_supports_of_signed_stream(self):
        seen = {
            canonical_form(g.simple_support(), "iso")
            for g in catalog(EnumSpec(3, 1))
            if g.n == 3
        }
        assert len(seen) == 2

    def test_signed_complete_graph_switching_classes(self):
        # switching classes of signed K_n match the two-graph counts
        for n, expected in [(3, 2), (4, 3), (5, 7)]:
            count = sum(
                1
                for g in catalog(EnumSpec(n, 1))
                if g.n == n and len(g.pair_multiplicities) == n * (n - 1) // 2
            )
            assert count == expected


class TestStreamProperties:
    def test_determinism(self):
        spec = EnumSpec(4, 2)
        assert catalog(spec) == catalog(spec)

    def test_no_duplicate_classes(self):
        spec = EnumSpec(4, 2)
        keys = [canonical_form(g) for g in catalog(spec)]
        assert len(keys) == len(set(keys))

    def test_all_connected(self):
        assert all(g.is_connected() for g in catalog(EnumSpec(4, 2)))

    def test_multiplicity_bound_respected(self):
        assert all(g.max_multiplicity <= 1 for g in catalog(EnumSpec(4, 1)))

    def test_degree_cap(self):
        gs = catalog(EnumSpec(4, 2, degree_cap=3))
        assert gs and all(g.max_degree <= 3 for g in gs)

    def test_same_sign_exclusion(self):
        gs = catalog(EnumSpec(3, 2, same_sign_parallels=False))
        for g in gs:
            for (u, v), mult in g.pair_multiplicities.items():
                if mult == 2:
                    signs = sorted(g.edges[e].sign for e in g.edges_between(u, v))
                    assert signs == [-1, 1]

    def test_disconnected_mode_includes_unions(self):
        gs = list(enumerate_graphs(EnumSpec(2, 1, connected_only=False)))
        # K_1, K_2(+), 2 x K_1
        assert len(gs) == 3
        assert any(not g.is_connected() for g in gs)

    def test_every_iso_class_has_switching_representative(self):
        # folding switching classes only merges, never drops
        iso = {canonical_form(g) for g in catalog(EnumSpec(3, 2, modulo="iso"))}
        sw = {canonical_form(g) for g in catalog(EnumSpec(3, 2))}
        assert sw == iso


class TestCanonicalForm:
    def test_invariant_under_relabeling_and_switching(self):
        g = cycle([1, 1, 1, -1])
        h = build_graph(4, [(2, 1, 1), (1, 3, 1), (3, 0, 1), (0, 2, -1)]).switch([1])
        assert canonical_form(g) == canonical_form(h)

    def test_iso_mode_distinguishes_signs(self):
        g = build_graph(2, [(0, 1, 1)])
        h = build_graph(2, [(0, 1, -1)])
        assert canonical_form(g, "iso") != canonical_form(h, "iso")
        assert canonical_form(g) == canonical_form(h)

    def test_switching_mode_distinguishes_cycle_sign(self):
        assert canonical_form(cycle([1, 1, 1])) != canonical_form(cycle([1, 1, -1]))

    def test_rejects_unknown_modulo(self):
        with pytest.raises(ValueError):
            canonical_form(complete(2), "nonsense")


class TestBrickBlockFamily:
    def test_small_family_contents(self):
        family = enumerate_brick_block_graphs(3)
        keys = {canonical_form(g) for g in family}
        expected = {
            canonical_form(g)
            for g in [
                SignedGraph(1),
                complete(2),
                complete(3),
                double(complete(2)),
                double(complete(3)),
                build_graph(3, [(0, 1, 1), (1, 2, 1)]),  # path of two bricks
            ]
        }
        # plus the mixed gluings at a shared vertex
        expected.add(
            canonical_form(build_graph(3, [(0, 1, 1), (1, 2, 1), (1, 2, -1)]))
        )
        expected.add(
            canonical_form(
                build_graph(3, [(0, 1, 1), (0, 1, -1), (1, 2, 1), (1, 2, -1)])
            )
        )
        assert keys == expected

    def test_family_members_have_brick_blocks(self):
        for g in enumerate_brick_block_graphs(5):
            assert all_blocks_are_bricks(g)[0]

    def test_family_matches_filtered_enumeration(self):
        # cross-check the constructive family against brute filtering
        for max_n in (3, 4):
            family = {
                canonical_form(g) for g in enumerate_brick_block_graphs(max_n)
            }
            filtered = {
                canonical_form(g)
                for g in enumerate_graphs(EnumSpec(max_n, 2))
                if all_blocks_are_bricks(g)[0]
            }
            assert family == filtered
