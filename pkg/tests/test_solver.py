import pytest
from hypothesis import given, strategies as st

from conftest import connected_atlas, graphs, trees
from rowembed.embedding import (FREE, OrientationConstraint, verify_embedding)
from rowembed.graph import (Graph, caterpillar_graph, complete_graph, cycle_graph,
                            disjoint_union, path_graph, star_graph)
from rowembed.oracles import naive_embed
from rowembed.products import CARTESIAN, HORIZONTAL, STRONG, VERTICAL, HostSpec
from rowembed.solver import (Outcome, SearchConfig, canonical_host, embed_into,
                             king_embeddable, orbit_representatives, row_param_one,
                             row_treewidth_one)

K4_PENDANTS = Graph(8, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3),
                        (0, 4), (1, 5), (2, 6), (3, 7)])


def _sound(res, constraint=None):
    assert res.outcome is Outcome.YES
    assert verify_embedding(res.embedding, constraint).ok


class TestEmbedInto:
    def test_k4_in_block(self):
        _sound(embed_into(complete_graph(4), HostSpec.path(2, 2)))

    def test_k5_in_king(self):
        res = embed_into(complete_graph(5), HostSpec.path(5, 5))
        assert res.outcome is Outcome.NO and res.embedding is None

    def test_c4_in_grid_square(self):
        _sound(embed_into(cycle_graph(4), HostSpec.path(2, 2, CARTESIAN)))

    def test_triangle_not_in_grid(self):
        assert embed_into(cycle_graph(3), HostSpec.path(4, 4, CARTESIAN)).outcome is Outcome.NO

    def test_too_many_vertices(self):
        assert embed_into(path_graph(5), HostSpec.path(2, 2)).outcome is Outcome.NO

    def test_empty_guest(self):
        assert embed_into(Graph(0), HostSpec.path(1, 1)).outcome is Outcome.YES

    def test_budget_is_inconclusive(self):
        res = embed_into(complete_graph(5), HostSpec.path(5, 5), SearchConfig(node_budget=3))
        assert res.outcome is Outcome.INCONCLUSIVE
        assert not res

    def test_bad_budget(self):
        with pytest.raises(ValueError):
            SearchConfig(node_budget=0)

    def test_orientation_labels_respected(self):
        g = path_graph(4)
        forced = OrientationConstraint({(0, 1): VERTICAL, (1, 2): VERTICAL, (2, 3): VERTICAL})
        res = embed_into(g, HostSpec.star(3, 1), SearchConfig(constraint=forced))
        assert res.outcome is Outcome.NO
        res = embed_into(g, HostSpec.path(4, 1), SearchConfig(constraint=forced))
        _sound(res, forced)
        flat = OrientationConstraint({(0, 1): HORIZONTAL, (1, 2): HORIZONTAL})
        res = embed_into(g, HostSpec.path(2, 4), SearchConfig(constraint=flat))
        _sound(res, flat)
        assert len({res.embedding.map[v][0] for v in (0, 1, 2)}) == 1

    def test_free_label_is_noop(self):
        c = OrientationConstraint({(0, 1): FREE})
        _sound(embed_into(path_graph(2), HostSpec.path(1, 2), SearchConfig(constraint=c)), c)

    def test_disconnected_guest(self):
        g = disjoint_union(complete_graph(4), complete_graph(4))
        _sound(embed_into(g, HostSpec.path(2, 4)))
        assert embed_into(g, HostSpec.path(2, 3)).outcome is Outcome.NO

    @given(graphs(max_n=5, connected=True), st.integers(0, 9))
    def test_seed_does_not_change_answer(self, g, seed):
        spec = HostSpec.path(3, 3)
        a = embed_into(g, spec)
        b = embed_into(g, spec, SearchConfig(ordering_seed=seed, symmetry_breaking=False))
        assert a.outcome == b.outcome
        if a:
            _sound(a)
            _sound(b)

    @given(graphs(max_n=5, connected=True), st.sampled_from([STRONG, CARTESIAN]))
    def test_agrees_with_oracle(self, g, product):
        for spec in (HostSpec.path(3, 3, product), HostSpec.star(3, 2, product),
                     HostSpec.caterpillar(2, 1, 3, product)):
            assert bool(embed_into(g, spec)) == bool(naive_embed(g, spec))

    @given(graphs(max_n=6, connected=True), st.integers(1, 5))
    def test_monotone_in_rows(self, g, rows):
        if embed_into(g, HostSpec.path(3, rows)):
            assert embed_into(g, HostSpec.path(3, rows + 1))

    def test_deterministic_witness(self):
        g = caterpillar_graph([3, 4, 3])
        spec = HostSpec.path(5, 5)
        assert embed_into(g, spec).embedding.dumps() == embed_into(g, spec).embedding.dumps()


def test_completeness_on_king_board():
    """All connected graphs on <= 5 vertices against Path(5) x P_5 (the <= 6 sweep runs in acceptance)."""
    spec = HostSpec.path(5, 5)
    for g in connected_atlas(5):
        assert bool(embed_into(g, spec)) == bool(naive_embed(g, spec)), g


def test_orbit_representatives():
    reps = orbit_representatives(HostSpec.path(3, 3))
    assert set(reps) == {(0, 0), (0, 1), (1, 1)}
    assert orbit_representatives(HostSpec.star(4, 3)) == [(0, 0), (0, 1), (1, 0), (1, 1)]


class TestKing:
    def test_star_limits(self):
        assert king_embeddable(star_graph(8))
        assert not king_embeddable(star_graph(9))

    @pytest.mark.parametrize("k", range(1, 9))
    def test_paths(self, k):
        assert king_embeddable(path_graph(k))


class TestRowParameters:
    def test_path_is_pathwidth_one(self):
        _sound(row_param_one(path_graph(5), "pathwidth"))

    def test_big_star_has_row_treedepth_one(self):
        _sound(row_param_one(star_graph(9), "treedepth"))

    def test_big_star_beats_simple_pathwidth(self):
        assert row_param_one(star_graph(9), "simple-pathwidth").outcome is Outcome.NO

    def test_k4_with_pendants_regression(self):
        assert row_param_one(K4_PENDANTS, "simple-pathwidth").outcome is Outcome.YES

    def test_unknown_param(self):
        with pytest.raises(ValueError):
            canonical_host("cutwidth", 3)

    def test_triangle_row_treewidth(self):
        res = row_treewidth_one(cycle_graph(3))
        _sound(res)
        assert res.host_tree is not None and res.host_tree.is_tree()

    def test_k5_row_treewidth(self):
        assert row_treewidth_one(complete_graph(5), cap=5).outcome is Outcome.NO

    def test_cap_is_inconclusive(self):
        assert row_treewidth_one(path_graph(6), cap=5).outcome is Outcome.INCONCLUSIVE

    @given(trees(min_n=1, max_n=8))
    def test_trees(self, t):
        _sound(row_treewidth_one(t))

    def test_disconnected_components_join(self):
        g = disjoint_union(cycle_graph(3), path_graph(3))
        res = row_treewidth_one(g)
        _sound(res)
        assert res.host_tree.is_tree()
