import networkx as nx
import pytest
from hypothesis import given

from conftest import connected_atlas, graphs, to_nx, treewidth, trees
from rowembed.graph import (Graph, GraphBuilder, caterpillar_graph, complete_bipartite,
                            complete_graph, cycle_graph, disjoint_union, is_bipartite,
                            is_series_parallel, path_graph, read_edgelist,
                            recognize_caterpillar, star_graph, write_edgelist)
from rowembed.trees import enumerate_free_trees


def test_graph_rejects_bad_edges():
    with pytest.raises(ValueError):
        Graph(2, [(0, 0)])
    with pytest.raises(ValueError):
        Graph(2, [(0, 1), (1, 0)])
    with pytest.raises(ValueError):
        Graph(2, [(0, 2)])
    with pytest.raises(ValueError):
        Graph(2, vtag={5: "x"})


def test_edges_are_sorted_and_canonical():
    g = Graph(4, [(3, 1), (2, 0), (1, 0)])
    assert g.edges == ((0, 1), (0, 2), (1, 3))
    assert g.degrees() == [2, 2, 1, 1]


def test_builder_keeps_generation_order_and_tags():
    gb = GraphBuilder()
    a, b, c = gb.add_vertex("x"), gb.add_vertex(), gb.add_vertex("y")
    gb.add_path([a, b, c], "p")
    g = gb.build()
    assert (a, b, c) == (0, 1, 2)
    assert g.vtag == {0: "x", 2: "y"}
    assert g.etag == {(0, 1): "p", (1, 2): "p"}


def test_disjoint_union_offsets():
    g = disjoint_union(path_graph(2), cycle_graph(3))
    assert g.n == 5 and g.m == 4
    assert len(g.components()) == 2


class TestCaterpillarRecognition:
    def test_path(self):
        cat = recognize_caterpillar(path_graph(5))
        assert cat.spine == (1, 2, 3)
        assert cat.legs == {1: (0,), 2: (), 3: (4,)}

    def test_star(self):
        cat = recognize_caterpillar(star_graph(4))
        assert cat.spine == (0,)
        assert len(cat.legs[0]) == 4

    def test_cycle_is_not(self):
        assert recognize_caterpillar(cycle_graph(4)) is None

    def test_tiny(self):
        assert recognize_caterpillar(Graph(1)).spine == (0,)
        assert recognize_caterpillar(Graph(2, [(0, 1)])).legs == {0: (1,)}

    def test_spider_is_not(self):
        spider = Graph(7, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)])
        assert recognize_caterpillar(spider) is None

    @pytest.mark.parametrize("n", range(1, 10))
    def test_matches_definition_on_all_trees(self, n):
        for t in enumerate_free_trees(n):
            inner = [v for v in t.vertices() if t.degree(v) >= 2]
            sub = to_nx(t).subgraph(inner)
            expected = len(inner) <= 1 or (nx.is_tree(sub) and max(d for _, d in sub.degree()) <= 2)
            cat = recognize_caterpillar(t)
            assert (cat is not None) == expected
            if cat is not None and t.n > 2:
                assert set(cat.spine) == set(inner)
                assert all(t.has_edge(a, b) for a, b in zip(cat.spine, cat.spine[1:]))


class TestSeriesParallel:
    def test_k4(self):
        assert not is_series_parallel(complete_graph(4))

    def test_k25(self):
        assert is_series_parallel(complete_bipartite(2, 5))

    def test_k33(self):
        assert not is_series_parallel(complete_bipartite(3, 3))

    def test_single_vertex(self):
        assert is_series_parallel(Graph(1))

    @given(trees(min_n=2, max_n=12))
    def test_trees(self, t):
        assert is_series_parallel(t)

    def test_disconnected_rejected(self):
        with pytest.raises(ValueError):
            is_series_parallel(Graph(3, [(0, 1)]))

    def test_agrees_with_treewidth_on_atlas(self):
        for g in connected_atlas(7):
            assert is_series_parallel(g) == (treewidth(g) <= 2), g


class TestBipartite:
    def test_examples(self):
        assert is_bipartite(cycle_graph(4))
        assert not is_bipartite(cycle_graph(3))
        assert is_bipartite(Graph(3))

    @given(graphs(max_n=8))
    def test_matches_networkx(self, g):
        assert is_bipartite(g) == nx.is_bipartite(to_nx(g))


class TestEdgeList:
    def test_format(self):
        g = Graph(3, [(1, 2), (0, 1)], vtag={2: "leaf"}, etag={(0, 1): "spine"})
        assert write_edgelist(g) == "3 2\n0 1 # role=spine\n1 2\n# vertex 2 role=leaf\n"

    @given(graphs(max_n=9))
    def test_round_trip(self, g):
        back = read_edgelist(write_edgelist(g))
        assert back == g
        assert write_edgelist(back) == write_edgelist(g)

    def test_tags_round_trip(self):
        g = caterpillar_graph([2, 0, 1])
        back = read_edgelist(write_edgelist(g))
        assert back.vtag == g.vtag

    @pytest.mark.parametrize("text", ["", "3\n", "2 1\n0 1 2\n", "2 2\n0 1\n", "2 1\n0 1 # junk\n"])
    def test_malformed(self, text):
        with pytest.raises(ValueError):
            read_edgelist(text)
