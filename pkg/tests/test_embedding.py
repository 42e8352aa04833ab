import itertools

import pytest
from hypothesis import given, strategies as st

from conftest import graphs
from rowembed.embedding import (Embedding, EmbeddingError, Layering, OrientationConstraint,
                                embedding_from_json, layer_span, loads_embedding,
                                verify_embedding, verify_layering)
from rowembed.graph import Graph, complete_graph, cycle_graph, path_graph, star_graph
from rowembed.products import DIAGONAL, HORIZONTAL, STRONG, VERTICAL, HostSpec
from rowembed.transforms import universal_vertex

K4_CELLS = ((0, 0), (0, 1), (1, 0), (1, 1))


def test_k4_in_two_by_two_block():
    emb = Embedding(complete_graph(4), HostSpec.path(2, 2), K4_CELLS)
    assert verify_embedding(emb).ok


def test_non_injective():
    emb = Embedding(path_graph(3), HostSpec.path(2, 2), ((0, 0), (1, 1), (0, 0)))
    rep = verify_embedding(emb)
    assert not rep.ok
    assert rep.kinds() == {"non-injective"}


def test_non_edge_and_outside():
    emb = Embedding(path_graph(3), HostSpec.path(3, 3), ((0, 0), (2, 2), (5, 0)))
    assert verify_embedding(emb).kinds() == {"non-edge", "outside-host"}


def test_partial_map_raises():
    with pytest.raises(EmbeddingError):
        verify_embedding(Embedding(path_graph(3), HostSpec.path(2, 2), ((0, 0), (0, 1))))


def test_violation_limit():
    g = Graph(10)
    emb = Embedding(g, HostSpec.path(1, 1), ((0, 0),) * 10)
    rep = verify_embedding(emb, limit=3)
    assert len(rep.violations) == 3 and rep.truncated
    assert "non-injective" in str(rep)


def test_orientation_constraint():
    g = path_graph(3)
    emb = Embedding(g, HostSpec.path(3, 3), ((0, 0), (0, 1), (1, 2)))
    assert emb.orientation(0, 1) == HORIZONTAL
    assert emb.orientation(1, 2) == DIAGONAL
    ok = OrientationConstraint({(1, 0): HORIZONTAL})
    bad = OrientationConstraint({(1, 2): VERTICAL})
    assert verify_embedding(emb, ok).ok
    assert verify_embedding(emb, bad).kinds() == {"orientation"}


def test_constraint_validation():
    with pytest.raises(ValueError):
        OrientationConstraint({(0, 1): "sideways"})
    with pytest.raises(ValueError):
        OrientationConstraint({(0, 2): HORIZONTAL}).check_against(path_graph(3))


@given(graphs(max_n=6), st.integers(0, 2 ** 32 - 1))
def test_orientation_is_definitional(g, seed):
    import random
    rng = random.Random(seed)
    cells = rng.sample([(h, r) for h in range(4) for r in range(4)], g.n)
    emb = Embedding(g, HostSpec.path(4, 4), tuple(cells))
    for u, v in g.edges:
        a, b = cells[u], cells[v]
        kind = emb.orientation(u, v)
        assert (kind == HORIZONTAL) == (a[0] == b[0])
        assert (kind == VERTICAL) == (a[1] == b[1] and a[0] != b[0])


def test_json_round_trip():
    g = complete_graph(4)
    emb = Embedding(g, HostSpec.path(2, 2), K4_CELLS)
    assert loads_embedding(emb.dumps(), g) == emb
    assert embedding_from_json(emb.to_json(), g) == emb
    assert emb.dumps() == Embedding(g, HostSpec.path(2, 2), K4_CELLS).dumps()


class TestLayering:
    def test_path_examples(self):
        g = path_graph(3)
        assert verify_layering(g, Layering.from_values([0, 1, 2]))
        assert not verify_layering(g, Layering.from_values([0, 2, 0]))
        assert layer_span(g, Layering.from_values([0, 1, 2])) == 3

    def test_single_layer(self):
        g = star_graph(4)
        assert verify_layering(g, Layering.from_values([0] * 5))
        assert layer_span(g, Layering.from_values([7] * 5)) == 1

    def test_shift_only(self):
        assert Layering.from_values([5, 7, 6]).layer_of == (0, 2, 1)
        assert not verify_layering(path_graph(2), Layering.from_values([3, 5]))

    def test_invalid_span_raises(self):
        with pytest.raises(ValueError):
            layer_span(path_graph(2), Layering.from_values([0, 2]))

    def test_wrong_length(self):
        with pytest.raises(ValueError):
            verify_layering(path_graph(3), Layering.from_values([0, 0]))

    def test_c4_plus_universal(self):
        g = universal_vertex(cycle_graph(4)).output
        spans = set()
        for lay in itertools.product(range(g.n), repeat=g.n):
            lv = Layering.from_values(lay)
            if verify_layering(g, lv):
                spans.add(layer_span(g, lv))
        assert max(spans) <= 3 and 1 in spans

    @given(graphs(max_n=7))
    def test_constant_layering_always_valid(self, g):
        assert layer_span(g, Layering.from_values([0] * g.n)) == min(1, g.n)
