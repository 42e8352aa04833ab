import networkx as nx
import pytest
from hypothesis import given, strategies as st

from conftest import to_nx, trees
from rowembed.graph import complete_graph, star_graph
from rowembed.products import (CARTESIAN, DIAGONAL, HORIZONTAL, STRONG, VERTICAL, HostSpec,
                               SizeLimitError, build_product, edge_orientation,
                               product_edge_count)


def test_two_by_two_strong_is_k4():
    p = build_product(HostSpec.path(2, 2, STRONG))
    assert p.base == complete_graph(4)


def test_three_by_three_strong():
    p = build_product(HostSpec.path(3, 3, STRONG))
    assert (p.base.n, p.base.m) == (9, 20)
    assert p.orientation_counts() == {HORIZONTAL: 6, VERTICAL: 6, DIAGONAL: 8}


def test_three_by_three_grid():
    p = build_product(HostSpec.path(3, 3, CARTESIAN))
    assert (p.base.n, p.base.m) == (9, 12)
    assert nx.is_isomorphic(to_nx(p.base), nx.grid_2d_graph(3, 3))


@pytest.mark.parametrize("args,expected", [
    ((3, 2, 3, STRONG), 20), ((1, 0, 5, STRONG), 4), ((3, 2, 3, CARTESIAN), 12),
    ((4, 3, 1, STRONG), 3), ((0, 0, 4, STRONG), 0),
])
def test_edge_count_formula(args, expected):
    assert product_edge_count(*args) == expected


def test_edge_count_rejects_negative():
    with pytest.raises(ValueError):
        product_edge_count(-1, 0, 2)


@pytest.mark.parametrize("product,degrees", [(STRONG, (3, 5, 8)), (CARTESIAN, (2, 3, 4))])
def test_king_and_grid_degrees(product, degrees):
    p = build_product(HostSpec.path(5, 5, product))
    deg = {c: p.base.degree(p.vid(*c)) for c in p.coords}
    corner, side, inner = degrees
    assert deg[(0, 0)] == deg[(4, 4)] == corner
    assert deg[(0, 2)] == deg[(2, 4)] == side
    assert deg[(2, 2)] == inner


hosts = st.one_of(
    st.builds(HostSpec.path, st.integers(1, 8), st.integers(1, 8), st.sampled_from([STRONG, CARTESIAN])),
    st.builds(HostSpec.star, st.integers(1, 7), st.integers(1, 8), st.sampled_from([STRONG, CARTESIAN])),
    st.builds(HostSpec.caterpillar, st.integers(1, 3), st.integers(1, 2), st.integers(1, 8),
              st.sampled_from([STRONG, CARTESIAN])),
)


@given(hosts)
def test_build_matches_formula(spec):
    p = build_product(spec)
    H = spec.host
    assert p.base.m == product_edge_count(H.n, H.m, spec.rows, spec.product)
    assert p.base.n == spec.n_cells


@given(hosts)
def test_adjacency_matches_materialized_product(spec):
    p = build_product(spec)
    for u, v in p.base.edges:
        assert spec.adjacent(p.coords[u], p.coords[v])
    for c in p.coords:
        assert spec.cell_degree(c) == p.base.degree(p.vid(*c))


@given(trees(min_n=1, max_n=7), st.integers(1, 4))
def test_tree_host_matches_networkx(t, rows):
    p = build_product(HostSpec.tree(t, rows, STRONG))
    ref = nx.strong_product(to_nx(t), nx.path_graph(rows))
    assert p.base.m == ref.number_of_edges()
    p = build_product(HostSpec.tree(t, rows, CARTESIAN))
    assert p.base.m == nx.cartesian_product(to_nx(t), nx.path_graph(rows)).number_of_edges()


def test_host_numbering():
    cat = HostSpec.caterpillar(3, 2, 1).host
    assert sorted(cat.neighbors(1)) == [0, 2, 5, 6]
    assert HostSpec.star(4, 1).host == star_graph(4)


def test_orientation_classification():
    assert edge_orientation((0, 3), (0, 4)) == HORIZONTAL
    assert edge_orientation((0, 3), (1, 3)) == VERTICAL
    assert edge_orientation((0, 3), (1, 4)) == DIAGONAL


def test_size_cap():
    with pytest.raises(SizeLimitError, match="limit"):
        build_product(HostSpec.path(100, 100), cap=1000)


@pytest.mark.parametrize("bad", [
    dict(kind="path", size=0), dict(kind="star", size=0), dict(kind="bridge", size=3),
    dict(kind="path", size=2, rows=0), dict(kind="caterpillar", spine=2, legs=0),
    dict(kind="path", size=2, product="tensor"),
])
def test_bad_specs(bad):
    with pytest.raises(ValueError):
        HostSpec(**bad)


def test_tree_host_must_be_a_tree():
    from rowembed.graph import cycle_graph
    with pytest.raises(ValueError):
        HostSpec.tree(cycle_graph(3), 2)


def test_json_round_trip():
    for spec in (HostSpec.path(3, 4), HostSpec.caterpillar(2, 3, 5, CARTESIAN), HostSpec.star(4, 2)):
        assert HostSpec.from_json(spec.to_json(), spec.rows) == spec
