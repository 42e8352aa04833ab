import itertools
import os
import random

import networkx as nx
import pytest
from hypothesis import HealthCheck, settings, strategies as st

from rowembed.graph import Graph

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("thorough", max_examples=400, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


def from_nx(G) -> Graph:
    idx = {v: i for i, v in enumerate(G.nodes())}
    return Graph(len(idx), [(idx[u], idx[v]) for u, v in G.edges()])


def to_nx(g: Graph):
    G = nx.Graph()
    G.add_nodes_from(g.vertices())
    G.add_edges_from(g.edges)
    return G


def connected_atlas(max_n: int):
    """All connected graphs on 1..max_n vertices up to isomorphism (max_n <= 7)."""
    return [from_nx(G) for G in nx.graph_atlas_g()[1:]
            if G.number_of_nodes() <= max_n and nx.is_connected(G)]


def prufer_tree(seq, n: int) -> Graph:
    if n == 1:
        return Graph(1)
    if n == 2:
        return Graph(2, [(0, 1)])
    return from_nx(nx.from_prufer_sequence(list(seq)))


@st.composite
def graphs(draw, min_n=1, max_n=7, connected=False):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    g = Graph(n, chosen)
    if connected and not g.is_connected():
        comps = g.components()
        extra = [(comps[i][0], comps[i + 1][0]) for i in range(len(comps) - 1)]
        g = Graph(n, list(g.edges) + extra)
    return g


@st.composite
def trees(draw, min_n=1, max_n=9):
    n = draw(st.integers(min_n, max_n))
    seq = draw(st.lists(st.integers(0, max(n - 1, 0)), min_size=max(n - 2, 0),
                        max_size=max(n - 2, 0)))
    return prufer_tree(seq, n)


def treewidth(g: Graph) -> int:
    """Exact treewidth by dynamic programming over vertex subsets."""
    n = g.n
    if n == 0:
        return -1
    nbr = [0] * n
    for u, v in g.edges:
        nbr[u] |= 1 << v
        nbr[v] |= 1 << u

    def q(s: int, v: int) -> int:
        # vertices outside s | v reachable from v through s
        seen, stack, out = 1 << v, [v], 0
        while stack:
            u = stack.pop()
            for w in range(n):
                if nbr[u] >> w & 1 and not seen >> w & 1:
                    seen |= 1 << w
                    if s >> w & 1:
                        stack.append(w)
                    else:
                        out += 1
        return out

    best = {0: -1}
    for s in range(1, 1 << n):
        best[s] = min(max(best[s & ~(1 << v)], q(s & ~(1 << v), v))
                      for v in range(n) if s >> v & 1)
    return best[(1 << n) - 1]


@pytest.fixture
def rng():
    return random.Random(12345)
