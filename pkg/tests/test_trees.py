import itertools

import networkx as nx
import pytest
from hypothesis import given

from conftest import prufer_tree, to_nx, trees
from rowembed.graph import Graph
from rowembed.trees import (MAX_TREE_SIZE, canonical_tree_code, count_free_trees,
                            enumerate_free_trees, tree_centers)

KNOWN_COUNTS = [0, 1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235]


@pytest.mark.parametrize("n", range(12))
def test_counts(n):
    assert count_free_trees(n) == KNOWN_COUNTS[n]


@pytest.mark.parametrize("n", range(1, 9))
def test_trees_are_distinct_trees(n):
    ts = list(enumerate_free_trees(n))
    assert all(t.n == n and t.is_tree() for t in ts)
    for a, b in itertools.combinations(ts, 2):
        assert not nx.is_isomorphic(to_nx(a), to_nx(b))


@pytest.mark.parametrize("n", range(3, 8))
def test_all_labelled_trees_classified(n):
    """Every Pruefer sequence lands on exactly one enumerated class."""
    codes = {canonical_tree_code(t) for t in enumerate_free_trees(n)}
    seen = set()
    for seq in itertools.product(range(n), repeat=n - 2):
        code = canonical_tree_code(prufer_tree(seq, n))
        assert code in codes
        seen.add(code)
    assert seen == codes


@given(trees(min_n=1, max_n=11))
def test_code_is_isomorphism_invariant(t):
    import random
    perm = list(range(t.n))
    random.Random(t.n).shuffle(perm)
    relabelled = Graph(t.n, [(perm[u], perm[v]) for u, v in t.edges])
    assert canonical_tree_code(relabelled) == canonical_tree_code(t)


@given(trees(min_n=1, max_n=11))
def test_centers_match_networkx(t):
    if t.n == 1:
        assert tree_centers(t) == [0]
    else:
        assert tree_centers(t) == sorted(nx.center(to_nx(t)))


def test_rejects_non_tree_and_cap():
    with pytest.raises(ValueError):
        canonical_tree_code(Graph(3, [(0, 1), (1, 2), (0, 2)]))
    with pytest.raises(ValueError):
        list(enumerate_free_trees(MAX_TREE_SIZE + 1))
