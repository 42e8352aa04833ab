"""Free (unlabelled) tree enumeration by canonical augmentation.

Trees on ``n`` vertices are produced by attaching a leaf to every vertex of
every tree on ``n - 1`` vertices and keeping one tree per canonical form.
The canonical form is the AHU encoding rooted at the center (the smaller of
the two encodings for bicentral trees).
"""

from __future__ import annotations

from functools import lru_cache
from typing import Dict, Iterator, List, Tuple

from .graph import Graph

MAX_TREE_SIZE = 14


def tree_centers(g: Graph) -> List[int]:
    if g.n <= 2:
        return list(range(g.n))
    deg = g.degrees()
    layer = [v for v in g.vertices() if deg[v] == 1]
    remaining = g.n
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for v in layer:
            for w in g.neighbors(v):
                deg[w] -= 1
                if deg[w] == 1:
                    nxt.append(w)
            deg[v] = 0
        layer = nxt
    return sorted(layer)


def _encode(g: Graph, root: int, parent: int) -> str:
    kids = sorted(_encode(g, w, root) for w in g.neighbors(root) if w != parent)
    return "(" + "".join(kids) + ")"


def canonical_tree_code(g: Graph) -> str:
    if not g.is_tree():
        raise ValueError("canonical_tree_code expects a tree")
    return min(_encode(g, c, -1) for c in tree_centers(g))


def _tree_from_code(code: str) -> Graph:
    """Rebuild a tree from its encoding; vertex ids in preorder."""
    edges: List[Tuple[int, int]] = []
    stack: List[int] = []
    n = 0
    for ch in code:
        if ch == "(":
            if stack:
                edges.append((stack[-1], n))
            stack.append(n)
            n += 1
        else:
            stack.pop()
    return Graph(n, edges)


@lru_cache(maxsize=None)
def _codes(n: int) -> Tuple[str, ...]:
    if n < 1:
        return ()
    if n == 1:
        return ("()",)
    seen: Dict[str, None] = {}
    for code in _codes(n - 1):
        t = _tree_from_code(code)
        edges = list(t.edges)
        for v in t.vertices():
            grown = Graph(t.n + 1, edges + [(v, t.n)])
            seen.setdefault(canonical_tree_code(grown), None)
    return tuple(sorted(seen))


def enumerate_free_trees(n: int) -> Iterator[Graph]:
    """One tree per isomorphism class on exactly ``n`` vertices."""
    if n > MAX_TREE_SIZE:
        raise ValueError(f"tree enumeration capped at {MAX_TREE_SIZE} vertices")
    for code in _codes(n):
        yield _tree_from_code(code)


def count_free_trees(n: int) -> int:
    return len(_codes(n))
