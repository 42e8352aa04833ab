"""Simple undirected graphs with dense integer vertex ids, plus recognizers.

Graphs are immutable once built. Generators use :class:`GraphBuilder`, which
hands out ids in creation order so that the ids of a generated graph reflect
how it was generated.
"""

from __future__ import annotations

import io
from collections import deque
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

Edge = Tuple[int, int]


def edge_key(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


class Graph:
    """Finite simple undirected graph on vertices ``0..n-1``.

    ``vtag`` and ``etag`` are optional role annotations (vertex -> str and
    edge -> str); edges in ``etag`` are keyed by ``edge_key``.
    """

    __slots__ = ("n", "edges", "_adj", "vtag", "etag")

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = (),
                 vtag: Optional[Dict[int, str]] = None,
                 etag: Optional[Dict[Edge, str]] = None):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        adj: List[set] = [set() for _ in range(n)]
        keys = []
        for e in edges:
            u, v = int(e[0]), int(e[1])
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if v in adj[u]:
                raise ValueError(f"duplicate edge ({u}, {v})")
            adj[u].add(v)
            adj[v].add(u)
            keys.append(edge_key(u, v))
        self.n = n
        self.edges: Tuple[Edge, ...] = tuple(sorted(keys))
        self._adj = tuple(frozenset(a) for a in adj)
        self.vtag: Dict[int, str] = dict(vtag or {})
        self.etag: Dict[Edge, str] = {edge_key(*e): t for e, t in (etag or {}).items()}
        for v in self.vtag:
            if not 0 <= v < n:
                raise ValueError(f"tag on unknown vertex {v}")
        for e in self.etag:
            if e[1] not in self._adj[e[0]]:
                raise ValueError(f"tag on non-edge {e}")

    # -- basic queries --------------------------------------------------

    @property
    def m(self) -> int:
        return len(self.edges)

    def vertices(self) -> range:
        return range(self.n)

    def neighbors(self, v: int) -> frozenset:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def degrees(self) -> List[int]:
        return [len(a) for a in self._adj]

    def max_degree(self) -> int:
        return max((len(a) for a in self._adj), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj[u]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    # -- structure ------------------------------------------------------

    def components(self) -> List[List[int]]:
        """Connected components, each sorted, ordered by smallest vertex."""
        seen = [False] * self.n
        out = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            comp = [s]
            queue = deque([s])
            while queue:
                u = queue.popleft()
                for w in self._adj[u]:
                    if not seen[w]:
                        seen[w] = True
                        comp.append(w)
                        queue.append(w)
            out.append(sorted(comp))
        return out

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    def is_tree(self) -> bool:
        return self.n >= 1 and self.m == self.n - 1 and self.is_connected()

    def induced(self, vertices: Sequence[int]) -> Tuple["Graph", List[int]]:
        """Induced subgraph relabelled to ``0..k-1`` in the given order.

        Returns the subgraph and the list mapping new ids to old ids.
        """
        index = {v: i for i, v in enumerate(vertices)}
        edges = [(index[u], index[v]) for u, v in self.edges if u in index and v in index]
        vtag = {index[v]: t for v, t in self.vtag.items() if v in index}
        etag = {(index[u], index[v]): t for (u, v), t in self.etag.items()
                if u in index and v in index}
        return Graph(len(vertices), edges, vtag, etag), list(vertices)

    def relabel(self, order: Sequence[int]) -> "Graph":
        """Graph with old vertex ``order[i]`` renamed to ``i``."""
        if sorted(order) != list(range(self.n)):
            raise ValueError("relabel order must be a permutation")
        return self.induced(order)[0]

    def add_edges(self, extra: Iterable[Edge], etag: Optional[str] = None) -> "Graph":
        extra = list(extra)
        tags = dict(self.etag)
        if etag is not None:
            tags.update({edge_key(*e): etag for e in extra})
        return Graph(self.n, list(self.edges) + extra, self.vtag, tags)


@dataclass
class GraphBuilder:
    """Mutable accumulator used by the generators."""

    n: int = 0
    edges: List[Edge] = field(default_factory=list)
    vtag: Dict[int, str] = field(default_factory=dict)
    etag: Dict[Edge, str] = field(default_factory=dict)

    def add_vertex(self, tag: Optional[str] = None) -> int:
        v = self.n
        self.n += 1
        if tag is not None:
            self.vtag[v] = tag
        return v

    def add_edge(self, u: int, v: int, tag: Optional[str] = None) -> Edge:
        e = edge_key(u, v)
        self.edges.append(e)
        if tag is not None:
            self.etag[e] = tag
        return e

    def add_path(self, vertices: Sequence[int], tag: Optional[str] = None) -> List[Edge]:
        return [self.add_edge(a, b, tag) for a, b in zip(vertices, vertices[1:])]

    def build(self) -> Graph:
        return Graph(self.n, self.edges, self.vtag, self.etag)


# -- standard families ------------------------------------------------------

def empty_graph(n: int) -> Graph:
    return Graph(n)


def path_graph(k: int) -> Graph:
    return Graph(k, [(i, i + 1) for i in range(k - 1)])


def cycle_graph(k: int) -> Graph:
    if k < 3:
        raise ValueError("cycles need at least 3 vertices")
    return Graph(k, [(i, (i + 1) % k) for i in range(k)])


def complete_graph(k: int) -> Graph:
    return Graph(k, [(i, j) for i in range(k) for j in range(i + 1, k)])


def star_graph(leaves: int) -> Graph:
    """``K_{1,leaves}`` with the center at vertex 0."""
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def caterpillar_graph(legs: Sequence[int]) -> Graph:
    """Caterpillar whose spine vertex ``i`` (ids ``0..k-1``) carries ``legs[i]`` leaves."""
    k = len(legs)
    gb = GraphBuilder()
    spine = [gb.add_vertex("spine") for _ in range(k)]
    gb.add_path(spine)
    for i, c in enumerate(legs):
        for _ in range(c):
            gb.add_edge(spine[i], gb.add_vertex("leg"))
    return gb.build()


def disjoint_union(*graphs: Graph) -> Graph:
    gb = GraphBuilder()
    for g in graphs:
        base = gb.n
        for v in g.vertices():
            gb.add_vertex(g.vtag.get(v))
        for u, v in g.edges:
            gb.add_edge(base + u, base + v, g.etag.get((u, v)))
    return gb.build()


# -- recognizers ------------------------------------------------------------

@dataclass(frozen=True)
class Caterpillar:
    spine: Tuple[int, ...]
    legs: Dict[int, Tuple[int, ...]]

    def profile(self, g: Graph) -> List[int]:
        return [g.degree(v) for v in self.spine]


def recognize_caterpillar(g: Graph) -> Optional[Caterpillar]:
    """Spine (non-leaf vertices in path order) and legs, or ``None``.

    K_1 and K_2 get the lowest-id vertex as a one-vertex spine. For longer
    spines the walk starts at the end with the smaller id.
    """
    if not g.is_tree():
        return None
    if g.n <= 2:
        legs = {0: tuple(range(1, g.n))}
        return Caterpillar((0,), legs)
    inner = [v for v in g.vertices() if g.degree(v) >= 2]
    inner_set = set(inner)
    spine_nbrs = {v: sorted(w for w in g.neighbors(v) if w in inner_set) for v in inner}
    if any(len(ws) > 2 for ws in spine_nbrs.values()):
        return None
    ends = [v for v in inner if len(spine_nbrs[v]) <= 1]
    walk = [min(ends)]
    prev = -1
    while len(walk) < len(inner):
        nxt = [w for w in spine_nbrs[walk[-1]] if w != prev]
        prev = walk[-1]
        walk.append(nxt[0])
    legs = {v: tuple(sorted(w for w in g.neighbors(v) if w not in inner_set)) for v in walk}
    return Caterpillar(tuple(walk), legs)


def is_bipartite(g: Graph) -> bool:
    color = [-1] * g.n
    for s in g.vertices():
        if color[s] >= 0:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.neighbors(u):
                if color[w] < 0:
                    color[w] = 1 - color[u]
                    queue.append(w)
                elif color[w] == color[u]:
                    return False
    return True


def is_series_parallel(g: Graph) -> bool:
    """True iff the connected graph ``g`` reduces to one edge.

    Reductions: delete degree-1 vertices, suppress degree-2 vertices, merge
    parallel edges. Parallel edges are merged on the fly by keeping neighbour
    sets. K_1 counts as series-parallel (treewidth 0).
    """
    if not g.is_connected():
        raise ValueError("is_series_parallel expects a connected graph")
    if g.n <= 2:
        return True
    nbrs = [set(g.neighbors(v)) for v in g.vertices()]
    alive = g.n
    queue = deque(v for v in g.vertices() if len(nbrs[v]) <= 2)
    gone = [False] * g.n
    while queue and alive > 2:
        v = queue.popleft()
        if gone[v] or len(nbrs[v]) > 2:
            continue
        ns = list(nbrs[v])
        if len(ns) == 1:
            (a,) = ns
            nbrs[a].discard(v)
            touched = [a]
        elif len(ns) == 2:
            a, b = ns
            nbrs[a].discard(v)
            nbrs[b].discard(v)
            nbrs[a].add(b)
            nbrs[b].add(a)
            touched = [a, b]
        else:
            touched = []
        nbrs[v].clear()
        gone[v] = True
        alive -= 1
        for a in touched:
            if len(nbrs[a]) <= 2:
                queue.append(a)
    return alive <= 2


# -- edge-list text format ------------------------------------------------------

def _fmt_tags(tags: Dict[str, str]) -> str:
    return " ".join(f"{k}={v}" for k, v in sorted(tags.items()))


def _parse_tags(text: str) -> Dict[str, str]:
    out = {}
    for tok in text.split():
        if "=" not in tok:
            raise ValueError(f"malformed tag {tok!r}")
        k, v = tok.split("=", 1)
        out[k] = v
    return out


def write_edgelist(g: Graph) -> str:
    """Serialize as ``n m`` then ``u v [# role=...]`` lines, edges sorted.

    Vertex roles follow as ``# vertex v role=...`` lines.
    """
    buf = io.StringIO()
    buf.write(f"{g.n} {g.m}\n")
    for u, v in g.edges:
        tag = g.etag.get((u, v))
        buf.write(f"{u} {v}" + (f" # role={tag}" if tag is not None else "") + "\n")
    for v in sorted(g.vtag):
        buf.write(f"# vertex {v} role={g.vtag[v]}\n")
    return buf.getvalue()


def read_edgelist(text: str) -> Graph:
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise ValueError("empty edge list")
    header = lines[0].split()
    if len(header) != 2:
        raise ValueError(f"bad header line {lines[0]!r}; expected 'n m'")
    n, m = int(header[0]), int(header[1])
    edges: List[Edge] = []
    etag: Dict[Edge, str] = {}
    vtag: Dict[int, str] = {}
    for ln in lines[1:]:
        if ln.startswith("#"):
            body = ln[1:].split()
            if len(body) >= 2 and body[0] == "vertex":
                tags = _parse_tags(" ".join(body[2:]))
                if "role" in tags:
                    vtag[int(body[1])] = tags["role"]
            continue
        data, _, comment = ln.partition("#")
        parts = data.split()
        if len(parts) != 2:
            raise ValueError(f"bad edge line {ln!r}")
        e = edge_key(int(parts[0]), int(parts[1]))
        edges.append(e)
        tags = _parse_tags(comment) if comment.strip() else {}
        if "role" in tags:
            etag[e] = tags["role"]
    if len(edges) != m:
        raise ValueError(f"header says {m} edges, found {len(edges)}")
    return Graph(n, edges, vtag, etag)
