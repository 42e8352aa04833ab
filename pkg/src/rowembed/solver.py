"""Exact subgraph-embedding search into finite products ``H x P_r``.

The search is plain backtracking with a few cheap prunings:

* guest vertices are placed in a connectivity-first order (most already placed
  neighbours, then highest degree, then lowest id), so every vertex after the
  first of its component is confined to the common neighbourhood of its
  placed neighbours;
* a cell is only used if its product degree is at least the guest degree, and
  if enough free neighbour cells remain for the vertex's unplaced neighbours
  (checked for the new vertex and for its placed neighbours);
* the first vertex is restricted to one representative per orbit of a known
  subgroup of product automorphisms.

Budget exhaustion yields ``Outcome.INCONCLUSIVE``, never ``NO``.
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Tuple

from .embedding import FREE, Embedding, OrientationConstraint, verify_embedding
from .graph import Graph, GraphBuilder
from .products import (CARTESIAN, HORIZONTAL, STRONG, VERTICAL, HostSpec,
                       build_product)
from .trees import enumerate_free_trees


class Outcome(enum.Enum):
    YES = "yes"
    NO = "no"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class SearchConfig:
    node_budget: int = 2_000_000
    ordering_seed: int = 0
    symmetry_breaking: bool = True
    constraint: Optional[OrientationConstraint] = None

    def __post_init__(self):
        if self.node_budget <= 0:
            raise ValueError("node_budget must be positive")


@dataclass
class SearchResult:
    outcome: Outcome
    embedding: Optional[Embedding] = None
    nodes: int = 0
    message: str = ""
    host_tree: Optional[Graph] = None

    def __bool__(self) -> bool:
        return self.outcome is Outcome.YES


class _Budget(Exception):
    pass


def _guest_order(g: Graph, seed: int) -> List[int]:
    tiebreak = list(range(g.n))
    if seed:
        random.Random(seed).shuffle(tiebreak)
    placed = [False] * g.n
    weight = [0] * g.n
    order: List[int] = []
    for _ in range(g.n):
        best = max((v for v in g.vertices() if not placed[v]),
                   key=lambda v: (weight[v], g.degree(v), -tiebreak[v]))
        placed[best] = True
        order.append(best)
        for w in g.neighbors(best):
            weight[w] += 1
    return order


def orbit_representatives(spec: HostSpec, allow_transpose: bool = True) -> List[Tuple[int, int]]:
    """Cells covering every orbit of the product under known automorphisms.

    Used automorphisms: row reversal for every host; host reversal for paths;
    spine reversal and leg permutations for caterpillars; leaf permutations
    for stars; transposition for square path hosts when ``allow_transpose``.
    """
    R = spec.rows
    rows = [r for r in range(R) if r <= R - 1 - r]
    if spec.kind == "path":
        a = spec.size
        hs = [h for h in range(a) if h <= a - 1 - h]
        cells = [(h, r) for h in hs for r in rows]
        if allow_transpose and a == R:
            cells = [(h, r) for h, r in cells if h <= r]
        return cells
    if spec.kind == "caterpillar":
        s, L = spec.spine, spec.legs
        half = [i for i in range(s) if i <= s - 1 - i]
        hs = sorted(half + [s + i * L for i in half])
        return [(h, r) for h in hs for r in rows]
    if spec.kind == "star":
        return [(h, r) for h in (0, 1) for r in rows]
    return [(h, r) for h in range(spec.host.n) for r in rows]


def embed_into(g: Graph, spec: HostSpec, cfg: Optional[SearchConfig] = None) -> SearchResult:
    """Search for an embedding of ``g`` into the finite product ``spec``."""
    cfg = cfg or SearchConfig()
    con = cfg.constraint
    if con is not None:
        con.check_against(g)
    if g.n == 0:
        return SearchResult(Outcome.YES, Embedding(g, spec, ()), 0)
    P = build_product(spec)
    R = spec.rows
    nbrs = [P.base.neighbors(c) for c in range(P.base.n)]
    cdeg = [len(a) for a in nbrs]
    if g.n > P.base.n or g.max_degree() > max(cdeg):
        return SearchResult(Outcome.NO, None, 0, "guest larger than host or degree too high")

    order = _guest_order(g, cfg.ordering_seed)
    pos = {v: i for i, v in enumerate(order)}
    earlier = [[w for w in g.neighbors(v) if pos[w] < i] for i, v in enumerate(order)]
    later_count = [sum(1 for w in g.neighbors(v) if pos[w] > i) for i, v in enumerate(order)]
    gdeg = [g.degree(v) for v in order]

    labels: List[List[str]] = []
    for i, v in enumerate(order):
        labels.append([con.label(v, w) if con else FREE for w in earlier[i]])

    transpose_ok = con is None or all(lab == FREE for lab in con.labels.values())
    if cfg.symmetry_breaking:
        first = sorted(h * R + r for h, r in orbit_representatives(spec, transpose_ok))
    else:
        first = list(range(P.base.n))
    all_cells = list(range(P.base.n))

    # Twins (same neighbours, same labels) are interchangeable, so each one
    # must take a higher cell than the previous twin in the order. The first
    # vertex's class is left alone: its cell is already fixed by ``first``.
    twin_prev = [-1] * g.n
    if cfg.symmetry_breaking:
        last: dict = {}
        for i, v in enumerate(order):
            key = (g.neighbors(v), tuple(con.label(v, w) if con else FREE
                                         for w in sorted(g.neighbors(v))))
            if i and key in last and last[key] != order[0]:
                twin_prev[i] = last[key]
            last[key] = v

    image = [-1] * g.n          # indexed by guest vertex
    used = bytearray(P.base.n)
    free_nbrs = list(cdeg)      # free neighbour cells per cell
    pending = [0] * g.n         # unplaced neighbours per placed guest vertex
    for i, v in enumerate(order):
        pending[v] = later_count[i]
    nodes = 0

    def occupy(c: int) -> None:
        used[c] = 1
        for d in nbrs[c]:
            free_nbrs[d] -= 1

    def release(c: int) -> None:
        used[c] = 0
        for d in nbrs[c]:
            free_nbrs[d] += 1

    def candidates(i: int) -> Iterable[int]:
        prev = earlier[i]
        if not prev:
            return first if i == 0 else all_cells
        cells = [image[w] for w in prev]
        base = sorted(nbrs[cells[0]])
        out = []
        for c in base:
            if used[c]:
                continue
            ok = True
            for j in range(1, len(cells)):
                if c not in nbrs[cells[j]]:
                    ok = False
                    break
            if not ok:
                continue
            for j, lab in enumerate(labels[i]):
                if lab == HORIZONTAL and c // R != cells[j] // R:
                    ok = False
                    break
                if lab == VERTICAL and c % R != cells[j] % R:
                    ok = False
                    break
            if ok:
                out.append(c)
        return out

    def search(i: int) -> bool:
        nonlocal nodes
        if i == g.n:
            return True
        v = order[i]
        need = later_count[i]
        floor = image[twin_prev[i]] if twin_prev[i] >= 0 else -1
        for c in candidates(i):
            if used[c] or cdeg[c] < gdeg[i] or c <= floor:
                continue
            nodes += 1
            if nodes > cfg.node_budget:
                raise _Budget
            if free_nbrs[c] < need:
                continue
            occupy(c)
            image[v] = c
            for w in earlier[i]:
                pending[w] -= 1
            ok = all(free_nbrs[image[w]] >= pending[w] for w in earlier[i])
            if ok and search(i + 1):
                return True
            for w in earlier[i]:
                pending[w] += 1
            image[v] = -1
            release(c)
        return False

    try:
        found = search(0)
    except _Budget:
        return SearchResult(Outcome.INCONCLUSIVE, None, nodes,
                            f"node budget {cfg.node_budget} exhausted")
    if not found:
        return SearchResult(Outcome.NO, None, nodes)
    emb = Embedding(g, spec, tuple(divmod(image[v], R) for v in g.vertices()))
    report = verify_embedding(emb, con)
    if not report.ok:
        raise AssertionError(f"solver produced an invalid embedding:\n{report}")
    return SearchResult(Outcome.YES, emb, nodes)


# -- per-component deciders --------------------------------------------------

def _combine(g: Graph, parts: Sequence[Tuple[List[int], Embedding]], host: HostSpec,
             row_offsets: Sequence[int], h_offsets: Sequence[int]) -> Embedding:
    cells: List[Tuple[int, int]] = [(0, 0)] * g.n
    for (verts, emb), ro, ho in zip(parts, row_offsets, h_offsets):
        for i, v in enumerate(verts):
            h, r = emb.map[i]
            cells[v] = (h + ho, r + ro)
    return Embedding(g, host, tuple(cells))


def _per_component(g: Graph, make_spec, cfg: Optional[SearchConfig]) -> SearchResult:
    parts = []
    nodes = 0
    inconclusive = ""
    for comp in g.components():
        sub, verts = g.induced(comp)
        res = embed_into(sub, make_spec(len(comp)), cfg)
        nodes += res.nodes
        if res.outcome is Outcome.NO:
            return SearchResult(Outcome.NO, None, nodes, f"component of size {len(comp)} does not embed")
        if res.outcome is Outcome.INCONCLUSIVE:
            inconclusive = res.message
            continue
        parts.append((verts, res.embedding))
    if inconclusive:
        return SearchResult(Outcome.INCONCLUSIVE, None, nodes, inconclusive)
    if not parts:
        return SearchResult(Outcome.YES, Embedding(g, make_spec(1), ()), nodes)
    biggest = max(len(v) for v, _ in parts)
    total_rows = sum(len(v) for v, _ in parts)
    host = make_spec(biggest).with_rows(total_rows)
    offsets, acc = [], 0
    for v, _ in parts:
        offsets.append(acc)
        acc += len(v)
    emb = _combine(g, parts, host, offsets, [0] * len(parts))
    assert verify_embedding(emb).ok
    return SearchResult(Outcome.YES, emb, nodes)


def king_embeddable(g: Graph, cfg: Optional[SearchConfig] = None) -> SearchResult:
    """Is ``g`` a subgraph of the king's graph? Decided per component on an n x n board."""
    return _per_component(g, lambda n: HostSpec.path(n, n, STRONG), cfg)


ROW_PARAMS = ("pathwidth", "treedepth", "simple-pathwidth")


def canonical_host(param: str, n: int, product: str = STRONG) -> HostSpec:
    """Truncated host of width-1 for ``param``, big enough for a connected n-vertex guest."""
    if param == "pathwidth":
        return HostSpec.caterpillar(n, n, n, product)
    if param == "treedepth":
        return HostSpec.star(n, n, product)
    if param == "simple-pathwidth":
        return HostSpec.path(n, n, product)
    raise ValueError(f"unknown row parameter {param!r}")


def row_param_one(g: Graph, param: str, cfg: Optional[SearchConfig] = None) -> SearchResult:
    return _per_component(g, lambda n: canonical_host(param, n), cfg)


DEFAULT_TREE_CAP = 9


def row_treewidth_one(g: Graph, cap: int = DEFAULT_TREE_CAP,
                      cfg: Optional[SearchConfig] = None) -> SearchResult:
    """Does ``g`` embed in ``T x P`` for some tree ``T``?

    Each component of size n is tried against every free tree with at most n
    vertices and n rows. The witness host joins the per-component trees into
    one tree.
    """
    found: List[Tuple[List[int], Graph, Embedding]] = []
    nodes = 0
    for comp in g.components():
        if len(comp) > cap:
            return SearchResult(Outcome.INCONCLUSIVE, None, nodes,
                                f"component of size {len(comp)} exceeds tree cap {cap}")
        sub, verts = g.induced(comp)
        hit = None
        budget_hit = False
        for size in range(1, len(comp) + 1):
            for t in enumerate_free_trees(size):
                res = embed_into(sub, HostSpec.tree(t, len(comp)), cfg)
                nodes += res.nodes
                if res.outcome is Outcome.YES:
                    hit = (verts, t, res.embedding)
                    break
                if res.outcome is Outcome.INCONCLUSIVE:
                    budget_hit = True
            if hit:
                break
        if hit is None:
            if budget_hit:
                return SearchResult(Outcome.INCONCLUSIVE, None, nodes, "node budget exhausted")
            return SearchResult(Outcome.NO, None, nodes,
                                f"component of size {len(comp)} fits no tree host")
        found.append(hit)
    if not found:
        t = Graph(1)
        return SearchResult(Outcome.YES, Embedding(g, HostSpec.tree(t, 1), ()), nodes, host_tree=t)
    gb = GraphBuilder()
    h_offsets = []
    for k, (_, t, _) in enumerate(found):
        base = gb.n
        h_offsets.append(base)
        for _ in range(t.n):
            gb.add_vertex()
        for a, b in t.edges:
            gb.add_edge(base + a, base + b)
        if k:
            gb.add_edge(h_offsets[k - 1], base)
    tree = gb.build()
    rows = max(len(v) for v, _, _ in found)
    host = HostSpec.tree(tree, rows)
    emb = _combine(g, [(v, e) for v, _, e in found], host, [0] * len(found), h_offsets)
    assert verify_embedding(emb).ok
    return SearchResult(Outcome.YES, emb, nodes, host_tree=tree)


__all__ = [
    "CARTESIAN", "DEFAULT_TREE_CAP", "Outcome", "ROW_PARAMS", "SearchConfig", "SearchResult",
    "canonical_host", "embed_into", "enumerate_free_trees", "king_embeddable",
    "orbit_representatives", "row_param_one", "row_treewidth_one",
]
