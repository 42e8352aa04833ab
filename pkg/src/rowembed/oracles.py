"""Exhaustive reference procedures.

They are slow on purpose and share no search code with the solver: the
NAE check walks all assignments, 3-partition tries every split into
triples, and ``naive_embed`` recomputes product adjacency from the host
tree's edge list rather than asking :class:`HostSpec`.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Any, List, Optional, Tuple

from .embedding import Embedding
from .graph import Graph
from .logic_engine import NaeInstance
from .partition import PartitionInstance
from .products import STRONG, HostSpec

NAE_CAP = 24
PARTITION_CAP = 4
EMBED_GUEST_CAP = 7
EMBED_CELL_CAP = 60


@dataclass(frozen=True)
class OracleReport:
    answer: bool
    witness: Optional[Any] = None
    nodes: int = 0

    def __post_init__(self):
        if self.answer != (self.witness is not None):
            raise ValueError("witness must be present exactly when the answer is yes")

    def __bool__(self) -> bool:
        return self.answer


def nae_satisfiable(inst: NaeInstance) -> OracleReport:
    if inst.n > NAE_CAP:
        raise ValueError(f"nae oracle is capped at {NAE_CAP} variables")
    nodes = 0
    for bits in itertools.product((False, True), repeat=inst.n):
        nodes += 1
        if all(len({bits[abs(x) - 1] == (x > 0) for x in c}) == 2 for c in inst.clauses):
            return OracleReport(True, list(bits), nodes)
    return OracleReport(False, None, nodes)


def three_partition(inst: PartitionInstance) -> OracleReport:
    """Try every way to split the indices into ``n`` unordered triples."""
    if inst.n > PARTITION_CAP:
        raise ValueError(f"3-partition oracle is capped at n={PARTITION_CAP}")
    counter = [0]

    def split(rest: Tuple[int, ...]) -> Optional[List[List[int]]]:
        counter[0] += 1
        if not rest:
            return []
        first = rest[0]
        for pair in itertools.combinations(rest[1:], 2):
            trio = (first,) + pair
            if sum(inst.a[i] for i in trio) != inst.B:
                continue
            tail = split(tuple(i for i in rest if i not in trio))
            if tail is not None:
                return [list(trio)] + tail
        return None

    groups = split(tuple(range(3 * inst.n)))
    return OracleReport(groups is not None, groups, counter[0])


def _product_edges(spec: HostSpec) -> set:
    host = spec.host
    rows = spec.rows
    edges = set()
    cells = [(h, r) for h in range(host.n) for r in range(rows)]
    for (h1, r1), (h2, r2) in itertools.combinations(cells, 2):
        same_h = h1 == h2
        host_edge = host.has_edge(h1, h2)
        same_r = r1 == r2
        near_r = abs(r1 - r2) == 1
        if spec.product == STRONG:
            ok = (same_h and near_r) or (host_edge and (same_r or near_r))
        else:
            ok = (same_h and near_r) or (host_edge and same_r)
        if ok:
            edges.add(frozenset(((h1, r1), (h2, r2))))
    return edges


def _bfs_order(g: Graph) -> List[int]:
    order: List[int] = []
    seen = set()
    for s in g.vertices():
        if s in seen:
            continue
        seen.add(s)
        queue = [s]
        for v in queue:
            order.append(v)
            for u in sorted(g.neighbors(v)):
                if u not in seen:
                    seen.add(u)
                    queue.append(u)
    return order


def naive_embed(g: Graph, spec: HostSpec) -> OracleReport:
    """Plain backtracking over injective maps, vertices in breadth-first order."""
    if g.n > EMBED_GUEST_CAP:
        raise ValueError(f"naive_embed is capped at {EMBED_GUEST_CAP} guest vertices")
    if spec.n_cells > EMBED_CELL_CAP:
        raise ValueError(f"naive_embed is capped at {EMBED_CELL_CAP} host cells")
    adj = _product_edges(spec)
    cells = [(h, r) for h in range(spec.host.n) for r in range(spec.rows)]
    order = _bfs_order(g)
    placed = {}
    nodes = 0

    def extend(i: int) -> bool:
        nonlocal nodes
        nodes += 1
        if i == g.n:
            return True
        v = order[i]
        used = set(placed.values())
        for c in cells:
            if c in used:
                continue
            if all(frozenset((c, placed[u])) in adj for u in g.neighbors(v) if u in placed):
                placed[v] = c
                if extend(i + 1):
                    return True
                del placed[v]
        return False

    if extend(0):
        return OracleReport(True, Embedding(g, spec, tuple(placed[v] for v in g.vertices())), nodes)
    return OracleReport(False, None, nodes)
