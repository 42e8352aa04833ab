"""Graph transformations that trade one embedding problem for another.

* :func:`tv_gadget_transform` replaces each vertex by a 37-vertex tree so
  that grid embeddability becomes king's-graph embeddability;
  :func:`tv_witness_lift` turns a grid witness into a king's-graph witness.
* :func:`leaf_pad` tops every vertex up to degree ``k`` with new leaves
  (k = 4 for the grid, 6 for the king's graph); :func:`leaf_pad_lift` moves
  a grid / king witness onto a caterpillar host.
* :func:`universal_vertex` adds one vertex adjacent to everything.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Dict, List, Tuple

from .embedding import Embedding, EmbeddingError, verify_embedding
from .graph import Graph, GraphBuilder
from .products import CARTESIAN, STRONG, HostSpec


@dataclass(frozen=True)
class TransformArtifact:
    output: Graph
    port_map: Dict[int, Dict[str, List[int]]]
    provenance: Dict[str, object] = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "provenance": dict(self.provenance),
            "ports": {str(v): {k: list(ids) for k, ids in sorted(p.items())}
                      for v, p in sorted(self.port_map.items())},
        }


# -- T(v) gadget -------------------------------------------------------------

T_SIZE = 37


def tv_gadget_transform(g: Graph) -> TransformArtifact:
    """Replace every vertex by ``T(v)`` and every edge by a port-to-port edge.

    ``T(v)`` is a root with four ``T_1`` copies (a 3-vertex path hung at its
    middle) and four ``T_2`` copies (``K_{1,4}`` with one edge subdivided,
    hung at the subdivision vertex). Edge ``uv`` joins an unused ``T_2``
    center of ``T(u)`` to one of ``T(v)``; ports are handed out in sorted
    edge order.
    """
    if g.max_degree() > 4:
        raise ValueError("T(v) gadget supports maximum degree 4")
    gb = GraphBuilder()
    ports: Dict[int, Dict[str, List[int]]] = {}
    for v in g.vertices():
        root = gb.add_vertex("root")
        p: Dict[str, List[int]] = {"root": [root], "t1": [], "t2": [], "t2_hinge": [],
                                   "used": []}
        for _ in range(4):
            mid = gb.add_vertex("t1-mid")
            gb.add_edge(root, mid)
            for _ in range(2):
                gb.add_edge(mid, gb.add_vertex("t1-leaf"))
            p["t1"].append(mid)
        for _ in range(4):
            hinge = gb.add_vertex("t2-hinge")
            gb.add_edge(root, hinge)
            center = gb.add_vertex("t2-center")
            gb.add_edge(hinge, center)
            gb.add_edge(hinge, gb.add_vertex("t2-tail"))
            for _ in range(3):
                gb.add_edge(center, gb.add_vertex("t2-leaf"))
            p["t2"].append(center)
            p["t2_hinge"].append(hinge)
        ports[v] = p
    nxt = {v: 0 for v in g.vertices()}
    for u, v in g.edges:
        a = ports[u]["t2"][nxt[u]]
        b = ports[v]["t2"][nxt[v]]
        ports[u]["used"].append(nxt[u])
        ports[v]["used"].append(nxt[v])
        nxt[u] += 1
        nxt[v] += 1
        gb.add_edge(a, b, "connector")
    return TransformArtifact(gb.build(), ports, {"transform": "tv", "n": g.n, "m": g.m})


# Layout of T(v) around its root, in king's-graph offsets. Grid direction
# (dx, dy) maps to the diagonal (dx + dy, dx - dy) after the 45 degree turn;
# each orthogonal side carries one T_1, each diagonal one T_2.
_SIDES = [(1, 0), (0, 1), (-1, 0), (0, -1)]


def _turn(s: Tuple[int, int]) -> Tuple[int, int]:
    return (-s[1], s[0])


def _grid_dir_to_diag(dx: int, dy: int) -> Tuple[int, int]:
    return (dx + dy, dx - dy)


def _block_offsets(diag: Tuple[int, int]) -> Dict[str, List[Tuple[int, int]]]:
    """Cells for one T_2 (pointing along ``diag``) relative to the root."""
    dx, dy = diag
    side = [s for s in _SIDES if (s[0] + _turn(s)[0], s[1] + _turn(s)[1]) == diag][0]
    t = _turn(side)
    tail = (2 * side[0] + t[0], 2 * side[1] + t[1])
    return {
        "hinge": [(dx, dy)],
        "center": [(2 * dx, 2 * dy)],
        "tail": [tail],
        "leaves": [(dx, 3 * dy), (3 * dx, dy), (2 * dx, 3 * dy)],
    }


def _t1_offsets(side: Tuple[int, int]) -> Dict[str, List[Tuple[int, int]]]:
    t = _turn(side)
    return {
        "mid": [side],
        "leaves": [(2 * side[0], 2 * side[1]), (2 * side[0] - t[0], 2 * side[1] - t[1])],
    }


def tv_witness_lift(g: Graph, grid: Embedding) -> Embedding:
    """King's-graph witness for ``tv_gadget_transform(g).output``.

    Grid cell ``(x, y)`` goes to ``(5(x+y), 5(x-y))`` up to a common shift.
    The 25 vertices within distance 2 of a root fill the 5 x 5 block around
    it; the ``T_2`` leaves and the connector sit on the diagonal towards the
    neighbouring root.
    """
    if grid.host.product != CARTESIAN or grid.host.kind != "path":
        raise EmbeddingError("tv_witness_lift needs a witness in a Cartesian grid")
    if grid.guest != g:
        raise EmbeddingError("witness is for a different graph")
    rep = verify_embedding(grid)
    if not rep.ok:
        raise EmbeddingError(f"grid witness is invalid:\n{rep}")
    art = tv_gadget_transform(g)
    out = art.output
    cells: List[Tuple[int, int]] = [(0, 0)] * out.n
    for v in g.vertices():
        x, y = grid.map[v]
        R = (5 * (x + y), 5 * (x - y))
        p = art.port_map[v]
        root = p["root"][0]
        cells[root] = R
        # T_1 copies, one per side
        for mid, side in zip(p["t1"], _SIDES):
            offs = _t1_offsets(side)
            cells[mid] = (R[0] + side[0], R[1] + side[1])
            leaves = sorted(out.neighbors(mid) - {root})
            for leaf, o in zip(leaves, offs["leaves"]):
                cells[leaf] = (R[0] + o[0], R[1] + o[1])
        # T_2 copies: ports used by edges point at the neighbour
        want = []
        for u, w in g.edges:
            if v in (u, w):
                other = w if v == u else u
                xw, yw = grid.map[other]
                want.append(_grid_dir_to_diag(xw - x, yw - y))
        free_diags = [d for d in [(1, 1), (-1, 1), (-1, -1), (1, -1)] if d not in want]
        slot_dirs = {}
        for k, idx in enumerate(p["used"]):
            slot_dirs[idx] = want[k]
        for idx in range(4):
            if idx not in slot_dirs:
                slot_dirs[idx] = free_diags.pop(0)
        for idx in range(4):
            center, hinge = p["t2"][idx], p["t2_hinge"][idx]
            offs = _block_offsets(slot_dirs[idx])
            cells[hinge] = (R[0] + offs["hinge"][0][0], R[1] + offs["hinge"][0][1])
            cells[center] = (R[0] + offs["center"][0][0], R[1] + offs["center"][0][1])
            tail = [w for w in out.neighbors(hinge) if out.vtag.get(w) == "t2-tail"][0]
            cells[tail] = (R[0] + offs["tail"][0][0], R[1] + offs["tail"][0][1])
            leaves = sorted(w for w in out.neighbors(center) if out.vtag.get(w) == "t2-leaf")
            for leaf, o in zip(leaves, offs["leaves"]):
                cells[leaf] = (R[0] + o[0], R[1] + o[1])
    lo_h = min(c[0] for c in cells)
    lo_r = min(c[1] for c in cells)
    cells = [(h - lo_h, r - lo_r) for h, r in cells]
    size = max(c[0] for c in cells) + 1
    rows = max(c[1] for c in cells) + 1
    emb = Embedding(out, HostSpec.path(size, rows, STRONG), tuple(cells))
    rep = verify_embedding(emb)
    if not rep.ok:
        raise AssertionError(f"lifted witness is invalid:\n{rep}")
    return emb


def ball(g: Graph, v: int, radius: int) -> List[int]:
    dist = {v: 0}
    queue = deque([v])
    while queue:
        u = queue.popleft()
        if dist[u] == radius:
            continue
        for w in g.neighbors(u):
            if w not in dist:
                dist[w] = dist[u] + 1
                queue.append(w)
    return sorted(dist)


# -- leaf padding --------------------------------------------------------------

def leaf_pad(g: Graph, k: int) -> TransformArtifact:
    """Add ``max(0, k - deg(v))`` leaves at every vertex; original ids are kept."""
    if k not in (4, 6):
        raise ValueError("leaf padding is defined for k in {4, 6}")
    gb = GraphBuilder()
    for v in g.vertices():
        gb.add_vertex(g.vtag.get(v, "original"))
    for u, v in g.edges:
        gb.add_edge(u, v, g.etag.get((u, v)))
    ports: Dict[int, Dict[str, List[int]]] = {}
    for v in g.vertices():
        added = []
        for _ in range(max(0, k - g.degree(v))):
            w = gb.add_vertex("pad-leaf")
            gb.add_edge(v, w)
            added.append(w)
        ports[v] = {"original": [v], "leaves": added}
    return TransformArtifact(gb.build(), ports, {"transform": f"pad{k}", "k": k})


def leaf_pad_lift(g: Graph, art: TransformArtifact, emb: Embedding) -> Embedding:
    """Move a path-host witness of ``g`` onto ``Caterpillar(size, k)``.

    Original vertex at ``(x, r)`` stays on spine vertex ``x``, row ``r``; its
    padding leaves take legs ``0..`` of ``x`` in the same row.
    """
    if emb.host.kind != "path":
        raise EmbeddingError("leaf_pad_lift needs a witness in a path host")
    rep = verify_embedding(emb)
    if not rep.ok:
        raise EmbeddingError(f"witness is invalid:\n{rep}")
    k = int(art.provenance["k"])
    size = emb.host.size
    out = art.output
    cells: List[Tuple[int, int]] = [(0, 0)] * out.n
    for v in g.vertices():
        x, r = emb.map[v]
        cells[v] = (x, r)
        for j, leaf in enumerate(art.port_map[v]["leaves"]):
            cells[leaf] = (size + x * k + j, r)
    host = HostSpec.caterpillar(size, k, emb.host.rows, emb.host.product)
    lifted = Embedding(out, host, tuple(cells))
    rep = verify_embedding(lifted)
    if not rep.ok:
        raise AssertionError(f"padded witness is invalid:\n{rep}")
    return lifted


# -- universal vertex ----------------------------------------------------------

def universal_vertex(g: Graph) -> TransformArtifact:
    gb = GraphBuilder()
    for v in g.vertices():
        gb.add_vertex(g.vtag.get(v))
    for u, v in g.edges:
        gb.add_edge(u, v, g.etag.get((u, v)))
    top = gb.add_vertex("universal")
    for v in g.vertices():
        gb.add_edge(v, top)
    ports = {v: {"original": [v]} for v in g.vertices()}
    return TransformArtifact(gb.build(), ports, {"transform": "universal", "universal": top})
