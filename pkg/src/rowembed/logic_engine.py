"""NAE-3SAT logic engine: the orientation-constrained gadget ``G0`` and the
pipeline ``G0 -> G1 -> G2 -> G`` that forces the orientations without labels.

Drawing convention. A vertex drawn at column ``X`` and row ``Y`` sits in host
cell ``(Y, X)``: the host (path or caterpillar spine) runs top to bottom, the
``P`` coordinate left to right. ``t`` is the top of the middle path (``Y = 0``),
``b`` the bottom (``Y = H``), and "left" means smaller ``X``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, List, Optional, Sequence, Set, Tuple

from .embedding import (Embedding, EmbeddingError, OrientationConstraint,
                        verify_embedding)
from .graph import Edge, Graph, GraphBuilder
from .products import CARTESIAN, HORIZONTAL, STRONG, VERTICAL, HostSpec

Clause = Tuple[int, ...]


# -- instances -----------------------------------------------------------------

@dataclass(frozen=True)
class NaeInstance:
    n: int
    clauses: Tuple[Clause, ...]
    normalized: bool = False

    def __post_init__(self):
        cl = tuple(tuple(int(x) for x in c) for c in self.clauses)
        object.__setattr__(self, "clauses", cl)
        if self.n < 0:
            raise ValueError("variable count must be nonnegative")
        for c in cl:
            if not c:
                raise ValueError("empty clause")
            for lit in c:
                if lit == 0 or abs(lit) > self.n:
                    raise ValueError(f"literal {lit} out of range for n={self.n}")
        if self.normalized and not any(_is_spacer(c, self.n) for c in cl):
            raise ValueError("normalized instance must contain the spacer clause")

    @property
    def m(self) -> int:
        return len(self.clauses)

    def spacer(self) -> Clause:
        return (self.n, -self.n)


def _is_spacer(c: Clause, n: int) -> bool:
    return n > 0 and set(c) == {n, -n}


def ensure_spacer(inst: NaeInstance) -> NaeInstance:
    if inst.n == 0:
        raise ValueError("cannot add a spacer clause without variables")
    if any(_is_spacer(c, inst.n) for c in inst.clauses):
        return NaeInstance(inst.n, inst.clauses, True)
    return NaeInstance(inst.n, inst.clauses + (inst.spacer(),), True)


def literal_value(lit: int, assignment: Sequence[bool]) -> bool:
    val = bool(assignment[abs(lit) - 1])
    return val if lit > 0 else not val


def engine_feasible(inst: NaeInstance, assignment: Sequence[bool]) -> bool:
    """Every clause has a true and a false literal.

    Equivalently, with the true literals' armatures on the left, no clause
    row holds more than ``n - 1`` flags on either side of the middle path.
    """
    if len(assignment) != inst.n:
        raise ValueError(f"assignment has {len(assignment)} values, expected {inst.n}")
    for c in inst.clauses:
        vals = {literal_value(lit, assignment) for lit in c}
        if vals != {True, False}:
            return False
    return True


def parse_nae(text: str) -> NaeInstance:
    """Read ``p nae3 n m`` followed by one clause per line (trailing 0 optional)."""
    n = m = None
    clauses: List[Clause] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("c") or line.startswith("#"):
            continue
        if line.startswith("p"):
            parts = line.split()
            if len(parts) != 4 or parts[1] != "nae3":
                raise ValueError(f"line {lineno}: expected 'p nae3 <n> <m>'")
            n, m = int(parts[2]), int(parts[3])
            continue
        if n is None:
            raise ValueError(f"line {lineno}: clause before header")
        lits = [int(x) for x in re.split(r"\s+", line)]
        if lits and lits[-1] == 0:
            lits.pop()
        if 0 in lits:
            raise ValueError(f"line {lineno}: zero inside clause")
        clauses.append(tuple(lits))
    if n is None:
        raise ValueError("missing 'p nae3' header")
    if m != len(clauses):
        raise ValueError(f"header announces {m} clauses, found {len(clauses)}")
    return NaeInstance(n, tuple(clauses))


def format_nae(inst: NaeInstance) -> str:
    lines = [f"p nae3 {inst.n} {inst.m}"]
    lines += [" ".join(str(x) for x in c) + " 0" for c in inst.clauses]
    return "\n".join(lines) + "\n"


# -- G0 ------------------------------------------------------------------------

@dataclass(frozen=True)
class Place:
    """Where a G0 vertex goes in the canonical drawing.

    ``kind`` is one of middle, outer, armature, flag. Outer and armature
    vertices sit at horizontal ``offset`` from the middle path; an armature's
    side depends on the assignment. Flags are placed by the packer.
    """

    kind: str
    y: int
    offset: int = 0
    side: int = 0
    var: int = 0
    sign: int = 0
    clause: int = -1
    parent: int = -1


@dataclass(frozen=True)
class LogicEngineGadget:
    inst: NaeInstance
    graph: Graph
    labels: OrientationConstraint
    H: int
    places: Tuple[Place, ...]
    t: int
    b: int
    middle: Tuple[int, ...]
    armature: Dict[Tuple[int, int], Tuple[int, ...]]
    clause_rows: Tuple[int, ...]
    flags: Dict[Tuple[int, int, int], int]

    @property
    def n(self) -> int:
        return self.inst.n

    @property
    def columns(self) -> int:
        return 4 * self.n + 1

    @property
    def spacer_row(self) -> int:
        return self.clause_rows[-1]

    def vertices_in_row(self, y: int) -> List[int]:
        return [v for v, p in enumerate(self.places) if p.y == y]


def _clause_order(inst: NaeInstance) -> List[int]:
    plain = [j for j, c in enumerate(inst.clauses) if not _is_spacer(c, inst.n)]
    spacers = [j for j, c in enumerate(inst.clauses) if _is_spacer(c, inst.n)]
    return plain + spacers


def build_g0(inst: NaeInstance) -> LogicEngineGadget:
    """Frame, armatures and flags, with every edge labelled hor or ver.

    Clause rows are the ``m`` rows ``n+1 .. n+m``; clauses fill them from the
    bottom up with the spacer clause last (topmost).
    """
    if inst.n == 0:
        raise ValueError("logic engine needs at least one variable")
    if not inst.normalized:
        raise ValueError("instance must be normalized with ensure_spacer first")
    n, m = inst.n, inst.m
    H = m + 2 * n + 1
    gb = GraphBuilder()
    labels: Dict[Edge, str] = {}
    places: List[Place] = []

    def vertex(tag: str, place: Place) -> int:
        places.append(place)
        return gb.add_vertex(tag)

    def edge(u: int, v: int, lab: str, tag: str) -> None:
        labels[gb.add_edge(u, v, tag)] = lab

    middle = [vertex("frame-middle", Place("middle", y)) for y in range(H + 1)]
    gb.vtag[middle[0]] = "anchor-t"
    gb.vtag[middle[H]] = "anchor-b"
    for a, b in zip(middle, middle[1:]):
        edge(a, b, VERTICAL, "frame-middle")

    for side in (-1, 1):
        top = [vertex("frame-outer", Place("outer", 0, k, side)) for k in range(1, 2 * n + 1)]
        down = [vertex("frame-outer", Place("outer", y, 2 * n, side)) for y in range(1, H + 1)]
        bottom = [vertex("frame-outer", Place("outer", H, k, side))
                  for k in range(2 * n - 1, 0, -1)]
        hor_top = [middle[0]] + top
        for a, b in zip(hor_top, hor_top[1:]):
            edge(a, b, HORIZONTAL, "frame-outer")
        ver = [top[-1]] + down
        for a, b in zip(ver, ver[1:]):
            edge(a, b, VERTICAL, "frame-outer")
        hor_bot = [down[-1]] + bottom + [middle[H]]
        for a, b in zip(hor_bot, hor_bot[1:]):
            edge(a, b, HORIZONTAL, "frame-outer")

    armature: Dict[Tuple[int, int], Tuple[int, ...]] = {}
    for i in range(1, n + 1):
        a = 2 * n + 1 - 2 * i
        for sign in (1, -1):
            tag = f"armature:{i}:{'+' if sign > 0 else '-'}"
            top = [vertex(tag, Place("armature", i, k, 0, i, sign)) for k in range(1, a + 1)]
            down = [vertex(tag, Place("armature", y, a, 0, i, sign))
                    for y in range(i + 1, H - i)]
            bottom = [vertex(tag, Place("armature", H - i, k, 0, i, sign))
                      for k in range(a, 0, -1)]
            hor_top = [middle[i]] + top
            for u, v in zip(hor_top, hor_top[1:]):
                edge(u, v, HORIZONTAL, tag)
            ver = [top[-1]] + down + [bottom[0]]
            for u, v in zip(ver, ver[1:]):
                edge(u, v, VERTICAL, tag)
            hor_bot = bottom + [middle[H - i]]
            for u, v in zip(hor_bot, hor_bot[1:]):
                edge(u, v, HORIZONTAL, tag)
            armature[(i, sign)] = tuple(top + down + bottom)

    order = _clause_order(inst)
    clause_rows = [0] * m
    for pos, j in enumerate(order):
        clause_rows[j] = n + m - pos
    flags: Dict[Tuple[int, int, int], int] = {}
    for j, c in enumerate(inst.clauses):
        y = clause_rows[j]
        lits = set(c)
        for i in range(1, n + 1):
            for sign in (1, -1):
                if sign * i in lits:
                    continue
                host = next(v for v in armature[(i, sign)] if places[v].y == y)
                f = vertex(f"flag:{i}:{'+' if sign > 0 else '-'}:{j}",
                           Place("flag", y, 0, 0, i, sign, j, host))
                edge(host, f, HORIZONTAL, "flag")
                flags[(i, sign, j)] = f
    row_of_clause = tuple(clause_rows[j] for j in order)
    return LogicEngineGadget(
        inst=inst, graph=gb.build(), labels=OrientationConstraint(labels), H=H,
        places=tuple(places), t=middle[0], b=middle[H], middle=tuple(middle),
        armature=armature, clause_rows=row_of_clause, flags=flags,
    )


def _armature_side(sign: int, var: int, assignment: Sequence[bool]) -> int:
    """-1 (left) if the literal ``sign * var`` is true."""
    return -1 if literal_value(sign * var, assignment) else 1


def _g0_columns(gadget: LogicEngineGadget, assignment: Sequence[bool]) -> List[int]:
    n = gadget.n
    c = 2 * n
    xs = [0] * gadget.graph.n
    for v, p in enumerate(gadget.places):
        if p.kind == "middle":
            xs[v] = c
        elif p.kind == "outer":
            xs[v] = c + p.side * p.offset
        elif p.kind == "armature":
            xs[v] = c + _armature_side(p.sign, p.var, assignment) * p.offset
    # flags: per clause row and side, armatures below k point outward
    for j in range(gadget.inst.m):
        for side in (-1, 1):
            on_side = {}
            for i in range(1, n + 1):
                for sign in (1, -1):
                    if _armature_side(sign, i, assignment) == side and (i, sign, j) in gadget.flags:
                        on_side[i] = gadget.flags[(i, sign, j)]
            if not on_side:
                continue
            free = [i for i in range(1, n + 1) if i not in on_side]
            if not free:
                raise EmbeddingError(f"clause {j} has {n} flags on one side")
            k = free[0]
            for i, f in on_side.items():
                off = 2 * n - 2 * i if i < k else 2 * n + 2 - 2 * i
                xs[f] = c + side * off
    return xs


def witness_embedding(gadget: LogicEngineGadget, assignment: Sequence[bool],
                      product: str = CARTESIAN) -> Embedding:
    """Orientation-constrained grid embedding with true literals on the left."""
    if not engine_feasible(gadget.inst, assignment):
        raise EmbeddingError("assignment does not satisfy the instance")
    xs = _g0_columns(gadget, assignment)
    cells = tuple((p.y, x) for p, x in zip(gadget.places, xs))
    host = HostSpec.path(gadget.H + 1, gadget.columns, product)
    emb = Embedding(gadget.graph, host, cells)
    rep = verify_embedding(emb, gadget.labels)
    if not rep.ok:
        raise AssertionError(f"logic-engine witness is invalid:\n{rep}")
    return emb


def extract_assignment(gadget: LogicEngineGadget, emb: Embedding) -> List[bool]:
    """``x_i`` is true iff the positive armature of ``x_i`` is left of the middle."""
    if emb.guest != gadget.graph:
        raise EmbeddingError("embedding is for a different graph")
    rep = verify_embedding(emb, gadget.labels)
    if not rep.ok:
        raise EmbeddingError(f"embedding is invalid:\n{rep}")
    mid = emb.map[gadget.t][1]
    return [emb.map[gadget.armature[(i, 1)][0]][1] < mid for i in range(1, gadget.n + 1)]


def mirror(emb: Embedding) -> Embedding:
    """Reflect left and right."""
    rows = emb.host.rows
    return Embedding(emb.guest, emb.host, tuple((h, rows - 1 - r) for h, r in emb.map))


# -- pipeline --------------------------------------------------------------------

@dataclass(frozen=True)
class PipelineGadget:
    variant: str
    g1: Graph
    g2: Graph
    g: Graph
    horizontal: FrozenSet[Edge]
    vertical: FrozenSet[Edge]
    subdivisions: Dict[Edge, Tuple[int, int]]
    pads: Dict[int, Tuple[int, ...]]
    arrowheads: Tuple[Tuple[int, int, int, int], ...]
    attachments: Dict[Edge, Tuple[Tuple[int, ...], ...]]
    fixture: Dict[str, int] = field(default_factory=dict)

    def labels(self) -> OrientationConstraint:
        lab = {e: HORIZONTAL for e in self.horizontal}
        lab.update({e: VERTICAL for e in self.vertical})
        return OrientationConstraint(lab)


def build_pipeline(gadget: LogicEngineGadget, variant: str = STRONG) -> PipelineGadget:
    """Triple the width, add arrow-heads, then rigidify every horizontal edge.

    Strong variant: a ``K_{2,5}`` on each horizontal edge. Cartesian variant:
    no arrow-heads (they are triangles), and three internally disjoint paths
    with two inner vertices each per horizontal edge.
    """
    if variant not in (STRONG, CARTESIAN):
        raise ValueError(f"unknown variant {variant!r}")
    g0 = gadget.graph
    gb = GraphBuilder(g0.n, [], dict(g0.vtag), {})
    horizontal: Set[Edge] = set()
    vertical: Set[Edge] = set()
    hor_nbrs: Dict[int, List[int]] = {v: [] for v in g0.vertices()}
    subdiv: Dict[Edge, Tuple[int, int]] = {}
    for u, v in g0.edges:
        lab = gadget.labels.label(u, v)
        if lab == VERTICAL:
            vertical.add(gb.add_edge(u, v, g0.etag.get((u, v))))
            continue
        a = gb.add_vertex("subdivision")
        b = gb.add_vertex("subdivision")
        for e in ((u, a), (a, b), (b, v)):
            horizontal.add(gb.add_edge(*e, "horizontal"))
        subdiv[(u, v)] = (a, b)
        hor_nbrs[u].append(a)
        hor_nbrs[v].append(b)
    hor_original = {v: len(hor_nbrs[v]) for v in g0.vertices()}
    pads: Dict[int, Tuple[int, ...]] = {}
    for v in g0.vertices():
        extra = []
        for _ in range(2 - len(hor_nbrs[v])):
            w = gb.add_vertex("width-leaf")
            horizontal.add(gb.add_edge(v, w, "horizontal"))
            extra.append(w)
        hor_nbrs[v].extend(extra)
        pads[v] = tuple(extra)
    g1 = gb.build()

    arrows: List[Tuple[int, int, int, int]] = []
    if variant == STRONG:
        for u, w in sorted(vertical):
            lo, hi = (u, w) if gadget.places[u].y > gadget.places[w].y else (w, u)
            # a lower endpoint between two original horizontal edges (b and
            # the armature attachments) has no separating pair around the
            # arrow-head, which would create a K_4 minor
            if gadget.places[lo].kind == "armature" or hor_original[lo] == 2:
                continue
            vl, vr = hor_nbrs[lo]
            gb.add_edge(vl, hi, "arrow-head")
            gb.add_edge(vr, hi, "arrow-head")
            arrows.append((lo, hi, vl, vr))
    g2 = gb.build()

    attach: Dict[Edge, Tuple[Tuple[int, ...], ...]] = {}
    for u, v in sorted(horizontal):
        if variant == STRONG:
            apexes = []
            for _ in range(5):
                z = gb.add_vertex("k25-apex")
                gb.add_edge(u, z, "k25")
                gb.add_edge(v, z, "k25")
                apexes.append((z,))
            attach[(u, v)] = tuple(apexes)
        else:
            paths = []
            for _ in range(3):
                p = gb.add_vertex("rung")
                q = gb.add_vertex("rung")
                gb.add_edge(u, p, "rung")
                gb.add_edge(p, q, "rung")
                gb.add_edge(q, v, "rung")
                paths.append((p, q))
            attach[(u, v)] = tuple(paths)
    g = gb.build()
    fixture = {"g0_vertices": g0.n, "g1_vertices": g1.n, "g2_edges": g2.m,
               "g_vertices": g.n, "g_edges": g.m, "arrowheads": len(arrows)}
    return PipelineGadget(variant, g1, g2, g, frozenset(horizontal), frozenset(vertical),
                          subdiv, pads, tuple(arrows), attach, fixture)


def pipeline_witness(p: PipelineGadget, gadget: LogicEngineGadget,
                     assignment: Sequence[bool]) -> Embedding:
    """Embedding of ``p.g`` into ``Caterpillar(H+1, legs) x P_{12n+3}``.

    G0 goes on the spine with columns stretched to ``3X + 1``; subdivision
    vertices and width leaves fill the new columns; the vertices hung on a
    horizontal edge from column ``X`` to ``X+1`` use leg extensions of that
    spine vertex in rows ``X`` (and ``X+1`` for the Cartesian rungs).
    """
    base = witness_embedding(gadget, assignment, STRONG if p.variant == STRONG else CARTESIAN)
    g = p.g
    cells: List[Optional[Tuple[int, int]]] = [None] * g.n
    for v, (y, x) in enumerate(base.map):
        cells[v] = (y, 3 * x + 1)
    used_sides: Dict[int, Set[int]] = {v: set() for v in gadget.graph.vertices()}
    for (u, v), (a, b) in p.subdivisions.items():
        (yu, xu), (_, xv) = cells[u], cells[v]
        s = 1 if xv > xu else -1
        cells[a] = (yu, xu + s)
        cells[b] = (yu, xu + 2 * s)
        used_sides[u].add(s)
        used_sides[v].add(-s)
    for v, leaves in p.pads.items():
        free = [s for s in (-1, 1) if s not in used_sides[v]]
        for leaf, s in zip(leaves, free):
            y, x = cells[v]
            cells[leaf] = (y, x + s)
    spine = gadget.H + 1
    legs = 5 if p.variant == STRONG else 6
    for (u, v), hung in p.attachments.items():
        y, xu = cells[u]
        x = min(xu, cells[v][1])
        for j, group in enumerate(hung):
            if p.variant == STRONG:
                cells[group[0]] = (spine + y * legs + j, x)
            else:
                leg = spine + y * legs + j + 3 * (x % 2)
                cells[group[0]] = (leg, xu)
                cells[group[1]] = (leg, cells[v][1])
    host = HostSpec.caterpillar(spine, legs, 12 * gadget.n + 3, p.variant)
    emb = Embedding(g, host, tuple(cells))
    rep = verify_embedding(emb, p.labels())
    if not rep.ok:
        raise AssertionError(f"pipeline witness is invalid:\n{rep}")
    return emb


__all__ = [
    "NaeInstance", "ensure_spacer", "engine_feasible", "literal_value", "parse_nae",
    "format_nae", "Place", "LogicEngineGadget", "build_g0", "witness_embedding",
    "extract_assignment", "mirror", "PipelineGadget", "build_pipeline", "pipeline_witness",
]
