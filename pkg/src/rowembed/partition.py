"""3-partition gadget: a paddle tree that embeds into ``Star(L) x P`` exactly
when the numbers split into ``n`` triples of equal sum.

Coordinates follow the drawing: the center-row is the star's center, ``x``
is the position along ``P`` with the anchor ``Z`` at ``x = 0``, blades sit in
the group-gaps left of ``Z`` and the fold-gaps run to its right.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from .embedding import Embedding, EmbeddingError, verify_embedding
from .graph import Graph, GraphBuilder, recognize_caterpillar
from .products import STRONG, HostSpec

C_LEAVES = 6


@dataclass(frozen=True)
class PartitionInstance:
    a: Tuple[int, ...]
    n: int

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(int(x) for x in self.a))
        if self.n < 1:
            raise ValueError("need at least one group")
        if len(self.a) != 3 * self.n:
            raise ValueError(f"expected {3 * self.n} numbers, got {len(self.a)}")
        if any(x <= 0 for x in self.a):
            raise ValueError("numbers must be positive")
        if sum(self.a) % self.n:
            raise ValueError("sum is not divisible by the group count")

    @property
    def B(self) -> int:
        return sum(self.a) // self.n

    @property
    def normalized(self) -> bool:
        return all(x % 8 == 0 for x in self.a)


def normalize_instance(raw: Sequence[int], n: int) -> PartitionInstance:
    inst = PartitionInstance(tuple(raw), n)
    if inst.normalized:
        return inst
    return PartitionInstance(tuple(8 * x for x in inst.a), n)


def parse_partition(text: str) -> PartitionInstance:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.startswith("#")]
    if len(lines) != 2:
        raise ValueError("expected two lines: n, then the 3n numbers")
    return PartitionInstance(tuple(int(x) for x in lines[1].split()), int(lines[0]))


def format_partition(inst: PartitionInstance) -> str:
    return f"{inst.n}\n{' '.join(str(x) for x in inst.a)}\n"


def check_groups(inst: PartitionInstance, groups: Sequence[Sequence[int]]) -> None:
    """Raise ``ValueError`` unless ``groups`` is a valid 3-partition (0-based)."""
    flat = sorted(i for grp in groups for i in grp)
    if flat != list(range(3 * inst.n)):
        raise ValueError("groups must use every index exactly once")
    if len(groups) != inst.n:
        raise ValueError(f"expected {inst.n} groups, got {len(groups)}")
    for grp in groups:
        if len(grp) != 3:
            raise ValueError(f"group {list(grp)} does not have three members")
        if sum(inst.a[i] for i in grp) != inst.B:
            raise ValueError(f"group {list(grp)} does not sum to {inst.B}")


# -- tree ------------------------------------------------------------------------

@dataclass(frozen=True)
class PaddleTree:
    inst: PartitionInstance
    tree: Graph
    frame: Tuple[int, ...]
    anchor: int
    left_blocker: Tuple[int, ...]
    right_blocker: Tuple[int, ...]
    group_gaps: Tuple[Tuple[Tuple[int, ...], Tuple[int, ...]], ...]
    fold_gaps: Tuple[Tuple[Tuple[int, ...], int], ...]
    handles: Tuple[Tuple[int, ...], ...]
    blades: Tuple[Tuple[int, ...], ...]
    leaves: Dict[int, Tuple[int, ...]]

    @property
    def n(self) -> int:
        return self.inst.n

    @property
    def B(self) -> int:
        return self.inst.B

    @property
    def span(self) -> int:
        """``n(B+8)``: blocker length, handle length plus one."""
        return self.n * (self.B + 8)

    @property
    def star_leaves(self) -> int:
        return C_LEAVES + 6 * self.n

    def role_counts(self) -> Dict[str, int]:
        """Vertex counts per role, ignoring gap and paddle indices."""
        counts: Dict[str, int] = {}
        for tag in self.tree.vtag.values():
            parts = tag.split(":")
            key = f"{parts[0]}:{parts[-1]}" if len(parts) > 1 else tag
            counts[key] = counts.get(key, 0) + 1
        return counts


def build_paddle_tree(inst: PartitionInstance) -> PaddleTree:
    if not inst.normalized:
        raise ValueError("instance must be normalized (all numbers divisible by 8)")
    n, B = inst.n, inst.B
    N = n * (B + 8)
    gb = GraphBuilder()
    leaves: Dict[int, Tuple[int, ...]] = {}

    def c_vertex(tag: str) -> int:
        v = gb.add_vertex(tag)
        leaves[v] = tuple(gb.add_vertex("leaf") for _ in range(C_LEAVES))
        for w in leaves[v]:
            gb.add_edge(v, w)
        return v

    frame: List[int] = []
    left = [c_vertex("left-blocker:c") for _ in range(N)]
    frame += left
    gaps = []
    for g in range(n):
        ells = [gb.add_vertex(f"group-gap:{g}:l") for _ in range(B)]
        cs = [c_vertex(f"group-gap:{g}:c") for _ in range(8)]
        frame += ells + cs
        gaps.append((tuple(ells), tuple(cs)))
    anchor = frame[-1]
    gb.vtag[anchor] = "anchor:c"
    folds = []
    for k in range(N // 8):
        cs = [c_vertex(f"fold-gap:{k}:c") for _ in range(3)]
        ell = gb.add_vertex(f"fold-gap:{k}:l")
        frame += cs + [ell]
        folds.append((tuple(cs), ell))
    right = [c_vertex("right-blocker:c") for _ in range(N)]
    frame += right
    gb.add_path(frame)

    handles, blades = [], []
    for i, ai in enumerate(inst.a):
        handle = [gb.add_vertex(f"paddle:{i}:handle") for _ in range(N - 1)]
        blade = [c_vertex(f"paddle:{i}:blade") for _ in range(ai)]
        gb.add_path([anchor] + handle + blade)
        handles.append(tuple(handle))
        blades.append(tuple(blade))
    return PaddleTree(inst, gb.build(), tuple(frame), anchor, tuple(left), tuple(right),
                      tuple(gaps), tuple(folds), tuple(handles), tuple(blades), leaves)


def pathwidth_two_certificate(t: PaddleTree) -> bool:
    """The structural reason for pathwidth at most 2.

    Removing the frame path leaves only single vertices and caterpillars,
    each touching the frame in one vertex.
    """
    g = t.tree
    if not g.is_tree():
        return False
    on_frame = set(t.frame)
    if any(not g.has_edge(a, b) for a, b in zip(t.frame, t.frame[1:])):
        return False
    rest = [v for v in g.vertices() if v not in on_frame]
    sub, ids = g.induced(rest)
    for comp in sub.components():
        piece, _ = sub.induced(comp)
        if recognize_caterpillar(piece) is None:
            return False
        touching = sum(1 for v in comp for w in g.neighbors(ids[v]) if w in on_frame)
        if touching != 1:
            return False
    return True


# -- witness ---------------------------------------------------------------------

def paddle_rows(i: int) -> Tuple[int, int]:
    """The private leaf-rows ``(l', l'')`` of paddle ``i``."""
    return C_LEAVES + 1 + 2 * i, C_LEAVES + 2 + 2 * i


def partition_witness(t: PaddleTree, groups: Sequence[Sequence[int]]) -> Embedding:
    """Frame as drawn, blades filling the group-gaps, handles folded at ``w_i``.

    The handle of paddle ``i`` runs from the blade's right end ``v_i`` along
    ``l'_i`` to ``x = d_i - 1`` where ``d_i = (n(B+8) - |x(v_i)|) / 2``, dips
    to the free center cell ``x = d_i`` of a fold-gap, and returns along
    ``l''_i`` to ``Z``.
    """
    inst = t.inst
    check_groups(inst, groups)
    n, B, N = t.n, t.B, t.span
    cells: List[Optional[Tuple[int, int]]] = [None] * t.tree.n
    CENTER = 0

    def put_c(v: int, x: int) -> None:
        cells[v] = (CENTER, x)
        for j, leaf in enumerate(t.leaves[v], start=1):
            cells[leaf] = (j, x)

    for k, v in enumerate(t.left_blocker):
        put_c(v, -2 * N + 1 + k)
    gap_row = paddle_rows(0)[1]
    for g, (ells, cs) in enumerate(t.group_gaps):
        x0 = -(n - g) * (B + 8)
        for k, v in enumerate(ells):
            cells[v] = (gap_row, x0 + 1 + k)
        for k, v in enumerate(cs):
            put_c(v, x0 + B + 1 + k)
    for k, (cs, ell) in enumerate(t.fold_gaps, start=1):
        for j, v in enumerate(cs):
            put_c(v, 4 * k - 3 + j)
        cells[ell] = (1, 4 * k)
    for k, v in enumerate(t.right_blocker):
        put_c(v, N // 2 + 1 + k)

    for g, grp in enumerate(groups):
        x = -(n - g) * (B + 8) + 1
        for i in grp:
            blade = t.blades[i]
            xv = x + len(blade) - 1
            for k, v in enumerate(blade):
                put_c(v, xv - k)
            d = (N - abs(xv)) // 2
            lp, lpp = paddle_rows(i)
            h = t.handles[i]
            for k in range(d - 1):
                cells[h[k]] = (lpp, k + 1)
            cells[h[d - 1]] = (CENTER, d)
            for k, x_ in enumerate(range(d - 1, xv, -1)):
                cells[h[d + k]] = (lp, x_)
            x += len(blade)

    shift = 2 * N
    cells = [(hh, r + shift) for hh, r in cells]
    rows = max(r for _, r in cells) + 2
    host = HostSpec.star(t.star_leaves, rows, STRONG)
    emb = Embedding(t.tree, host, tuple(cells))
    rep = verify_embedding(emb)
    if not rep.ok:
        raise AssertionError(f"paddle witness is invalid:\n{rep}")
    return emb


def extract_partition(t: PaddleTree, emb: Embedding) -> List[List[int]]:
    """Group the blades by the group-gap window their center cells fall in."""
    if emb.guest != t.tree:
        raise EmbeddingError("embedding is for a different tree")
    rep = verify_embedding(emb)
    if not rep.ok:
        raise EmbeddingError(f"embedding is invalid:\n{rep}")
    pos = {t.frame[k]: k for k in range(len(t.frame))}
    windows = []
    for ells, cs in t.group_gaps:
        before = t.frame[pos[ells[0]] - 1]
        lo, hi = sorted((emb.map[before][1], emb.map[cs[0]][1]))
        windows.append((lo, hi))
    groups: List[List[int]] = [[] for _ in windows]
    for i, blade in enumerate(t.blades):
        found = None
        for g, (lo, hi) in enumerate(windows):
            if all(emb.map[v][0] == 0 and lo < emb.map[v][1] < hi for v in blade):
                found = g
                break
        if found is None:
            raise EmbeddingError(f"blade {i} is not inside a group-gap window")
        groups[found].append(i)
    check_groups(t.inst, groups)
    return groups
