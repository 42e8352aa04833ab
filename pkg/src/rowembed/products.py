"""Finite hosts ``H`` and their strong / Cartesian products with a path.

A product vertex is a pair ``(h, r)``: ``h`` is the host vertex (the
H-projection) and ``r`` the position on the path (the P-projection, called
the row). An edge is *horizontal* when both ends share ``h``, *vertical* when
they share ``r``, and *diagonal* otherwise.

Host vertex numbering:

* ``path``: ``0..size-1`` in path order.
* ``caterpillar``: spine vertex ``i`` is ``i``; leg ``j`` of spine vertex
  ``i`` is ``spine + i * legs + j``.
* ``star``: center ``0``, leaves ``1..size``.
* ``tree`` / ``graph``: the ids of the supplied graph.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Dict, List, Optional, Tuple

from .graph import Graph, GraphBuilder, path_graph, star_graph

STRONG = "strong"
CARTESIAN = "cartesian"
PRODUCTS = (STRONG, CARTESIAN)
KINDS = ("path", "caterpillar", "star", "tree", "graph")

HORIZONTAL = "horizontal"
VERTICAL = "vertical"
DIAGONAL = "diagonal"

#: refuse to materialize products with more vertices than this
DEFAULT_SIZE_CAP = 400_000


class SizeLimitError(ValueError):
    pass


@dataclass(frozen=True)
class HostSpec:
    kind: str
    product: str = STRONG
    rows: int = 1
    size: int = 0
    spine: int = 0
    legs: int = 0
    graph: Optional[Graph] = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown host kind {self.kind!r}")
        if self.product not in PRODUCTS:
            raise ValueError(f"unknown product {self.product!r}")
        if self.rows < 1:
            raise ValueError("rows must be >= 1")
        if self.kind == "path" and self.size < 1:
            raise ValueError("path host needs size >= 1")
        if self.kind == "star" and self.size < 1:
            raise ValueError("star host needs >= 1 leaf")
        if self.kind == "caterpillar" and (self.spine < 1 or self.legs < 1):
            raise ValueError("caterpillar host needs spine >= 1 and legs >= 1")
        if self.kind in ("tree", "graph"):
            if self.graph is None or self.graph.n < 1:
                raise ValueError(f"{self.kind} host needs a nonempty graph")
            if self.kind == "tree" and not self.graph.is_tree():
                raise ValueError("tree host graph must be connected and acyclic")

    # -- constructors ---------------------------------------------------

    @classmethod
    def path(cls, size: int, rows: int, product: str = STRONG) -> "HostSpec":
        return cls("path", product, rows, size=size)

    @classmethod
    def caterpillar(cls, spine: int, legs: int, rows: int, product: str = STRONG) -> "HostSpec":
        return cls("caterpillar", product, rows, spine=spine, legs=legs)

    @classmethod
    def star(cls, leaves: int, rows: int, product: str = STRONG) -> "HostSpec":
        return cls("star", product, rows, size=leaves)

    @classmethod
    def tree(cls, g: Graph, rows: int, product: str = STRONG) -> "HostSpec":
        return cls("tree", product, rows, graph=g)

    @classmethod
    def explicit(cls, g: Graph, rows: int, product: str = STRONG) -> "HostSpec":
        return cls("graph", product, rows, graph=g)

    def with_rows(self, rows: int) -> "HostSpec":
        return HostSpec(self.kind, self.product, rows, self.size, self.spine, self.legs, self.graph)

    # -- derived --------------------------------------------------------

    @cached_property
    def host(self) -> Graph:
        if self.kind == "path":
            return path_graph(self.size)
        if self.kind == "star":
            return star_graph(self.size)
        if self.kind == "caterpillar":
            gb = GraphBuilder()
            for _ in range(self.spine):
                gb.add_vertex("spine")
            gb.add_path(list(range(self.spine)))
            for i in range(self.spine):
                for _ in range(self.legs):
                    gb.add_edge(i, gb.add_vertex("leg"))
            return gb.build()
        return self.graph

    @property
    def host_size(self) -> int:
        return self.host.n

    @property
    def n_cells(self) -> int:
        return self.host.n * self.rows

    def adjacent(self, a: Tuple[int, int], b: Tuple[int, int]) -> bool:
        """Whether cells ``a`` and ``b`` are adjacent in the product."""
        (h1, r1), (h2, r2) = a, b
        dr = abs(r1 - r2)
        if self.product == STRONG:
            if dr > 1:
                return False
            if h1 == h2:
                return dr == 1
            return self.host.has_edge(h1, h2)
        if h1 == h2:
            return dr == 1
        return dr == 0 and self.host.has_edge(h1, h2)

    def contains(self, cell: Tuple[int, int]) -> bool:
        h, r = cell
        return 0 <= h < self.host.n and 0 <= r < self.rows

    def cell_degree(self, cell: Tuple[int, int]) -> int:
        h, r = cell
        nrows = (r > 0) + (r < self.rows - 1)
        dh = self.host.degree(h)
        if self.product == STRONG:
            return nrows + dh * (1 + nrows)
        return nrows + dh

    def describe(self) -> str:
        sym = "x" if self.product == STRONG else "[]"
        if self.kind == "path":
            body = f"Path({self.size})"
        elif self.kind == "star":
            body = f"Star({self.size})"
        elif self.kind == "caterpillar":
            body = f"Caterpillar({self.spine},{self.legs})"
        else:
            body = f"{self.kind.capitalize()}(n={self.graph.n})"
        return f"{body} {sym} P_{self.rows}"

    # -- JSON -----------------------------------------------------------

    def to_json(self) -> dict:
        out: Dict[str, object] = {"kind": self.kind, "product": self.product}
        if self.kind in ("path", "star"):
            out["size"] = self.size
        elif self.kind == "caterpillar":
            out["spine"] = self.spine
            out["legs"] = self.legs
        else:
            out["n"] = self.graph.n
            out["edges"] = [list(e) for e in self.graph.edges]
        return out

    @classmethod
    def from_json(cls, data: dict, rows: int) -> "HostSpec":
        kind = data["kind"]
        product = data.get("product", STRONG)
        if kind in ("path", "star"):
            return cls(kind, product, rows, size=int(data["size"]))
        if kind == "caterpillar":
            return cls(kind, product, rows, spine=int(data["spine"]), legs=int(data["legs"]))
        g = Graph(int(data["n"]), [tuple(e) for e in data["edges"]])
        return cls(kind, product, rows, graph=g)


def edge_orientation(a: Tuple[int, int], b: Tuple[int, int]) -> str:
    if a[0] == b[0]:
        return HORIZONTAL
    if a[1] == b[1]:
        return VERTICAL
    return DIAGONAL


@dataclass(frozen=True)
class ProductGraph:
    """Materialized product: ``base`` plus the cell of every base vertex.

    Cell ``(h, r)`` has id ``h * rows + r`` (row-major in host coordinates).
    """

    base: Graph
    coords: Tuple[Tuple[int, int], ...]
    host_size: int
    rows: int
    spec: HostSpec

    def vid(self, h: int, r: int) -> int:
        return h * self.rows + r

    def orientation(self, u: int, v: int) -> str:
        return edge_orientation(self.coords[u], self.coords[v])

    def orientation_counts(self) -> Dict[str, int]:
        out = {HORIZONTAL: 0, VERTICAL: 0, DIAGONAL: 0}
        for u, v in self.base.edges:
            out[self.orientation(u, v)] += 1
        return out


def build_product(spec: HostSpec, cap: int = DEFAULT_SIZE_CAP) -> ProductGraph:
    H = spec.host
    rows = spec.rows
    total = H.n * rows
    if total > cap:
        raise SizeLimitError(
            f"product {spec.describe()} has {total} vertices, above the limit of {cap}")
    coords = tuple((h, r) for h in range(H.n) for r in range(rows))
    edges: List[Tuple[int, int]] = []
    for h in range(H.n):
        for r in range(rows - 1):
            edges.append((h * rows + r, h * rows + r + 1))
    for a, b in H.edges:
        for r in range(rows):
            edges.append((a * rows + r, b * rows + r))
            if spec.product == STRONG and r + 1 < rows:
                edges.append((a * rows + r, b * rows + r + 1))
                edges.append((a * rows + r + 1, b * rows + r))
    return ProductGraph(Graph(total, edges), coords, H.n, rows, spec)


def product_edge_count(h_vertices: int, h_edges: int, rows: int, product: str = STRONG) -> int:
    """Closed-form edge count of ``H x P_rows`` for a host with the given size."""
    if min(h_vertices, h_edges, rows) < 0:
        raise ValueError("counts must be nonnegative")
    vertical = h_edges * rows
    horizontal = h_vertices * max(rows - 1, 0)
    if product == CARTESIAN:
        return vertical + horizontal
    return vertical + horizontal + 2 * h_edges * max(rows - 1, 0)
