"""Deterministic SVG drawings of embeddings.

Every host vertex becomes one horizontal strip (its copy of ``P``); the
``P`` coordinate runs left to right. Paths are drawn in order, caterpillars
as each spine vertex followed by its legs, stars as the center followed by
the leaves.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Mapping
from xml.sax.saxutils import escape

from .embedding import Embedding, EmbeddingError, verify_embedding
from .products import CARTESIAN, DIAGONAL, STRONG, edge_orientation

LAYOUTS = ("grid", "caterpillar-rows", "star-rows")

DEFAULT_COLORS = {
    "frame-middle": "#e07b00", "frame-outer": "#e07b00", "anchor-t": "#e07b00",
    "anchor-b": "#e07b00", "armature": "#1aa3b8", "flag": "#2e9e44",
    "subdivision": "#9a9a9a", "width-leaf": "#9a9a9a", "k25-apex": "#c9c9c9",
    "rung": "#c9c9c9", "left-blocker": "#333333", "right-blocker": "#333333",
    "group-gap": "#7d4fb3", "fold-gap": "#b34f7d", "anchor": "#d62728",
    "paddle": "#1f77b4", "leaf": "#bbbbbb", "root": "#d62728",
}


@dataclass(frozen=True)
class RenderSpec:
    cell_size: float = 24.0
    show_diagonals: bool = False
    role_colors: Mapping[str, str] = field(default_factory=lambda: dict(DEFAULT_COLORS))
    host_layout: str = ""
    max_host_cells: int = 5000

    def __post_init__(self):
        if self.cell_size <= 0:
            raise ValueError("cell_size must be positive")
        if self.host_layout and self.host_layout not in LAYOUTS:
            raise ValueError(f"unknown host layout {self.host_layout!r}")


def _strip_order(emb: Embedding, layout: str) -> List[int]:
    spec = emb.host
    n = spec.host_size
    if layout == "caterpillar-rows" and spec.kind == "caterpillar":
        order = []
        for i in range(spec.spine):
            order.append(i)
            order += [spec.spine + i * spec.legs + j for j in range(spec.legs)]
        return order
    return list(range(n))


def _default_layout(kind: str) -> str:
    return {"caterpillar": "caterpillar-rows", "star": "star-rows"}.get(kind, "grid")


def _fmt(x: float) -> str:
    return f"{x:.1f}"


def _color(tag: str, colors: Mapping[str, str]) -> str:
    if tag in colors:
        return colors[tag]
    return colors.get(tag.split(":")[0], "#444444")


def render_svg(emb: Embedding, rs: RenderSpec = RenderSpec()) -> str:
    rep = verify_embedding(emb)
    if not rep.ok:
        raise EmbeddingError(f"refusing to draw an invalid embedding:\n{rep}")
    layout = rs.host_layout or _default_layout(emb.host.kind)
    strips = _strip_order(emb, layout)
    y_of: Dict[int, int] = {h: k for k, h in enumerate(strips)}
    s = rs.cell_size
    pad = s
    width = pad * 2 + s * max(emb.host.rows - 1, 0)
    height = pad * 2 + s * max(len(strips) - 1, 0)

    def xy(cell):
        h, r = cell
        return pad + s * r, pad + s * y_of[h]

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_fmt(width)}" '
        f'height="{_fmt(height)}" viewBox="0 0 {_fmt(width)} {_fmt(height)}">',
        f'<desc>{escape(emb.host.describe())}</desc>',
        '<g class="host">',
    ]
    spec = emb.host
    if spec.n_cells <= rs.max_host_cells:
        host = spec.host
        for h in strips:
            for r in range(spec.rows):
                x, y = xy((h, r))
                out.append(f'<circle class="cell" cx="{_fmt(x)}" cy="{_fmt(y)}" r="1.5" fill="#dddddd"/>')
        if rs.show_diagonals and spec.product == STRONG:
            for a, b in host.edges:
                for r in range(spec.rows - 1):
                    for c1, c2 in (((a, r), (b, r + 1)), ((a, r + 1), (b, r))):
                        (x1, y1), (x2, y2) = xy(c1), xy(c2)
                        out.append(f'<line class="host-edge" x1="{_fmt(x1)}" y1="{_fmt(y1)}" '
                                   f'x2="{_fmt(x2)}" y2="{_fmt(y2)}" stroke="#eeeeee"/>')
    out.append("</g>")
    out.append('<g class="guest">')
    g = emb.guest
    for u, v in g.edges:
        (x1, y1), (x2, y2) = xy(emb.map[u]), xy(emb.map[v])
        kind = edge_orientation(emb.map[u], emb.map[v])
        dash = ' stroke-dasharray="3,2"' if kind == DIAGONAL and spec.product != CARTESIAN else ""
        out.append(f'<line class="edge" x1="{_fmt(x1)}" y1="{_fmt(y1)}" x2="{_fmt(x2)}" '
                   f'y2="{_fmt(y2)}" stroke="#555555"{dash}/>')
    radius = max(s * 0.25, 1.0)
    for v in g.vertices():
        x, y = xy(emb.map[v])
        tag = g.vtag.get(v, "")
        out.append(f'<circle class="node" cx="{_fmt(x)}" cy="{_fmt(y)}" r="{_fmt(radius)}" '
                   f'fill="{_color(tag, rs.role_colors)}"><title>{v} {escape(tag)}</title></circle>')
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
