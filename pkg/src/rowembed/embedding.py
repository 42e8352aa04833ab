"""Embedding witnesses, their verification, and layerings."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from .graph import Edge, Graph, edge_key
from .products import (DIAGONAL, HORIZONTAL, VERTICAL, HostSpec, edge_orientation)

FREE = "free"
LABELS = (HORIZONTAL, VERTICAL, FREE)

Cell = Tuple[int, int]


class EmbeddingError(ValueError):
    pass


@dataclass(frozen=True)
class OrientationConstraint:
    """Per-edge orientation requirements; unlisted edges are free."""

    labels: Mapping[Edge, str] = field(default_factory=dict)

    def __post_init__(self):
        norm = {}
        for e, lab in dict(self.labels).items():
            if lab not in LABELS:
                raise ValueError(f"unknown orientation label {lab!r}")
            norm[edge_key(*e)] = lab
        object.__setattr__(self, "labels", norm)

    def label(self, u: int, v: int) -> str:
        return self.labels.get(edge_key(u, v), FREE)

    def check_against(self, g: Graph) -> None:
        for u, v in self.labels:
            if not g.has_edge(u, v):
                raise ValueError(f"orientation label on non-edge ({u}, {v})")

    def __len__(self) -> int:
        return len(self.labels)


@dataclass(frozen=True)
class Embedding:
    guest: Graph
    host: HostSpec
    map: Tuple[Cell, ...]

    def __post_init__(self):
        object.__setattr__(self, "map", tuple((int(h), int(r)) for h, r in self.map))

    def cell(self, v: int) -> Cell:
        return self.map[v]

    def orientation(self, u: int, v: int) -> str:
        return edge_orientation(self.map[u], self.map[v])

    # -- JSON -----------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "host": self.host.to_json(),
            "rows": self.host.rows,
            "map": [[v, h, r] for v, (h, r) in enumerate(self.map)],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True, separators=(",", ":")) + "\n"


def embedding_from_json(data: dict, guest: Graph) -> Embedding:
    host = HostSpec.from_json(data["host"], int(data["rows"]))
    entries = sorted(data["map"], key=lambda t: t[0])
    if [t[0] for t in entries] != list(range(guest.n)):
        raise EmbeddingError("embedding map must list every guest vertex exactly once")
    return Embedding(guest, host, tuple((t[1], t[2]) for t in entries))


def loads_embedding(text: str, guest: Graph) -> Embedding:
    return embedding_from_json(json.loads(text), guest)


@dataclass(frozen=True)
class Violation:
    kind: str
    detail: str


@dataclass
class EmbeddingReport:
    violations: List[Violation] = field(default_factory=list)
    truncated: bool = False

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.ok

    def kinds(self) -> set:
        return {v.kind for v in self.violations}

    def __str__(self) -> str:
        if self.ok:
            return "valid embedding"
        lines = [f"{v.kind}: {v.detail}" for v in self.violations]
        if self.truncated:
            lines.append("(further violations omitted)")
        return "\n".join(lines)


def verify_embedding(e: Embedding, constraint: Optional[OrientationConstraint] = None,
                     limit: int = 20) -> EmbeddingReport:
    """Check injectivity, edge preservation and orientation labels.

    Collects at most ``limit`` violations. Raises if the map does not cover
    every guest vertex.
    """
    g = e.guest
    if len(e.map) != g.n:
        raise EmbeddingError(f"map covers {len(e.map)} of {g.n} guest vertices")
    report = EmbeddingReport()

    def add(kind: str, detail: str) -> bool:
        if len(report.violations) >= limit:
            report.truncated = True
            return False
        report.violations.append(Violation(kind, detail))
        return True

    owner: Dict[Cell, int] = {}
    for v, c in enumerate(e.map):
        if not e.host.contains(c):
            if not add("outside-host", f"vertex {v} -> {c} outside {e.host.describe()}"):
                return report
            continue
        if c in owner:
            if not add("non-injective", f"vertices {owner[c]} and {v} both map to {c}"):
                return report
        else:
            owner[c] = v
    for u, v in g.edges:
        a, b = e.map[u], e.map[v]
        if not (e.host.contains(a) and e.host.contains(b)):
            continue
        if not e.host.adjacent(a, b):
            if not add("non-edge", f"edge ({u}, {v}) -> {a}, {b} is not a product edge"):
                return report
            continue
        if constraint is not None:
            want = constraint.label(u, v)
            got = edge_orientation(a, b)
            if want != FREE and want != got:
                if not add("orientation", f"edge ({u}, {v}) labelled {want} but is {got}"):
                    return report
    return report


def spine_edges_diagonal(e: Embedding, spine: Sequence[int]) -> bool:
    return all(e.orientation(a, b) == DIAGONAL for a, b in zip(spine, spine[1:]))


# -- layerings --------------------------------------------------------------

@dataclass(frozen=True)
class Layering:
    """Layer index per vertex, shifted so the lowest layer is 0.

    Only a shift is applied: closing gaps between layers would turn an edge
    spanning two layers into a valid one.
    """

    layer_of: Tuple[int, ...]

    def __post_init__(self):
        low = min(self.layer_of, default=0)
        object.__setattr__(self, "layer_of", tuple(int(x) - low for x in self.layer_of))

    @classmethod
    def from_values(cls, values: Iterable[int]) -> "Layering":
        return cls(tuple(values))


def verify_layering(g: Graph, layering: Layering) -> bool:
    lay = layering.layer_of
    if len(lay) != g.n:
        raise ValueError("layering must assign every vertex")
    return all(abs(lay[u] - lay[v]) <= 1 for u, v in g.edges)


def layer_span(g: Graph, layering: Layering) -> int:
    if not verify_layering(g, layering):
        raise ValueError("not a valid layering")
    return len(set(layering.layer_of))
