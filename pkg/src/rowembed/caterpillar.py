"""Linear-time king's-graph embeddability of caterpillars.

A caterpillar with spine degrees ``d_1..d_k`` embeds in the king's graph iff
every contiguous run of the spine has degree sum at most ``6 * length + 2``,
i.e. iff the maximum subarray sum of ``d_i - 6`` is at most 2.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from .embedding import Embedding, verify_embedding
from .graph import Graph, recognize_caterpillar
from .products import STRONG, HostSpec


class InvariantError(RuntimeError):
    """Raised when a construction that should always succeed fails."""


@dataclass(frozen=True)
class SpineProfile:
    degrees: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "degrees", tuple(int(d) for d in self.degrees))
        if any(d < 0 for d in self.degrees):
            raise ValueError("degrees must be nonnegative")

    @classmethod
    def of(cls, g: Graph) -> "SpineProfile":
        cat = recognize_caterpillar(g)
        if cat is None:
            raise ValueError("graph is not a caterpillar")
        return cls(tuple(cat.profile(g)))

    def __len__(self) -> int:
        return len(self.degrees)


def max_excess(degrees: Sequence[int], stats: Optional[dict] = None) -> int:
    """Largest sum of ``d - 6`` over nonempty contiguous runs (Kadane).

    If ``stats`` is given, ``stats["ops"]`` receives the number of loop steps.
    """
    best = None
    run = 0
    ops = 0
    for d in degrees:
        ops += 1
        x = d - 6
        run = x if run < 0 else run + x
        if best is None or run > best:
            best = run
    if stats is not None:
        stats["ops"] = ops
    return best if best is not None else 0


def decide_profile(profile: SpineProfile, stats: Optional[dict] = None) -> bool:
    if not profile.degrees:
        return True
    return max_excess(profile.degrees, stats) < 3


def decide_fast(g: Graph, stats: Optional[dict] = None) -> bool:
    """King's-graph embeddability of a caterpillar in time linear in the spine."""
    return decide_profile(SpineProfile.of(g), stats)


def direct_condition_check(profile: SpineProfile) -> bool:
    """Quadratic check of ``sum(d) <= 6 * len + 2`` over every subpath."""
    d = profile.degrees
    for i in range(len(d)):
        total = 0
        for j in range(i, len(d)):
            total += d[j]
            if total > 6 * (j - i + 1) + 2:
                return False
    return True


def _leg_slots(i: int) -> List[Tuple[int, int]]:
    """Cells around ``(i, i)`` by increasing ``x + y``, ties lexicographic."""
    cells = [(i + dx, i + dy) for dx in (-1, 0, 1) for dy in (-1, 0, 1) if dx or dy]
    return sorted(cells, key=lambda c: (c[0] + c[1], c))


def construct_diagonal_embedding(g: Graph) -> Embedding:
    """Spine on the main diagonal, legs greedily at minimal ``x + y``.

    Coordinates are shifted by one so the first spine vertex sits at
    ``(1, 1)``; the host is ``Path(k+2) x P_{k+2}``.
    """
    cat = recognize_caterpillar(g)
    if cat is None:
        raise ValueError("graph is not a caterpillar")
    if not decide_profile(SpineProfile(tuple(cat.profile(g)))):
        raise ValueError("caterpillar violates the degree condition; no embedding exists")
    k = len(cat.spine)
    cells: List[Optional[Tuple[int, int]]] = [None] * g.n
    taken = set()
    for i, v in enumerate(cat.spine, start=1):
        cells[v] = (i, i)
        taken.add((i, i))
    for i, v in enumerate(cat.spine, start=1):
        slots = (c for c in _leg_slots(i) if c not in taken and min(c) >= 0)
        for leaf in cat.legs[v]:
            c = next(slots, None)
            if c is None:
                raise InvariantError(f"no free cell for a leg of spine vertex {i}")
            cells[leaf] = c
            taken.add(c)
    emb = Embedding(g, HostSpec.path(k + 2, k + 2, STRONG), tuple(cells))
    report = verify_embedding(emb)
    if not report.ok:
        raise InvariantError(f"diagonal construction is invalid:\n{report}")
    return emb
