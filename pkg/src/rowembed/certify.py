"""Certification suites: each one is a self-contained experiment that compares
two independent computations, or checks a construction against its formulas.

Every suite returns a :class:`SuiteResult`; ``str(result)`` is a single
``PASS``/``FAIL`` line.
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass, field
from typing import Callable, Iterable, List, Optional, Sequence

import numpy as np

from .caterpillar import (SpineProfile, construct_diagonal_embedding, decide_fast,
                          decide_profile, direct_condition_check, max_excess)
from .embedding import Layering, layer_span, spine_edges_diagonal, verify_embedding, verify_layering
from .graph import (Graph, caterpillar_graph, complete_graph, is_bipartite, is_series_parallel,
                    recognize_caterpillar)
from .logic_engine import (NaeInstance, build_g0, build_pipeline, engine_feasible,
                           ensure_spacer, extract_assignment, pipeline_witness, witness_embedding)
from .oracles import naive_embed, nae_satisfiable, three_partition
from .partition import (PartitionInstance, build_paddle_tree, extract_partition,
                        partition_witness, pathwidth_two_certificate)
from .products import (CARTESIAN, HORIZONTAL, STRONG, HostSpec, build_product,
                       product_edge_count)
from .solver import Outcome, embed_into, king_embeddable, row_treewidth_one
from .transforms import T_SIZE, ball, tv_witness_lift, universal_vertex
from .trees import enumerate_free_trees


@dataclass
class SuiteResult:
    name: str
    checks: int = 0
    failures: List[str] = field(default_factory=list)
    notes: List[str] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures and self.checks > 0

    def check(self, ok: bool, what: str) -> bool:
        self.checks += 1
        if not ok:
            self.failures.append(what)
        return ok

    def __str__(self) -> str:
        head = "PASS" if self.passed else "FAIL"
        extra = "; ".join(self.notes)
        line = f"{head} {self.name}: {self.checks - len(self.failures)}/{self.checks} checks"
        if extra:
            line += f" ({extra})"
        line += f" [{self.seconds:.1f}s]"
        if self.failures:
            line += "\n  first failure: " + self.failures[0]
        return line


def _timed(fn: Callable[..., SuiteResult]) -> Callable[..., SuiteResult]:
    def run(*args, **kwargs) -> SuiteResult:
        t0 = time.perf_counter()
        res = fn(*args, **kwargs)
        res.seconds = time.perf_counter() - t0
        return res
    run.__name__ = fn.__name__
    run.__doc__ = fn.__doc__
    return run


# -- caterpillars --------------------------------------------------------------

def small_caterpillars(max_n: int) -> Iterable[Graph]:
    for n in range(1, max_n + 1):
        for t in enumerate_free_trees(n):
            if recognize_caterpillar(t) is not None:
                yield t


@_timed
def caterpillar_exhaustive(max_n: int = 9, extra: Sequence[Graph] = ()) -> SuiteResult:
    """Degree condition vs quadratic check vs exact search, every caterpillar."""
    extra = list(extra)
    parts = [f"all caterpillars <= {max_n} vertices"] if max_n else []
    if extra:
        parts.append(f"{len(extra)} given")
    res = SuiteResult("caterpillar criterion, " + " plus ".join(parts))
    yes = no = 0
    for g in itertools.chain(small_caterpillars(max_n), extra):
        fast = decide_fast(g)
        slow = direct_condition_check(SpineProfile.of(g))
        exact = king_embeddable(g)
        if exact.outcome is Outcome.INCONCLUSIVE:
            res.check(False, f"search inconclusive on {g!r}")
            continue
        res.check(fast == slow == bool(exact), f"{g!r}: fast={fast} direct={slow} search={bool(exact)}")
        yes += fast
        no += not fast
    res.notes.append(f"{yes} embeddable, {no} not")
    return res


@_timed
def kadane_random(samples: int = 10_000, seed: int = 0, max_len: int = 40,
                  linear_sizes: Sequence[int] = (10, 100, 1_000, 10_000, 100_000)) -> SuiteResult:
    """Linear decision vs O(k^2) subpath sums on random profiles; op counts."""
    res = SuiteResult(f"max-subarray form, {samples} random profiles")
    rng = np.random.default_rng(seed)
    for _ in range(samples):
        k = int(rng.integers(1, max_len + 1))
        prof = SpineProfile(tuple(int(x) for x in rng.integers(0, 13, size=k)))
        res.check(decide_profile(prof) == direct_condition_check(prof), f"profile {prof.degrees}")
    worst = 0.0
    for k in linear_sizes:
        stats: dict = {}
        max_excess(rng.integers(0, 13, size=k).tolist(), stats)
        worst = max(worst, stats["ops"] / k)
        res.check(stats["ops"] <= k, f"{stats['ops']} ops for k={k}")
    res.notes.append(f"max ops/k = {worst:.2f}")
    return res


def random_caterpillar(rng: random.Random, max_spine: int = 12, max_legs: int = 8) -> Graph:
    k = rng.randint(1, max_spine)
    return caterpillar_graph([rng.randint(0, max_legs) for _ in range(k)])


@_timed
def caterpillar_constructive(count: int = 1000, seed: int = 0) -> SuiteResult:
    """Greedy diagonal construction on random accepted caterpillars."""
    res = SuiteResult(f"diagonal construction, {count} accepted caterpillars")
    rng = random.Random(seed)
    done = tried = 0
    while done < count:
        tried += 1
        g = random_caterpillar(rng)
        if not decide_fast(g):
            continue
        done += 1
        try:
            emb = construct_diagonal_embedding(g)
        except Exception as exc:  # the construction raises on any invariant break
            res.check(False, f"{g!r}: {exc}")
            continue
        spine = recognize_caterpillar(g).spine
        res.check(verify_embedding(emb).ok and spine_edges_diagonal(emb, spine), repr(g))
    res.notes.append(f"{tried} drawn")
    return res


# -- products ------------------------------------------------------------------

def random_host(rng: random.Random) -> HostSpec:
    product = rng.choice((STRONG, CARTESIAN))
    rows = rng.randint(1, 8)
    kind = rng.choice(("path", "caterpillar", "star", "tree"))
    if kind == "path":
        return HostSpec.path(rng.randint(1, 10), rows, product)
    if kind == "caterpillar":
        return HostSpec.caterpillar(rng.randint(1, 5), rng.randint(1, 3), rows, product)
    if kind == "star":
        return HostSpec.star(rng.randint(1, 8), rows, product)
    n = rng.randint(1, 9)
    edges = [(rng.randrange(v), v) for v in range(1, n)]
    return HostSpec.tree(Graph(n, edges), rows, product)


@_timed
def product_counts(count: int = 200, seed: int = 0) -> SuiteResult:
    """Materialized product edge counts vs the closed form; K_4 = P_2 x P_2."""
    res = SuiteResult(f"product arithmetic, {count} random hosts")
    rng = random.Random(seed)
    for _ in range(count):
        spec = random_host(rng)
        pg = build_product(spec)
        h = spec.host
        want = product_edge_count(h.n, h.m, spec.rows, spec.product)
        res.check(pg.base.m == want and pg.base.n == h.n * spec.rows,
                  f"{spec.describe()}: {pg.base.m} edges, closed form {want}")
    k4 = build_product(HostSpec.path(2, 2, STRONG)).base
    res.check(k4.edges == complete_graph(4).edges, "P_2 x P_2 is not K_4")
    return res


@_timed
def five_common_neighbours(spine: int = 6, legs: int = 5, rows: int = 6) -> SuiteResult:
    """Edges of ``Caterpillar(spine, legs) x P_rows`` with >= 5 common neighbours are horizontal."""
    res = SuiteResult(f"five-common-neighbour forcing, Caterpillar({spine},{legs}) x P_{rows}")
    pg = build_product(HostSpec.caterpillar(spine, legs, rows, STRONG))
    g = pg.base
    heavy = 0
    for u, v in g.edges:
        if len(g.neighbors(u) & g.neighbors(v)) >= 5:
            heavy += 1
            res.check(pg.orientation(u, v) == HORIZONTAL, f"edge {pg.coords[u]}-{pg.coords[v]}")
    res.notes.append(f"{heavy} of {g.m} edges have >= 5 common neighbours")
    return res


# -- solver vs oracle ------------------------------------------------------------

def host_menu(max_cells: int = 60) -> List[HostSpec]:
    menu = []
    for product in (STRONG, CARTESIAN):
        for size, rows in ((1, 6), (2, 2), (2, 3), (3, 2), (3, 3), (4, 2), (4, 4), (6, 6)):
            menu.append(HostSpec.path(size, rows, product))
        for spine, legs, rows in ((1, 3, 3), (2, 1, 2), (2, 1, 3), (2, 2, 2), (3, 1, 3)):
            menu.append(HostSpec.caterpillar(spine, legs, rows, product))
        for leaves, rows in ((2, 3), (3, 2), (3, 3), (4, 2), (5, 3), (8, 2)):
            menu.append(HostSpec.star(leaves, rows, product))
    return [h for h in menu if h.n_cells <= max_cells]


@_timed
def solver_vs_oracle(guests: Iterable[Graph], hosts: Optional[Sequence[HostSpec]] = None) -> SuiteResult:
    """Pruned search and the naive oracle agree on every guest/host pair."""
    hosts = list(hosts) if hosts is not None else host_menu()
    res = SuiteResult(f"solver vs naive oracle, {len(hosts)} hosts")
    yes = 0
    guests = list(guests)
    for g in guests:
        for spec in hosts:
            a = embed_into(g, spec)
            b = naive_embed(g, spec)
            ok = a.outcome is not Outcome.INCONCLUSIVE and bool(a) == bool(b)
            if ok and b:
                ok = verify_embedding(b.witness).ok
            res.check(ok, f"{g!r} into {spec.describe()}: solver {a.outcome.value}, oracle {b.answer}")
            yes += bool(b)
    res.notes.append(f"{len(guests)} guests, {yes} embeddable pairs")
    return res


# -- T(v) lift -------------------------------------------------------------------

def random_tree(rng: random.Random, n: int, max_degree: int = 4) -> Graph:
    while True:
        edges = [(rng.randrange(v), v) for v in range(1, n)]
        g = Graph(n, edges)
        if g.max_degree() <= max_degree:
            return g


def root_ball_ok(out: Graph, emb, root: int) -> bool:
    """The 25 vertices within distance 2 of ``root`` fill the 5 x 5 block around it."""
    near = ball(out, root, 2)
    h0, r0 = emb.map[root]
    block = {(h0 + dh, r0 + dr) for dh in range(-2, 3) for dr in range(-2, 3)}
    return len(near) == 25 and {emb.map[v] for v in near} == block


@_timed
def tv_lift_random(count: int = 50, seed: int = 0, max_n: int = 6) -> SuiteResult:
    """Grid witness of a random tree lifts to a king witness of the gadget graph."""
    res = SuiteResult(f"T(v) lift, {count} random trees")
    rng = random.Random(seed)
    for _ in range(count):
        n = rng.randint(1, max_n)
        g = random_tree(rng, n)
        grid = embed_into(g, HostSpec.path(n, n, CARTESIAN))
        if not res.check(bool(grid), f"{g!r} not found grid-embeddable"):
            continue
        lifted = tv_witness_lift(g, grid.embedding)
        out = lifted.guest
        res.check(out.n == T_SIZE * g.n and verify_embedding(lifted).ok, f"lift of {g!r}")
        roots = [v for v in out.vertices() if out.vtag.get(v) == "root"]
        for root in roots:
            res.check(root_ball_ok(out, lifted, root), f"25-ball at root {root} of {g!r}")
    return res


# -- logic engine ----------------------------------------------------------------

def random_nae(rng: random.Random, n_max: int = 3, m_max: int = 4) -> NaeInstance:
    n = rng.randint(1, n_max)
    m = rng.randint(0, m_max)
    clauses = [tuple(rng.choice((1, -1)) * rng.randint(1, n) for _ in range(3)) for _ in range(m)]
    return NaeInstance(n, tuple(clauses))


@_timed
def logic_engine_random(trials: int = 100, n_max: int = 3, m_max: int = 4, seed: int = 0,
                        pipeline: bool = True) -> SuiteResult:
    """Oracle vs gadget semantics, witnesses, and structural claims."""
    res = SuiteResult(f"logic engine, {trials} random instances (n <= {n_max}, m <= {m_max})")
    rng = random.Random(seed)
    agree = sat = 0
    for _ in range(trials):
        inst = ensure_spacer(random_nae(rng, n_max, m_max))
        oracle = nae_satisfiable(inst)
        feasible = [list(a) for a in itertools.product((False, True), repeat=inst.n)
                    if engine_feasible(inst, a)]
        if res.check(bool(oracle) == bool(feasible), f"{inst}: oracle {oracle.answer}"):
            agree += 1
        gadget = build_g0(inst)
        g0 = gadget.graph
        res.check(is_bipartite(g0) and is_series_parallel(g0), f"G0 structure for {inst}")
        res.check(len(gadget.vertices_in_row(gadget.spacer_row)) == 4 * inst.n + 1,
                  f"spacer row count for {inst}")
        if pipeline:
            pipes = [build_pipeline(gadget, v) for v in (STRONG, CARTESIAN)]
            for p in pipes:
                res.check(is_series_parallel(p.g) and p.g.max_degree() <= 16,
                          f"{p.variant} pipeline structure for {inst}")
        if not oracle:
            continue
        sat += 1
        asg = oracle.witness
        emb = witness_embedding(gadget, asg)
        res.check(verify_embedding(emb, gadget.labels).ok, f"G0 witness for {inst}")
        res.check(engine_feasible(inst, extract_assignment(gadget, emb)), f"round trip for {inst}")
        if pipeline:
            for p in pipes:
                w = pipeline_witness(p, gadget, asg)
                res.check(verify_embedding(w).ok, f"{p.variant} pipeline witness for {inst}")
    res.notes.append(f"{agree}/{trials} agreements, {sat} satisfiable")
    return res


# -- 3-partition -----------------------------------------------------------------

def partition_instances(values: Sequence[int] = (8, 16, 24, 32, 40), ns: Sequence[int] = (1, 2),
                        max_B: int = 48) -> List[PartitionInstance]:
    out = []
    for n in ns:
        for combo in itertools.combinations_with_replacement(values, 3 * n):
            total = sum(combo)
            if total % n == 0 and total // n <= max_B:
                out.append(PartitionInstance(combo, n))
    return out


def paddle_formulas_hold(t) -> bool:
    n, B, N = t.n, t.B, t.span
    tree = t.tree
    return (len(t.left_blocker) == N and len(t.right_blocker) == N
            and len(t.group_gaps) == n
            and all(len(ells) == B and len(cs) == 8 for ells, cs in t.group_gaps)
            and len(t.fold_gaps) == N // 8
            and all(len(cs) == 3 for cs, _ in t.fold_gaps)
            and all(len(h) == N - 1 for h in t.handles)
            and [len(b) for b in t.blades] == list(t.inst.a)
            and all(len(leaves) == 6 for leaves in t.leaves.values())
            and all(tree.degree(v) >= 7 for v in t.leaves)
            and tree.is_tree())


@_timed
def partition_sweep(values: Sequence[int] = (8, 16, 24, 32, 40), ns: Sequence[int] = (1, 2),
                    max_B: int = 48) -> SuiteResult:
    """Every small instance: formulas, oracle, witness and round trip."""
    insts = partition_instances(values, ns, max_B)
    res = SuiteResult(f"3-partition gadget, {len(insts)} instances")
    yes = 0
    for inst in insts:
        t = build_paddle_tree(inst)
        res.check(paddle_formulas_hold(t) and pathwidth_two_certificate(t), f"formulas for {inst}")
        oracle = three_partition(inst)
        if not oracle:
            res.check(oracle.witness is None, f"no-instance {inst} carries a witness")
            continue
        yes += 1
        emb = partition_witness(t, oracle.witness)
        res.check(verify_embedding(emb).ok, f"witness for {inst}")
        back = extract_partition(t, emb)
        res.check(sorted(map(sorted, back)) == sorted(map(sorted, oracle.witness)),
                  f"round trip for {inst}")
        shift = 2 * t.span
        res.check(all((emb.map[b[0]][1] - shift) % 8 == 0 for b in t.blades),
                  f"blade ends not divisible by 8 for {inst}")
    res.notes.append(f"{yes} solvable, {len(insts) - yes} not")
    return res


# -- layerings -------------------------------------------------------------------

def all_layerings(g: Graph) -> Iterable[List[int]]:
    """Every valid layering with layers in ``0..n-1`` (depth-first, pruned by edges)."""
    n = g.n
    lay = [0] * n

    def rec(v: int):
        if v == n:
            yield list(lay)
            return
        for x in range(n):
            if all(abs(x - lay[u]) <= 1 for u in g.neighbors(v) if u < v):
                lay[v] = x
                yield from rec(v + 1)

    yield from rec(0)


def random_graph(rng: random.Random, n: int, p: float = 0.5) -> Graph:
    return Graph(n, [(u, v) for u, v in itertools.combinations(range(n), 2) if rng.random() < p])


@_timed
def universal_layering(count: int = 20, max_n: int = 6, seed: int = 0) -> SuiteResult:
    """With a universal vertex every layering spans at most 3 layers."""
    res = SuiteResult(f"universal-vertex layering, {count} random graphs")
    rng = random.Random(seed)
    total = 0
    for _ in range(count):
        g = random_graph(rng, rng.randint(1, max_n))
        art = universal_vertex(g)
        h = art.output
        # the universal vertex goes first so others are pruned to 3 choices
        order = [art.provenance["universal"]] + list(g.vertices())
        hp = h.relabel(order)
        spans = set()
        for lay in all_layerings(hp):
            total += 1
            spans.add(layer_span(hp, Layering(tuple(lay))))
        # two non-adjacent vertices can sit on either side of the universal one
        complete = g.m == g.n * (g.n - 1) // 2
        want = 2 if complete else 3
        res.check(max(spans) == want, f"{g!r}: spans {sorted(spans)}, expected max {want}")
        res.check(verify_layering(h, Layering((0,) * h.n)), f"trivial layering of {g!r}")
    res.notes.append(f"{total} layerings enumerated")
    return res


# -- trees -----------------------------------------------------------------------

@_timed
def trees_row_treewidth(max_n: int = 8) -> SuiteResult:
    res = SuiteResult(f"row treewidth 1 for all free trees <= {max_n} vertices")
    for n in range(1, max_n + 1):
        for t in enumerate_free_trees(n):
            r = row_treewidth_one(t)
            res.check(r.outcome is Outcome.YES, f"{t!r}: {r.outcome.value}")
    return res


def certify_caterpillar(seed: int = 0) -> List[SuiteResult]:
    return [caterpillar_exhaustive(), kadane_random(seed=seed), caterpillar_constructive(seed=seed)]


def certify_products(seed: int = 0) -> List[SuiteResult]:
    return [product_counts(seed=seed), five_common_neighbours()]
