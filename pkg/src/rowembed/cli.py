"""Command-line interface.

Exit status: 0 yes / success, 1 no, 2 inconclusive, 64 usage error,
65 malformed input, 66 missing input file, 73 cannot write output.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import List, Optional, Sequence

from . import certify
from .caterpillar import SpineProfile, construct_diagonal_embedding, decide_profile, max_excess
from .embedding import Embedding, EmbeddingError, OrientationConstraint, embedding_from_json
from .graph import Graph, read_edgelist, recognize_caterpillar, write_edgelist
from .logic_engine import (build_g0, build_pipeline, ensure_spacer, parse_nae, pipeline_witness,
                           witness_embedding)
from .oracles import naive_embed, nae_satisfiable, three_partition
from .partition import build_paddle_tree, normalize_instance, parse_partition, partition_witness
from .products import CARTESIAN, PRODUCTS, STRONG, HostSpec
from .render import LAYOUTS, RenderSpec, render_svg
from .solver import (ROW_PARAMS, Outcome, SearchConfig, embed_into, row_param_one,
                     row_treewidth_one)
from .transforms import (leaf_pad, leaf_pad_lift, tv_gadget_transform, tv_witness_lift,
                         universal_vertex)

EXIT_YES, EXIT_NO, EXIT_INCONCLUSIVE = 0, 1, 2
EX_USAGE, EX_DATAERR, EX_NOINPUT, EX_CANTCREAT = 64, 65, 66, 73

OUTCOME_EXIT = {Outcome.YES: EXIT_YES, Outcome.NO: EXIT_NO, Outcome.INCONCLUSIVE: EXIT_INCONCLUSIVE}


class CliError(Exception):
    def __init__(self, message: str, code: int = EX_USAGE):
        super().__init__(message)
        self.code = code


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise CliError(f"{self.prog}: {message}", EX_USAGE)


# -- I/O helpers -------------------------------------------------------------------

def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except FileNotFoundError:
        raise CliError(f"no such file: {path}", EX_NOINPUT)
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc}", EX_NOINPUT)


def _write(path: Optional[str], text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
        return
    try:
        Path(path).write_text(text)
    except OSError as exc:
        raise CliError(f"cannot write {path}: {exc}", EX_CANTCREAT)


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=1) + "\n"


def _graph(path: str) -> Graph:
    try:
        return read_edgelist(_read(path))
    except ValueError as exc:
        raise CliError(f"{path}: {exc}", EX_DATAERR)


def parse_host(text: str, product: str, rows: int) -> HostSpec:
    """``path:K``, ``cat:S,L``, ``star:L``, ``tree:@file`` or ``graph:@file``."""
    kind, _, arg = text.partition(":")
    try:
        if kind == "path":
            return HostSpec.path(int(arg), rows, product)
        if kind == "cat":
            s, legs = arg.split(",")
            return HostSpec.caterpillar(int(s), int(legs), rows, product)
        if kind == "star":
            return HostSpec.star(int(arg), rows, product)
        if kind in ("tree", "graph") and arg.startswith("@"):
            g = _graph(arg[1:])
            return HostSpec.tree(g, rows, product) if kind == "tree" else HostSpec.explicit(g, rows, product)
    except ValueError as exc:
        raise CliError(f"bad host {text!r}: {exc}")
    raise CliError(f"bad host {text!r}; expected path:K, cat:S,L, star:L, tree:@file or graph:@file")


def _labels(path: Optional[str]) -> Optional[OrientationConstraint]:
    if not path:
        return None
    try:
        data = json.loads(_read(path))
        return OrientationConstraint({(int(u), int(v)): lab for u, v, lab in data})
    except (ValueError, TypeError) as exc:
        raise CliError(f"{path}: labels must be a JSON list of [u, v, label]: {exc}", EX_DATAERR)


def _embedding(path: str, g: Graph) -> Embedding:
    """Read an embedding, also accepting the output of ``embed``/``caterpillar``."""
    try:
        data = json.loads(_read(path))
        if "embedding" in data:
            data = data["embedding"]
        if data is None:
            raise CliError(f"{path}: no embedding recorded", EX_DATAERR)
        return embedding_from_json(data, g)
    except (ValueError, KeyError, TypeError) as exc:
        raise CliError(f"{path}: not an embedding: {exc}", EX_DATAERR)


def _bools(text: str, n: int) -> List[bool]:
    text = text.strip().upper()
    if len(text) != n or set(text) - {"T", "F"}:
        raise CliError(f"assignment must be {n} letters from T/F, got {text!r}")
    return [c == "T" for c in text]


def _groups(text: str) -> List[List[int]]:
    try:
        return [[int(x) for x in grp.split(",")] for grp in text.split(";")]
    except ValueError:
        raise CliError(f"groups must look like '0,1,2;3,4,5', got {text!r}")


# -- commands ----------------------------------------------------------------------

def cmd_embed(args) -> int:
    g = _graph(args.guest)
    cfg = SearchConfig(node_budget=args.budget, ordering_seed=args.seed,
                       symmetry_breaking=not args.no_symmetry, constraint=_labels(args.labels))
    if args.param:
        if args.host:
            raise CliError("give either --host or --param, not both")
        if args.param == "treewidth":
            res = row_treewidth_one(g, cfg=cfg)
        else:
            res = row_param_one(g, args.param, cfg)
    else:
        if not args.host:
            raise CliError("embed needs --host or --param")
        spec = parse_host(args.host, args.product, args.rows or max(g.n, 1))
        res = embed_into(g, spec, cfg)
    out = {"outcome": res.outcome.value, "nodes": res.nodes, "message": res.message,
           "embedding": res.embedding.to_json() if res.embedding else None}
    _write(args.out, _dump(out))
    return OUTCOME_EXIT[res.outcome]


def cmd_caterpillar(args) -> int:
    g = _graph(args.graph)
    cat = recognize_caterpillar(g)
    if cat is None:
        raise CliError(f"{args.graph}: graph is not a caterpillar", EX_DATAERR)
    prof = SpineProfile(tuple(cat.profile(g)))
    ok = decide_profile(prof)
    out = {"embeddable": ok, "profile": list(prof.degrees),
           "max_excess": max_excess(prof.degrees) if prof.degrees else None, "embedding": None}
    if ok and not args.no_construct:
        out["embedding"] = construct_diagonal_embedding(g).to_json()
    _write(args.out, _dump(out))
    return EXIT_YES if ok else EXIT_NO


def cmd_transform(args) -> int:
    g = _graph(args.graph)
    kind = args.kind
    try:
        if kind == "tv":
            art = tv_gadget_transform(g)
        elif kind in ("pad4", "pad6"):
            art = leaf_pad(g, int(kind[-1]))
        else:
            art = universal_vertex(g)
    except ValueError as exc:
        raise CliError(str(exc), EX_DATAERR)
    _write(args.out, write_edgelist(art.output))
    if args.ports:
        _write(args.ports, _dump(art.to_json()))
    if args.witness:
        if kind == "universal":
            raise CliError("the universal-vertex transform has no witness lift")
        try:
            emb = _embedding(args.witness, g)
            lifted = tv_witness_lift(g, emb) if kind == "tv" else leaf_pad_lift(g, art, emb)
        except (EmbeddingError, ValueError, KeyError) as exc:
            raise CliError(f"{args.witness}: {exc}", EX_DATAERR)
        _write(args.lifted, lifted.dumps())
    return EXIT_YES


def _roles(g: Graph, labels: Optional[OrientationConstraint] = None) -> dict:
    out = {"vertex_roles": {str(v): t for v, t in sorted(g.vtag.items())}}
    if labels is not None:
        out["labels"] = [[u, v, lab] for (u, v), lab in sorted(labels.labels.items())]
    return out


def cmd_gen(args) -> int:
    if args.kind in ("logic-engine", "pipeline"):
        try:
            inst = ensure_spacer(parse_nae(_read(args.instance)))
        except ValueError as exc:
            raise CliError(f"{args.instance}: {exc}", EX_DATAERR)
        gadget = build_g0(inst)
        asg = _bools(args.assignment, inst.n) if args.assignment else None
        if args.kind == "logic-engine":
            _write(args.out, write_edgelist(gadget.graph))
            if args.roles:
                _write(args.roles, _dump(_roles(gadget.graph, gadget.labels)))
            if asg is not None:
                try:
                    emb = witness_embedding(gadget, asg, args.product)
                except EmbeddingError as exc:
                    sys.stderr.write(f"{exc}\n")
                    return EXIT_NO
                _write(args.witness, emb.dumps())
            return EXIT_YES
        p = build_pipeline(gadget, args.variant)
        _write(args.out, write_edgelist(p.g))
        if args.roles:
            _write(args.roles, _dump(dict(_roles(p.g, p.labels()), stages=p.fixture)))
        if asg is not None:
            try:
                emb = pipeline_witness(p, gadget, asg)
            except EmbeddingError as exc:
                sys.stderr.write(f"{exc}\n")
                return EXIT_NO
            _write(args.witness, emb.dumps())
        return EXIT_YES
    try:
        raw = parse_partition(_read(args.instance))
        inst = normalize_instance(raw.a, raw.n)
    except ValueError as exc:
        raise CliError(f"{args.instance}: {exc}", EX_DATAERR)
    t = build_paddle_tree(inst)
    _write(args.out, write_edgelist(t.tree))
    if args.roles:
        _write(args.roles, _dump(dict(_roles(t.tree), numbers=list(inst.a), B=inst.B)))
    if args.groups:
        try:
            emb = partition_witness(t, _groups(args.groups))
        except ValueError as exc:
            sys.stderr.write(f"{exc}\n")
            return EXIT_NO
        _write(args.witness, emb.dumps())
    return EXIT_YES


def cmd_certify(args) -> int:
    if args.suite == "logic-engine":
        results = [certify.logic_engine_random(args.trials, args.n, args.m, args.seed)]
    elif args.suite == "paddle-tree":
        results = [certify.partition_sweep(max_B=args.max_b)]
    elif args.suite == "caterpillar":
        results = certify.certify_caterpillar(args.seed)
    else:
        results = certify.certify_products(args.seed)
    for r in results:
        print(r)
    return EXIT_YES if all(r.passed for r in results) else EXIT_NO


def cmd_render(args) -> int:
    g = _graph(args.graph)
    try:
        emb = _embedding(args.embedding, g)
        svg = render_svg(emb, RenderSpec(cell_size=args.cell_size, show_diagonals=args.diagonals,
                                         host_layout=args.layout or ""))
    except (EmbeddingError, ValueError, KeyError) as exc:
        raise CliError(f"{args.embedding}: {exc}", EX_DATAERR)
    _write(args.out, svg)
    return EXIT_YES


def cmd_oracle(args) -> int:
    try:
        if args.kind == "nae":
            rep = nae_satisfiable(parse_nae(_read(args.instance)))
            witness = rep.witness
        elif args.kind == "3part":
            inst = parse_partition(_read(args.instance))
            if args.normalize:
                inst = normalize_instance(inst.a, inst.n)
            rep = three_partition(inst)
            witness = rep.witness
        else:
            g = _graph(args.guest)
            spec = parse_host(args.host, args.product, args.rows or max(g.n, 1))
            rep = naive_embed(g, spec)
            witness = rep.witness.to_json() if rep.witness else None
    except ValueError as exc:
        raise CliError(str(exc), EX_DATAERR)
    _write(args.out, _dump({"answer": rep.answer, "nodes": rep.nodes, "witness": witness}))
    return EXIT_YES if rep.answer else EXIT_NO


# -- parser ------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="rowembed", description="Embeddings into products of a tree with a path.")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    def host_opts(q):
        q.add_argument("--host", help="path:K | cat:S,L | star:L | tree:@file | graph:@file")
        q.add_argument("--product", choices=PRODUCTS, default=STRONG)
        q.add_argument("--rows", type=int, default=0, help="rows of P (default: guest size)")

    q = sub.add_parser("embed", help="decide an embedding and print the witness")
    q.add_argument("--guest", required=True)
    host_opts(q)
    q.add_argument("--param", choices=ROW_PARAMS + ("treewidth",),
                   help="decide 'row <param> = 1' instead of a fixed host")
    q.add_argument("--labels", help="JSON list of [u, v, horizontal|vertical|free]")
    q.add_argument("--budget", type=int, default=2_000_000)
    q.add_argument("--seed", type=int, default=0)
    q.add_argument("--no-symmetry", action="store_true")
    q.add_argument("--out")
    q.set_defaults(func=cmd_embed)

    q = sub.add_parser("caterpillar", help="linear-time king's-graph test for caterpillars")
    q.add_argument("--graph", required=True)
    q.add_argument("--no-construct", action="store_true")
    q.add_argument("--out")
    q.set_defaults(func=cmd_caterpillar)

    q = sub.add_parser("transform", help="T(v) gadget, leaf padding or universal vertex")
    q.add_argument("kind", choices=("tv", "pad4", "pad6", "universal"))
    q.add_argument("--graph", required=True)
    q.add_argument("--out")
    q.add_argument("--ports", help="write the port map as JSON")
    q.add_argument("--witness", help="embedding JSON of the input graph to lift")
    q.add_argument("--lifted", help="where to write the lifted embedding")
    q.set_defaults(func=cmd_transform)

    q = sub.add_parser("gen", help="reduction gadgets")
    q.add_argument("kind", choices=("logic-engine", "pipeline", "paddle-tree"))
    q.add_argument("--instance", required=True, help="'p nae3' file or 3-partition file")
    q.add_argument("--out")
    q.add_argument("--roles", help="write vertex roles (and labels) as JSON")
    q.add_argument("--assignment", help="truth values such as TFF, to build a witness")
    q.add_argument("--groups", help="3-partition solution such as '0,1,2;3,4,5'")
    q.add_argument("--witness", help="where to write the witness embedding")
    q.add_argument("--variant", choices=PRODUCTS, default=STRONG)
    q.add_argument("--product", choices=PRODUCTS, default=CARTESIAN,
                   help="host product for the logic-engine witness")
    q.set_defaults(func=cmd_gen)

    q = sub.add_parser("certify", help="run a certification suite")
    q.add_argument("suite", choices=("logic-engine", "paddle-tree", "caterpillar", "products"))
    q.add_argument("--n", type=int, default=3, help="max variables (logic-engine)")
    q.add_argument("--m", type=int, default=4, help="max clauses before the spacer (logic-engine)")
    q.add_argument("--trials", type=int, default=100)
    q.add_argument("--seed", type=int, default=0)
    q.add_argument("--max-b", type=int, default=48, help="largest B (paddle-tree)")
    q.set_defaults(func=cmd_certify)

    q = sub.add_parser("render", help="draw an embedding as SVG")
    q.add_argument("--embedding", required=True)
    q.add_argument("--graph", required=True)
    q.add_argument("--out")
    q.add_argument("--cell-size", type=float, default=24.0)
    q.add_argument("--diagonals", action="store_true", help="draw the host's diagonal edges")
    q.add_argument("--layout", choices=LAYOUTS)
    q.set_defaults(func=cmd_render)

    q = sub.add_parser("oracle", help="exhaustive reference answers")
    q.add_argument("kind", choices=("nae", "3part", "embed"))
    q.add_argument("--instance")
    q.add_argument("--normalize", action="store_true", help="scale 3-partition numbers by 8 if needed")
    q.add_argument("--guest")
    host_opts(q)
    q.add_argument("--out")
    q.set_defaults(func=cmd_oracle)
    return p


def run(argv: Optional[Sequence[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        if args.command == "oracle":
            if args.kind in ("nae", "3part") and not args.instance:
                raise CliError(f"oracle {args.kind} needs --instance")
            if args.kind == "embed" and not (args.guest and args.host):
                raise CliError("oracle embed needs --guest and --host")
        return args.func(args)
    except CliError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return exc.code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
