"""Command-line entry point: ``pathcompose {closure,compose,symbols,query,bench}``."""

from __future__ import annotations

import argparse
import hashlib
import os
import sys

from . import bench as bench_mod
from .cache import read_cache, write_cache
from .compose import compose_full, precompile, query
from .exceptions import PathComposeError
from .graphs import dump_graph, format_weight, parse_gluing, parse_graph
from .semiring import closure
from .symbols import generate_symbols, render_symbols


def _read(path) -> bytes:
    with open(path, "rb") as fh:
        return fh.read()


def _emit(text: str, out):
    if out is None or out == "-":
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def _load_diagram(args):
    m = parse_graph(_read(args.m))
    n = parse_graph(_read(args.n))
    return parse_gluing(_read(args.glue), m, n)


def cmd_closure(args):
    M = parse_graph(_read(args.graph))
    _emit(dump_graph(closure(M), indent=1), args.out)


def cmd_compose(args):
    d = _load_diagram(args)
    _emit(dump_graph(compose_full(d), indent=1), args.out)


def cmd_symbols(args):
    if args.k < 0:
        raise PathComposeError("k must be non-negative")
    _emit(render_symbols(generate_symbols(args.k)), args.out)


def _cache_paths(args, cache_dir):
    h = hashlib.sha256()
    for path in (args.m, args.n, args.glue):
        data = _read(path)
        h.update(len(data).to_bytes(8, "little"))
        h.update(data)
    stem = os.path.join(cache_dir, h.hexdigest()[:24])
    return stem + ".M.json", stem + ".N.json"


def cmd_query(args):
    d = _load_diagram(args)
    if args.cache_dir:
        os.makedirs(args.cache_dir, exist_ok=True)
        m_path, n_path = _cache_paths(args, args.cache_dir)
        if os.path.exists(m_path) and os.path.exists(n_path):
            pm, pn = read_cache(m_path), read_cache(n_path)
        else:
            pm, pn = precompile(d)
            write_cache(pm, m_path)
            write_cache(pn, n_path)
    else:
        pm, pn = precompile(d)
    result = query(pm, pn, args.source, args.target)
    _emit(format_weight(result.distance), args.out)


def _int_list(text: str) -> list:
    out = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        if "-" in part:
            lo, hi = part.split("-", 1)
            out.extend(range(int(lo), int(hi) + 1))
        else:
            out.append(int(part))
    if not out:
        raise argparse.ArgumentTypeError("empty list")
    return out


def cmd_bench(args):
    try:
        records = bench_mod.run_bench(args.nodes, args.boundaries, args.samples, args.seed)
    except ValueError as exc:
        raise PathComposeError(str(exc)) from None
    _emit(bench_mod.records_to_csv(records), args.out)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pathcompose",
        description="Compose shortest paths of two weighted graphs glued along a boundary.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("closure", help="all-pairs shortest paths of one graph file")
    p.add_argument("graph")
    p.add_argument("--out", help="output graph file (default: stdout)")
    p.set_defaults(func=cmd_closure)

    def glued(p):
        p.add_argument("--m", required=True, help="graph file of the first component")
        p.add_argument("--n", required=True, help="graph file of the second component")
        p.add_argument("--glue", required=True, help="gluing file")
        p.add_argument("--out", help="output file (default: stdout)")

    p = sub.add_parser("compose", help="shortest paths of the glued graph")
    glued(p)
    p.set_defaults(func=cmd_compose)

    p = sub.add_parser("symbols", help="print the composition symbols for boundary size k")
    p.add_argument("k", type=int)
    p.add_argument("--out")
    p.set_defaults(func=cmd_symbols)

    p = sub.add_parser("query", help="single source/target distance in the glued graph")
    glued(p)
    p.add_argument("--source", required=True)
    p.add_argument("--target", required=True)
    p.add_argument("--cache-dir", help="reuse or create precompiled components here")
    p.set_defaults(func=cmd_query)

    p = sub.add_parser("bench", help="time compositional queries against Dijkstra (CSV)")
    p.add_argument("--nodes", type=int, default=500)
    p.add_argument("--boundaries", type=_int_list, default=list(range(1, 11)),
                   help="comma list and ranges, e.g. 1-10 or 1,2,5")
    p.add_argument("--samples", type=int, default=50)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.func(args)
    except (PathComposeError, OSError, KeyError, ValueError) as exc:
        print(f"pathcompose {args.command}: error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
