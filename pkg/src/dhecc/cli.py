"""Command-line interface: ``dhecc <command> [graph source] [options]``.

Graphs are read from an edge-list file (``-`` for stdin), a named graph
(``--named cycle(6)``) or the seeded generator (``--gen N --seed S``).
Reports are JSON on stdout; errors are JSON on stderr.  Exit codes: 0 ok,
1 audit violation, 2 usage / parse / input error.
"""
from __future__ import annotations

import argparse
import json
import statistics
import sys
import time

import numpy as np

from . import __version__
from .builders import DEFAULT_KIND_WEIGHTS, build_named, random_dh
from .errors import DHError, ParseError
from .graph import Graph, all_pairs_ecc_oracle, require_connected

SCHEMA = 1
EXIT_OK, EXIT_VIOLATION, EXIT_USAGE = 0, 1, 2


# -- edge-list format -----------------------------------------------------------

def parse_graph(text: str) -> Graph:
    """Parse ``p <n> <m>`` (optional header), ``# comments`` and ``u v`` lines.

    Without a header, n is one more than the largest vertex id.
    """
    n = m = None
    edges: list[tuple[int, int]] = []
    lines: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if n is not None or edges:
                raise ParseError("header must come first and only once", lineno)
            if len(parts) != 3:
                raise ParseError("header must be 'p <n> <m>'", lineno)
            n, m = _ints(parts[1:], lineno)
            if n < 0 or m < 0:
                raise ParseError("negative size in header", lineno)
            continue
        if len(parts) != 2:
            raise ParseError(f"expected 'u v', got {line!r}", lineno)
        u, v = _ints(parts, lineno)
        if u < 0 or v < 0:
            raise ParseError("negative vertex id", lineno)
        if n is not None and (u >= n or v >= n):
            raise ParseError(f"vertex id outside 0..{n - 1}", lineno)
        edges.append((u, v))
        lines.append(lineno)
    if m is not None and m != len(edges):
        raise ParseError(f"header announces {m} edges, found {len(edges)}")
    if n is None:
        n = 1 + max((max(e) for e in edges), default=-1)
    try:
        return Graph.from_edges(n, edges)
    except ParseError as exc:
        # locate the offending line for the message
        seen = set()
        for (u, v), lineno in zip(edges, lines):
            key = (min(u, v), max(u, v))
            if u == v or key in seen:
                raise type(exc)(str(exc), lineno) from None
            seen.add(key)
        raise


def _ints(parts, lineno):
    try:
        return [int(p) for p in parts]
    except ValueError:
        raise ParseError(f"not an integer in {' '.join(parts)!r}", lineno) from None


def format_graph(g: Graph, comment: str | None = None) -> str:
    head = [f"# {comment}"] if comment else []
    head.append(f"p {g.n} {g.m}")
    return "\n".join(head + [f"{u} {v}" for u, v in g.edges()]) + "\n"


# -- helpers ----------------------------------------------------------------

def _weights(text: str | None):
    if text is None:
        return DEFAULT_KIND_WEIGHTS
    try:
        w = tuple(float(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError("weights must be three comma-separated numbers") from None
    return w


def _load(args) -> tuple[Graph, dict]:
    sources = [args.input is not None, args.named is not None, args.gen is not None]
    if sum(sources) != 1:
        raise UsageError("give exactly one of: an input file, --named, --gen")
    if args.input is not None:
        if args.input == "-":
            text = sys.stdin.read()
        else:
            try:
                with open(args.input, encoding="utf-8") as fh:
                    text = fh.read()
            except OSError as exc:
                raise UsageError(f"cannot read {args.input}: {exc.strerror}") from None
        return parse_graph(text), {"kind": "file", "path": args.input, "seed": None}
    if args.named is not None:
        return build_named(args.named), {"kind": "named", "name": args.named, "seed": None}
    w = _weights(args.weights)
    g, _ = random_dh(args.gen, args.seed, w)
    return g, {"kind": "gen", "n": args.gen, "seed": args.seed, "weights": list(w)}


class UsageError(Exception):
    pass


def _emit(obj: dict, out=None) -> None:
    out = sys.stdout if out is None else out
    out.write(json.dumps(obj, sort_keys=True) + "\n")


def _report(command: str, source: dict, **body) -> dict:
    return {"schema": SCHEMA, "command": command, "input": source, **body}


# -- commands ----------------------------------------------------------------

def cmd_recognize(args) -> int:
    from .errors import NotDistanceHereditary
    from .pruning import build_pruning_sequence

    g, src = _load(args)
    require_connected(g)
    root = args.root if args.root is not None else 0
    try:
        seq = build_pruning_sequence(g, root)
    except NotDistanceHereditary as exc:
        _emit(_report("recognize", src, distance_hereditary=False, root=root, reason=str(exc)))
        return EXIT_OK
    _emit(_report(
        "recognize", src, distance_hereditary=True, root=root,
        marker_y=seq.marker_y, marker_z=seq.marker_z, sequence=seq.dump().splitlines(),
    ))
    return EXIT_OK


def cmd_ecc(args) -> int:
    from .ecc_exact import all_eccentricities

    g, src = _load(args)
    table = all_eccentricities(g, shadow=args.shadow, root=args.root)
    _emit(_report("ecc", src, **table.to_dict()))
    return EXIT_OK


def cmd_ecc_oracle(args) -> int:
    g, src = _load(args)
    require_connected(g)
    _emit(_report("ecc-oracle", src, **all_pairs_ecc_oracle(g).to_dict()))
    return EXIT_OK


def cmd_bounds(args) -> int:
    from .extremal import ecc_bounds_from_pair, mutually_distant_pair

    g, src = _load(args)
    start = args.start if args.start is not None else 0
    pair = mutually_distant_pair(g, start)
    _emit(_report("bounds", src, start=start, **ecc_bounds_from_pair(g, pair).to_dict()))
    return EXIT_OK


def _exact_table(g):
    from .ecc_exact import all_eccentricities

    return all_eccentricities(g)


def cmd_center(args) -> int:
    from .centers import INVALID, classify_center

    g, src = _load(args)
    rep = classify_center(g, _exact_table(g))
    _emit(_report("center", src, **rep.to_dict()))
    return EXIT_VIOLATION if rep.classification == INVALID else EXIT_OK


def cmd_certify(args) -> int:
    from .certificates import certify

    g, src = _load(args)
    reports = certify(g, _exact_table(g))
    _emit(_report("certify", src, certificates={k: r.to_dict() for k, r in sorted(reports.items())}))
    return EXIT_OK if all(r.passed for r in reports.values()) else EXIT_VIOLATION


def cmd_audit(args) -> int:
    from .corpus import audit_graph, corpus

    have_graph = args.input is not None or args.named is not None or args.gen is not None
    if have_graph:
        g, src = _load(args)
        require_connected(g)
        res = audit_graph(g, args.seed)
        _emit(_report("audit", src, holds=res.holds, result=res.to_dict()))
        return EXIT_OK if res.holds else EXIT_VIOLATION
    items, failed = [], 0
    for inst in corpus(args.count, args.seed, 1, args.n):
        res = audit_graph(inst.build(), inst.seed)
        failed += not res.holds
        items.append({**inst.to_dict(), **res.to_dict()})
    src = {"kind": "corpus", "count": args.count, "n_max": args.n, "seed": args.seed}
    _emit(_report("audit", src, holds=not failed, failed=failed, instances=items))
    return EXIT_OK if not failed else EXIT_VIOLATION


def cmd_gen(args) -> int:
    n = args.gen if args.gen is not None else args.n
    w = _weights(args.weights)
    g, _ = random_dh(n, args.seed, w)
    text = format_graph(g, f"random DH graph n={n} seed={args.seed} weights={','.join(map(str, w))}")
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _median_time(fn, runs: int) -> float:
    times = []
    for _ in range(runs):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return statistics.median(times)


def cmd_bench(args) -> int:
    from .ecc_exact import all_eccentricities

    rows = []
    for n in args.sizes:
        g, _ = random_dh(n, args.seed, _weights(args.weights))
        row = {"n": n, "m": g.m, "ecc_seconds": _median_time(lambda: all_eccentricities(g), args.runs)}
        if n <= args.oracle_max:
            row["oracle_seconds"] = _median_time(lambda: all_pairs_ecc_oracle(g), args.runs)
        rows.append(row)
    _emit(_report("bench", {"kind": "gen", "seed": args.seed}, runs=args.runs, rows=rows))
    return EXIT_OK


# -- argument parsing ------------------------------------------------------------

def _add_source(p, required_seed=False):
    p.add_argument("input", nargs="?", help="edge-list file, '-' for stdin")
    p.add_argument("--named", help="named graph, e.g. house, cycle(6), fig5_family(3)")
    p.add_argument("--gen", type=int, metavar="N", help="random DH graph with N vertices")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--weights", help="pendant,true-twin,false-twin probabilities")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="dhecc", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("recognize", help="DH recognition and pruning sequence")
    _add_source(p)
    p.add_argument("--root", type=int)
    p.set_defaults(func=cmd_recognize)

    p = sub.add_parser("ecc", help="all eccentricities via the pruning sequence")
    _add_source(p)
    p.add_argument("--root", type=int, help="use this root instead of a central vertex")
    p.add_argument("--shadow", action="store_true", help="re-check every step by BFS")
    p.set_defaults(func=cmd_ecc)

    p = sub.add_parser("ecc-oracle", help="all eccentricities by BFS from every vertex")
    _add_source(p)
    p.set_defaults(func=cmd_ecc_oracle)

    p = sub.add_parser("bounds", help="eccentricity intervals from a mutually distant pair")
    _add_source(p)
    p.add_argument("--start", type=int)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("center", help="center, C^1 and center classification")
    _add_source(p)
    p.set_defaults(func=cmd_center)

    p = sub.add_parser("certify", help="radius / diameter / tight-upper certificates")
    _add_source(p)
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("audit", help="invariant sweep on one graph or a seeded corpus")
    _add_source(p)
    p.add_argument("--n", type=int, default=200, help="corpus: maximum n")
    p.add_argument("--count", type=int, default=100, help="corpus: number of graphs")
    p.set_defaults(func=cmd_audit)

    p = sub.add_parser("gen", help="emit a random DH graph as an edge list")
    p.add_argument("--n", type=int, default=20)
    p.add_argument("--gen", type=int, help=argparse.SUPPRESS)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--weights")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("bench", help="median timings of ecc and ecc-oracle")
    p.add_argument("--sizes", type=int, nargs="+", default=[1000, 10000])
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--weights")
    p.add_argument("--runs", type=int, default=5)
    p.add_argument("--oracle-max", type=int, default=10000)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (DHError, UsageError, argparse.ArgumentTypeError) as exc:
        err = {"schema": SCHEMA, "error": type(exc).__name__, "message": str(exc)}
        line = getattr(exc, "line", None)
        if line is not None:
            err["line"] = line
        _emit(err, sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
