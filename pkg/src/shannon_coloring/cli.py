"""Command-line entry point: generate, color, verify, bench.

Exit codes: 0 success, 1 verification failure, 2 I/O or configuration error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from collections import Counter

from .coloring import format_coloring, parse_coloring
from .deterministic import color_deterministic
from .errors import (
    ColoringError,
    GraphFormatError,
    InfeasibleParameters,
    InvariantError,
    PreconditionError,
)
from .local_sim import color_distributed
from .mssa import color_sequential_random, debug_enabled
from .multigraph import parse_graph, random_multigraph, serialize_graph, shannon_extremal
from .verify import verify
from .vizing import color_vizing

ALGORITHMS = ("det", "seq", "dist", "vizing")
EXIT_OK, EXIT_VERIFY, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _read(path):
    if path in (None, "-"):
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _write(path, text):
    if path in (None, "-"):
        sys.stdout.write(text)
        return
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)


def bound_for(graph, algorithm):
    return graph.vizing_bound if algorithm == "vizing" else graph.shannon_bound


def run_algorithm(graph, algorithm, ell=None, budget=None, seed=0, emit=None, debug=None):
    """Run one solver; returns ``(coloring, summary)``. ``emit`` receives stats dicts."""
    emit = emit or (lambda rec: None)
    summary = {"v": 1, "kind": "summary", "algorithm": algorithm, "n": graph.n, "m": graph.m,
               "delta": graph.delta, "mu": graph.mu}
    if algorithm == "det":
        run = color_deterministic(graph, on_batch=emit)
        summary["iterations"] = run.iterations
        return run.coloring, summary
    if algorithm == "seq":
        run = color_sequential_random(
            graph, ell=ell, seed=seed, debug=debug, on_record=lambda r: emit(r.as_dict())
        )
        summary.update(ell=run.ell, seed=seed, total_iterations=run.total_iterations,
                       max_iterations=max(run.iterations, default=0))
        return run.coloring, summary
    if algorithm == "dist":
        run = color_distributed(
            graph, ell=ell, t=budget, seed=seed, debug=debug, on_stage=lambda s: emit(s.stats())
        )
        summary.update(ell=run.ell, budget=run.budget, seed=seed, stages=run.stages,
                       rounds=run.rounds)
        return run.coloring, summary
    if algorithm == "vizing":
        return color_vizing(graph), summary
    raise UsageError(f"unknown algorithm {algorithm!r}")


def cmd_generate(args):
    if args.extremal is not None:
        graph = shannon_extremal(args.extremal)
        comment = f"fat triangle, degree {args.extremal}"
    else:
        if args.n is None or args.delta is None:
            raise UsageError("generate needs -n and -d, or --extremal")
        mu = args.mu if args.mu is not None else 1
        graph = random_multigraph(args.n, args.delta, mu, args.seed)
        comment = f"random multigraph n={args.n} delta<={args.delta} mu<={mu} seed={args.seed}"
    _write(args.out, serialize_graph(graph, comment))
    return EXIT_OK


def cmd_color(args):
    if args.algorithm not in ("seq", "dist"):
        if args.ell is not None or args.budget is not None:
            raise UsageError("--ell and --budget only apply to --algorithm seq or dist")
    if args.algorithm == "seq" and args.budget is not None:
        raise UsageError("the sequential solver has no iteration budget")
    if args.ell is not None and args.ell < 3:
        raise UsageError("--ell must be at least 3")
    if args.budget is not None and args.budget < 1:
        raise UsageError("--budget must be at least 1")
    graph = parse_graph(_read(args.input))
    records = []
    try:
        coloring, summary = run_algorithm(
            graph, args.algorithm, args.ell, args.budget, args.seed, records.append,
            debug_enabled(None),
        )
    except InvariantError as exc:
        print(f"internal invariant violated: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    bound = bound_for(graph, args.algorithm)
    report = verify(graph, coloring.color, bound)
    summary["verification"] = report.as_dict()
    records.append(summary)
    if args.stats:
        _write(args.stats, "".join(json.dumps(r, sort_keys=True) + "\n" for r in records))
    if not report.ok:
        print(f"verification failed: {json.dumps(report.as_dict())}", file=sys.stderr)
        return EXIT_VERIFY
    _write(args.out, format_coloring(graph, coloring.color))
    print(f"{args.algorithm}: {graph.m} edges, {report.colors_used} colors (bound {bound})",
          file=sys.stderr)
    return EXIT_OK


def _parse_bound(text, graph):
    if text in (None, "shannon"):
        return graph.shannon_bound
    if text == "vizing":
        return graph.vizing_bound
    try:
        return int(text)
    except ValueError:
        raise UsageError(f"--bound must be an integer, 'shannon' or 'vizing', got {text!r}") from None


def cmd_verify(args):
    graph = parse_graph(_read(args.input))
    colors = parse_coloring(_read(args.coloring), graph)
    bound = _parse_bound(args.bound, graph)
    report = verify(graph, colors, bound)
    print(json.dumps(report.as_dict(), sort_keys=True))
    return EXIT_OK if report.ok else EXIT_VERIFY


def _int_list(text):
    out = []
    for part in text.split(","):
        if "-" in part:
            lo, hi = part.split("-", 1)
            out.extend(range(int(lo), int(hi) + 1))
        elif part:
            out.append(int(part))
    return out


def parse_grid(text):
    """``"n=256,512 d=4 mu=2 seeds=0-4 alg=det,dist"`` to a grid dict."""
    grid = {"n": [256], "d": [4], "mu": [1], "seeds": [0], "alg": ["det"]}
    for token in text.split():
        if "=" not in token:
            raise UsageError(f"bad grid token {token!r}")
        key, value = token.split("=", 1)
        if key in ("n", "d", "mu", "seeds"):
            try:
                grid[key] = _int_list(value)
            except ValueError:
                raise UsageError(f"bad integer list in {token!r}") from None
        elif key == "alg":
            algs = value.split(",")
            unknown = [a for a in algs if a not in ALGORITHMS]
            if unknown:
                raise UsageError(f"unknown algorithm(s) {unknown}")
            grid["alg"] = algs
        else:
            raise UsageError(f"unknown grid key {key!r}")
    return grid


def bench(grid, ell=None, budget=None):
    """Yield one aggregate record per (algorithm, n, d, mu) cell."""
    for alg in grid["alg"]:
        for n in grid["n"]:
            for d in grid["d"]:
                for mu in grid["mu"]:
                    if mu > d:
                        continue
                    yield _bench_cell(alg, n, d, mu, grid["seeds"], ell, budget)


def _bench_cell(alg, n, d, mu, seeds, ell, budget):
    rows = []
    lengths = Counter()
    for seed in seeds:
        graph = random_multigraph(n, d, mu, seed)
        records = []
        start = time.perf_counter()
        coloring, summary = run_algorithm(graph, alg, ell, budget, seed, records.append)
        wall = time.perf_counter() - start
        report = verify(graph, coloring.color, bound_for(graph, alg))
        for r in records:
            if r.get("kind") == "mssa":
                lengths[r["chain_length"]] += 1
        rows.append((graph.m, summary, wall, report.ok))
    out = {"v": 1, "kind": "bench", "algorithm": alg, "n": n, "d": d, "mu": mu,
           "seeds": len(seeds), "all_verified": all(r[3] for r in rows),
           "mean_m": sum(r[0] for r in rows) / len(rows),
           "mean_wall_s": sum(r[2] for r in rows) / len(rows)}
    key = {"det": "iterations", "dist": "stages", "seq": "total_iterations"}.get(alg)
    if key:
        out["mean_" + key] = sum(r[1][key] for r in rows) / len(rows)
    if alg == "seq":
        out["mean_T_over_m"] = sum(r[1]["total_iterations"] / max(r[0], 1) for r in rows) / len(rows)
        out["chain_length_histogram"] = {str(k): v for k, v in sorted(lengths.items())}
    if alg == "dist":
        out["mean_rounds"] = sum(r[1]["rounds"] for r in rows) / len(rows)
    return out


def cmd_bench(args):
    grid = parse_grid(args.grid)
    lines = []
    for rec in bench(grid, args.ell, args.budget):
        line = json.dumps(rec, sort_keys=True)
        lines.append(line)
        if args.out in (None, "-"):
            print(line, flush=True)
    if args.out not in (None, "-"):
        _write(args.out, "\n".join(lines) + "\n")
    return EXIT_OK


def build_parser():
    p = argparse.ArgumentParser(prog="shannon-color", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("generate", help="write a random or extremal multigraph")
    g.add_argument("-n", type=int, help="vertex count")
    g.add_argument("-d", "--delta", type=int, help="maximum degree cap")
    g.add_argument("-m", "--mu", type=int, help="multiplicity cap (default 1)")
    g.add_argument("-s", "--seed", type=int, default=0)
    g.add_argument("--extremal", type=int, metavar="DELTA", help="fat triangle of even degree DELTA")
    g.add_argument("--out", help="output path (default stdout)")
    g.set_defaults(func=cmd_generate)

    c = sub.add_parser("color", help="color a graph file and self-verify the result")
    c.add_argument("--in", dest="input", required=True, help="graph file ('-' for stdin)")
    c.add_argument("--algorithm", choices=ALGORITHMS, default="det")
    c.add_argument("--ell", type=int, help="path cap for seq/dist (default max(16, 4*Delta^2))")
    c.add_argument("--budget", type=int, help="per-stage iteration budget for dist (default ceil(4 log2 n))")
    c.add_argument("--seed", type=int, default=0)
    c.add_argument("--out", help="coloring output path (default stdout)")
    c.add_argument("--stats", help="JSON-lines stats output path")
    c.set_defaults(func=cmd_color)

    v = sub.add_parser("verify", help="check a coloring file against a graph")
    v.add_argument("--in", dest="input", required=True, help="graph file")
    v.add_argument("--coloring", required=True, help="coloring file")
    v.add_argument("--bound", help="color bound: integer, 'shannon' (default) or 'vizing'")
    v.set_defaults(func=cmd_verify)

    b = sub.add_parser("bench", help="run a scaling grid and print aggregate JSON lines")
    b.add_argument("--grid", required=True, help='e.g. "n=256,512 d=4 mu=2 seeds=0-4 alg=det,dist"')
    b.add_argument("--ell", type=int)
    b.add_argument("--budget", type=int)
    b.add_argument("--out", help="output path (default stdout)")
    b.set_defaults(func=cmd_bench)
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, GraphFormatError, InfeasibleParameters, PreconditionError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ColoringError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VERIFY


if __name__ == "__main__":
    sys.exit(main())
