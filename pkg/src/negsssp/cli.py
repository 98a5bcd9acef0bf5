"""``negsssp`` command line: solve, verify, bench, gen.

Exit codes: 0 success, 1 verification mismatch, 2 usage or input error,
3 internal error.
"""
from __future__ import annotations

import argparse
import csv
import json
import os
import sys
import time

from . import generators
from .driver import SolverConfig, SolverError, solve
from .graph import GraphError, cycle_weight, freeze, is_closed_walk
from .hops import bellman_ford, solve_naive
from .io import emit_result, format_weight, parse_graph, write_graph

ALGOS = ("shortcut", "bellman-ford", "hybrid")
EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _seed(args) -> int:
    if args.seed is not None:
        return args.seed
    env = os.environ.get("NEGSSSP_SEED")
    if env is None:
        return 0
    try:
        return int(env)
    except ValueError:
        raise UsageError(f"NEGSSSP_SEED must be an integer, got {env!r}") from None


def _config(args) -> SolverConfig:
    kw = {"rng_seed": _seed(args), "mode": args.mode}
    if args.c is not None:
        kw["C"] = args.c
    if args.base_threshold is not None:
        kw["base_threshold"] = args.base_threshold
    if args.sample_multiplier is not None:
        kw["sample_multiplier"] = args.sample_multiplier
    try:
        return SolverConfig.desk(**kw) if args.desk else SolverConfig(**kw)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _source(text: str, n: int):
    if text in ("super", "all"):
        return None
    try:
        s = int(text)
    except ValueError:
        raise UsageError(f"bad source {text!r}") from None
    if not 0 <= s < n:
        raise UsageError(f"source {s} outside [0, {n})")
    return s


def _load(path: str, mode: str):
    if path == "-":
        return parse_graph(sys.stdin, mode)
    with open(path) as fh:
        return parse_graph(fh, mode)


def run_algo(algo: str, g, source, cfg: SolverConfig):
    """``(outcome, trace or None)`` for one algorithm."""
    if algo == "shortcut":
        return solve(g, source, cfg)
    if algo == "bellman-ford":
        return bellman_ford(g, source), None
    if algo == "hybrid":
        return solve_naive(freeze(g), source), None
    raise UsageError(f"unknown algorithm {algo!r}")


def cmd_solve(args) -> int:
    g = _load(args.graph, args.mode)
    source = _source(args.source, g.n)
    out, trace = run_algo(args.algo, g, source, _config(args))
    emit_result(g, out, trace, "json" if args.json else "text", sys.stdout, args.timings)
    return EXIT_OK


def _valid_cycle(g, out) -> bool:
    ce = out.cycle_edges
    return bool(ce) and is_closed_walk(g, ce) and cycle_weight(g, ce) < 0


def _close(a, b, mode) -> bool:
    if a == b:
        return True
    if mode != "float" or a == float("inf") or b == float("inf"):
        return False
    return abs(a - b) <= 1e-6 * max(1.0, abs(a), abs(b))


def compare(g, ours, ref, mode) -> str | None:
    """``None`` when ``ours`` agrees with the reference, else a short reason."""
    if ours.has_cycle:
        return None if _valid_cycle(g, ours) else "reported cycle is not a negative closed walk"
    if ref.has_cycle:
        return "reference found a negative cycle, solver returned distances"
    for v, (a, b) in enumerate(zip(ours.dist, ref.dist)):
        if not _close(a, b, mode):
            return f"vertex {v}: {format_weight(a)} != {format_weight(b)}"
    return None


def cmd_verify(args) -> int:
    g = _load(args.graph, args.mode)
    source = _source(args.source, g.n)
    ours, _ = solve(g, source, _config(args))
    ref = bellman_ford(g, source)
    why = compare(g, ours, ref, args.mode)
    if why is None:
        print("OK")
        return EXIT_OK
    print(f"MISMATCH {why}")
    return EXIT_MISMATCH


def _int_list(text: str) -> list[int]:
    out: list[int] = []
    for part in text.split("/"):
        if "-" in part[1:]:
            a, b = part.split("-", 1)
            out.extend(range(int(a), int(b) + 1))
        else:
            out.append(int(part))
    return out


def parse_kv(text: str) -> dict:
    """``"n=20,m=80,negfrac=0.1"`` -> dict of strings; ``/`` separates list values."""
    out = {}
    if not text:
        return out
    for item in text.split(","):
        if "=" not in item:
            raise UsageError(f"expected key=value, got {item!r}")
        k, v = item.split("=", 1)
        out[k.strip()] = v.strip()
    return out


def bench_plan(spec: dict) -> list[dict]:
    try:
        ns = _int_list(spec.get("n", "30"))
        ms = _int_list(spec.get("m", "120"))
        fracs = [float(x) for x in spec.get("negfrac", "0.1").split("/")]
        seeds = _int_list(spec.get("seeds", "1-3"))
        wmax = int(spec.get("wmax", "20"))
    except ValueError as exc:
        raise UsageError(f"bad --gen value: {exc}") from None
    unknown = set(spec) - {"n", "m", "negfrac", "seeds", "wmax"}
    if unknown:
        raise UsageError(f"unknown --gen keys {sorted(unknown)}")
    plan = []
    for n in ns:
        for m in ms:
            for f in fracs:
                for s in seeds:
                    plan.append({"n": n, "m": min(m, n * (n - 1)), "negfrac": f, "seed": s, "wmax": wmax})
    return plan


BENCH_FIELDS = ["n", "m", "negfrac", "seed", "k", "algo", "seconds", "status",
                "iterations", "max_depth", "n_final", "m_final", "agrees"]


def cmd_bench(args) -> int:
    algos = args.algos.split(",")
    for a in algos:
        if a not in ALGOS:
            raise UsageError(f"unknown algorithm {a!r}")
    rows, traces = [], []
    base = _config(args)
    for p in bench_plan(parse_kv(args.gen)):
        g = generators.gen_potential_shifted(p["n"], p["m"], p["negfrac"], (0, p["wmax"]),
                                             p["seed"], args.mode)
        k = len({e.src for e in g.edges if e.weight < 0})
        ref = None
        for algo in algos:
            cfg = SolverConfig(**{**base.__dict__, "rng_seed": p["seed"]})
            t0 = time.perf_counter()
            out, trace = run_algo(algo, g, 0, cfg)
            dt = time.perf_counter() - t0
            if ref is None:
                ref = bellman_ford(g, 0)
            row = {**p, "k": k, "algo": algo, "seconds": round(dt, 6),
                   "status": "cycle" if out.has_cycle else "ok",
                   "iterations": "", "max_depth": "", "n_final": "", "m_final": "",
                   "agrees": compare(g, out, ref, args.mode) is None}
            row.pop("wmax")
            if trace is not None:
                row.update(iterations=len(trace.top_iterations()), max_depth=trace.max_depth,
                           n_final=trace.final.get("n_final"), m_final=trace.final.get("m_final"))
                traces.append({"params": p, "trace": trace.as_dict(timings=args.timings)})
            rows.append(row)
    if args.json:
        json.dump({"schema": 1, "rows": rows, "traces": traces}, sys.stdout, sort_keys=True, indent=1)
        sys.stdout.write("\n")
    else:
        w = csv.DictWriter(sys.stdout, BENCH_FIELDS, delimiter="\t", lineterminator="\n")
        w.writeheader()
        w.writerows(rows)
    if args.plot:
        from .plots import bench_figures

        for path in bench_figures(rows, traces, args.plot):
            print(f"# figure {path}", file=sys.stderr)
    return EXIT_OK if all(r["agrees"] for r in rows) else EXIT_MISMATCH


def cmd_gen(args) -> int:
    spec = parse_kv(",".join(args.params))
    try:
        if args.kind == "shifted":
            g = generators.gen_potential_shifted(
                int(spec.get("n", 20)), int(spec.get("m", 60)), float(spec.get("negfrac", 0.1)),
                (int(spec.get("wmin", 0)), int(spec.get("wmax", 20))), int(spec.get("seed", _seed(args))),
                args.mode)
            note = "potential-shifted, no negative cycle"
        elif args.kind == "cycle":
            g, ids = generators.gen_planted_cycle(
                int(spec.get("n", 20)), int(spec.get("m", 60)), int(spec.get("len", 3)),
                int(spec.get("weight", -1)), int(spec.get("seed", _seed(args))),
                mode=args.mode)
            note = f"planted negative cycle on edges {' '.join(map(str, ids))}"
        else:
            g, exp = generators.gen_lemma6_gadget(int(spec.get("case", 1)))
            note = f"shortcut gadget case {exp['case']}"
    except (ValueError, GraphError) as exc:
        raise UsageError(str(exc)) from None
    if args.out and args.out != "-":
        with open(args.out, "w") as fh:
            write_graph(g, fh, note)
    else:
        write_graph(g, sys.stdout, note)
    return EXIT_OK


def _solver_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--mode", choices=("rational", "float"), default="rational")
    p.add_argument("--seed", type=int, default=None, help="rng seed (fallback: NEGSSSP_SEED, then 0)")
    p.add_argument("--c", type=float, default=None, help="constant C in the base-case threshold")
    p.add_argument("--base-threshold", type=float, default=None,
                   help="override the base-case threshold on the negative-vertex count")
    p.add_argument("--sample-multiplier", type=int, default=None)
    p.add_argument("--desk", action="store_true",
                   help="small-instance preset that exercises the shortcut loop")
    p.add_argument("--timings", action="store_true", help="include phase wall times in JSON traces")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="negsssp", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("solve", help="shortest paths from a source")
    p.add_argument("--graph", required=True)
    p.add_argument("--source", default="0", help="vertex id, or 'super' for all vertices at 0")
    p.add_argument("--algo", choices=ALGOS, default="shortcut")
    p.add_argument("--json", action="store_true")
    _solver_flags(p)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", help="compare the solver with Bellman-Ford")
    p.add_argument("--graph", required=True)
    p.add_argument("--source", default="0")
    _solver_flags(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="time algorithms on generated graphs")
    p.add_argument("--gen", default="", help="n=..,m=..,negfrac=..,seeds=a-b,wmax=..; '/' lists values")
    p.add_argument("--algos", default="shortcut,bellman-ford,hybrid")
    p.add_argument("--json", action="store_true")
    p.add_argument("--plot", metavar="DIR", default=None, help="write PNG figures into DIR")
    _solver_flags(p)
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("gen", help="write a generated graph")
    p.add_argument("--kind", choices=("shifted", "cycle", "gadget"), required=True)
    p.add_argument("--out", default=None)
    p.add_argument("params", nargs="*", help="key=value pairs, e.g. n=30 m=100 seed=4 case=2")
    _solver_flags(p)
    p.set_defaults(func=cmd_gen)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except (UsageError, GraphError, OSError) as exc:
        print(f"negsssp: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SolverError as exc:
        print(f"negsssp: internal error: {exc}", file=sys.stderr)
        if exc.trace is not None:
            print(json.dumps(exc.trace.as_dict(), sort_keys=True), file=sys.stderr)
        return EXIT_INTERNAL
    except Exception as exc:  # noqa: BLE001
        print(f"negsssp: internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
