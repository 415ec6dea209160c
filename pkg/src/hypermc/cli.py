"""``hypermc`` command line: gen, mc, verify, scan, degrees.

Exit codes: 0 success, 1 verification failure, 2 usage or parameter error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import campaign
from .constructions import CONSTRUCTIONS, ConstructionError
from .formats import (
    FormatError,
    dumps_hypergraph,
    read_coloring,
    read_hypergraph,
    write_coloring,
    write_hypergraph,
)
from .hypercore import HypergraphError, complete_hypergraph, min_degree, shadow
from .solver import (
    DEFAULT_NODE_BUDGET,
    InstanceTooLarge,
    mc_bounds,
    brute_witness,
    mc_exact,
    mc_heuristic,
)
from .witness import PreconditionError, meets_codegree_threshold

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
# In bounds mode exact search only tightens the bracket, so it gets a small budget.
BOUNDS_NODE_BUDGET = 10 ** 6


class UsageError(Exception):
    pass


def _emit(payload: dict, out: str | None) -> None:
    text = json.dumps(payload, indent=2, sort_keys=True, default=_jsonable)
    if out:
        Path(out).write_text(text + "\n")
    else:
        print(text)


def _jsonable(obj):
    if isinstance(obj, (set, frozenset)):
        return sorted(obj)
    if obj == float("inf"):
        return None
    raise TypeError(f"not JSON serializable: {type(obj).__name__}")


def _shift(vs, one):
    return [v + one for v in vs]


def cmd_gen(args) -> int:
    prefix = Path(args.out)
    prefix.parent.mkdir(parents=True, exist_ok=True)
    if args.name == "complete":
        if args.n is None or args.k is None:
            raise UsageError("complete needs --n and --k")
        G = complete_hypergraph(args.n, args.k)
        write_hypergraph(G, f"{prefix}.hg")
        _emit({"construction": "complete", "n": G.n, "k": G.k, "edges": G.m, "ok": True,
               "hypergraph_file": f"{prefix}.hg"}, f"{prefix}.json")
        print(f"wrote {prefix}.hg ({G.m} edges)")
        return EXIT_OK
    if args.name == "affine-plane":
        if args.q is None:
            raise UsageError("affine-plane needs --q (and optionally --m)")
        out = CONSTRUCTIONS[args.name](args.q, args.m)
    else:
        if args.n is None or args.r is None:
            raise UsageError(f"{args.name} needs --n and --r")
        out = CONSTRUCTIONS[args.name](args.n, args.r)
    write_hypergraph(out.hypergraph, f"{prefix}.hg")
    write_coloring(out.coloring, f"{prefix}.col")
    stats = out.stats_record()
    stats["hypergraph_file"] = f"{prefix}.hg"
    stats["coloring_file"] = f"{prefix}.col"
    if args.one_indexed:
        stats["scheme"] = {lab: _shift(sorted(p), 1)
                           for lab, p in zip(out.scheme.labels, out.scheme.parts)}
    else:
        stats["scheme"] = {lab: sorted(p)
                           for lab, p in zip(out.scheme.labels, out.scheme.parts)}
    _emit(stats, f"{prefix}.json")
    summary = {c.name: c.computed for c in out.checks}
    print(json.dumps({"ok": out.ok, "checks": summary}, default=_jsonable))
    return EXIT_OK if out.ok else EXIT_FAIL


def cmd_mc(args) -> int:
    G = read_hypergraph(args.file)
    witness_path = args.witness_out or f"{os.path.splitext(args.file)[0]}.{args.mode}.col"
    if args.mode in ("heuristic", "bounds") and args.seed is None:
        raise UsageError(f"--seed is required for mode {args.mode}")
    seed = args.seed if args.seed is not None else 0
    report = {"mode": args.mode, "file": args.file, "r": args.r, "seed": seed}
    if args.mode == "brute":
        report["value"], witness = brute_witness(G, args.r)
        report["complete"] = True
    elif args.mode == "exact":
        incumbent = read_coloring(args.incumbent, G) if args.incumbent else None
        max_nodes = args.max_nodes if args.max_nodes is not None else DEFAULT_NODE_BUDGET
        res = mc_exact(G, args.r, max_nodes=max_nodes, time_limit=args.time_limit,
                       incumbent=incumbent, split_depth=args.split_depth,
                       workers=args.workers, seed=seed)
        report.update(res.to_json())
        witness = res.witness
    elif args.mode == "heuristic":
        res = mc_heuristic(G, args.r, iterations=args.iterations, restarts=args.restarts,
                           seed=seed)
        report.update(res.to_json())
        report["budget"] = {"iterations": args.iterations, "restarts": args.restarts}
        witness = res.witness
    else:
        witnesses = [read_coloring(args.incumbent, G)] if args.incumbent else []
        max_nodes = args.max_nodes if args.max_nodes is not None else BOUNDS_NODE_BUDGET
        res = mc_bounds(G, args.r, witnesses=witnesses, exact_nodes=max_nodes,
                        heuristic_iterations=args.iterations,
                        heuristic_restarts=args.restarts, seed=seed)
        report.update(res.to_json())
        report["value"] = res.upper
        report["budget"] = {"max_nodes": max_nodes, "iterations": args.iterations,
                            "restarts": args.restarts}
        witness = res.witness
    if witness is not None:
        write_coloring(witness, witness_path)
        report["witness_file"] = witness_path
    _emit(report, args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    colorings = []
    if args.file:
        G = read_hypergraph(args.file)
        delta, _ = min_degree(G, G.k - 1)
        if G.k < 3 or not meets_codegree_threshold(G.n, G.k, delta):
            raise PreconditionError(
                f"{args.file}: minimum codegree {delta} is below r n/(r+1) - (r-1) "
                f"for n={G.n}, r={G.k}")
        if args.coloring:
            colorings.append(read_coloring(args.coloring, G))
        report = campaign.verify_theorem([G.n], G.k, args.trials, args.seed, args.x,
                                         G=G, colorings=colorings)
    else:
        if args.n is None or args.r is None:
            raise UsageError("verify needs --n and --r, or --file")
        ns = campaign.parse_range(args.n)
        for n in ns:
            if n < args.r + 1 or args.r < 3:
                raise PreconditionError(f"K_{n}^{args.r} is outside n >= r+1, r >= 3")
        report = campaign.verify_theorem(ns, args.r, args.trials, args.seed, args.x)
    _emit(report, args.out)
    if report["failures"] or report["claim_failures"]:
        print(f"verification FAILED: {report['failures']} bad certificates, "
              f"{report['claim_failures']} claim failures", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


def cmd_scan(args) -> int:
    try:
        spec = json.loads(Path(args.spec).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read scan spec {args.spec}: {exc}") from None
    try:
        rows = campaign.run_scan(spec)
    except (ValueError, KeyError, TypeError) as exc:
        raise UsageError(f"bad scan spec: {exc}") from None
    text = campaign.rows_to_csv(rows, timing=not args.no_timing)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_degrees(args) -> int:
    G = read_hypergraph(args.file)
    ells = campaign.parse_range(args.l) if args.l is not None else list(range(G.k + 1))
    one = 1 if args.one_indexed else 0
    report = {"n": G.n, "k": G.k, "edges": G.m, "min_degree": {}}
    for ell in ells:
        value, wit = min_degree(G, ell)
        report["min_degree"][str(ell)] = {"value": value, "witness": _shift(sorted(wit), one)}
    if args.shadow is not None:
        sh = shadow(G, args.shadow)
        report["shadow"] = {"r": args.shadow, "edges": sh.m, "complete": sh.is_complete()}
        if args.shadow_out:
            Path(args.shadow_out).write_text(dumps_hypergraph(sh))
            report["shadow"]["file"] = args.shadow_out
    _emit(report, args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hypermc", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="write a construction as hypergraph/coloring/stats files")
    g.add_argument("name", choices=["gyarfas-partition", "extremal-example", "affine-plane",
                                    "complete"])
    g.add_argument("--n", type=int)
    g.add_argument("--r", type=int)
    g.add_argument("--k", type=int)
    g.add_argument("--q", type=int)
    g.add_argument("--m", type=int, default=1)
    g.add_argument("--out", default="construction", help="output path prefix")
    g.add_argument("--one-indexed", action="store_true")
    g.set_defaults(func=cmd_gen)

    m = sub.add_parser("mc", help="compute or bound mc_r of a hypergraph file")
    m.add_argument("--file", required=True)
    m.add_argument("--r", type=int, required=True, help="number of colors")
    m.add_argument("--mode", choices=["brute", "exact", "heuristic", "bounds"], default="exact")
    m.add_argument("--max-nodes", type=int,
                   help=f"node budget (exact: {DEFAULT_NODE_BUDGET}, bounds: {BOUNDS_NODE_BUDGET})")
    m.add_argument("--time-limit", type=float)
    m.add_argument("--seed", type=int)
    m.add_argument("--iterations", type=int, default=10 ** 5)
    m.add_argument("--restarts", type=int, default=20)
    m.add_argument("--workers", type=int, default=1)
    m.add_argument("--split-depth", type=int, default=0)
    m.add_argument("--incumbent", help="coloring file used as starting incumbent")
    m.add_argument("--witness-out")
    m.add_argument("--out", help="JSON report path (default stdout)")
    m.set_defaults(func=cmd_mc)

    v = sub.add_parser("verify", help="certify large components on random colorings")
    v.add_argument("--n", help="range such as 8..12")
    v.add_argument("--r", type=int)
    v.add_argument("--file", help="hypergraph file instead of complete hypergraphs")
    v.add_argument("--coloring", help="extra coloring file to certify (with --file)")
    v.add_argument("--trials", type=int, default=100)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--x", default="0", help="base vertex: an index, 'random' or 'all'")
    v.add_argument("--out")
    v.set_defaults(func=cmd_verify)

    s = sub.add_parser("scan", help="parameter sweep to CSV")
    s.add_argument("--spec", required=True, help="JSON grid specification")
    s.add_argument("--out", help="CSV path (default stdout)")
    s.add_argument("--no-timing", action="store_true", help="write runtime_ms as 0")
    s.set_defaults(func=cmd_scan)

    d = sub.add_parser("degrees", help="minimum l-degrees and shadows")
    d.add_argument("--file", required=True)
    d.add_argument("--l", help="degree orders, e.g. 0..2 (default all)")
    d.add_argument("--shadow", type=int)
    d.add_argument("--shadow-out")
    d.add_argument("--one-indexed", action="store_true")
    d.add_argument("--out")
    d.set_defaults(func=cmd_degrees)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ConstructionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (UsageError, PreconditionError, FormatError, InstanceTooLarge,
            HypergraphError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
