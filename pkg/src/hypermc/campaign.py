"""Seeded experiment drivers behind the ``verify`` and ``scan`` commands."""

from __future__ import annotations

import csv
import io
import random
import time
from collections import Counter
from dataclasses import asdict, dataclass

from .constructions import extremal_codegree_example
from .hypercore import EdgeColoring, Hypergraph, complete_hypergraph, degree_table, min_degree
from .solver import mc_bounds
from .witness import (
    ENDGAME,
    ClaimViolation,
    certified_bound,
    check_claims,
    deficiency_profile,
    find_large_component,
    meets_codegree_threshold,
    revalidate,
)

SCAN_COLUMNS = ("n", "r", "k", "l", "delta", "mc_lower", "mc_upper", "method", "seed",
                "runtime_ms")


def parse_range(text) -> list[int]:
    """``"8..12"`` -> ``[8, ..., 12]``; also accepts ``"8,10"``, ints and lists."""
    if isinstance(text, int):
        return [text]
    if isinstance(text, (list, tuple)):
        out = []
        for item in text:
            out.extend(parse_range(item))
        return out
    out = []
    for part in str(text).split(","):
        part = part.strip()
        if not part:
            continue
        if ".." in part:
            lo, hi = part.split("..")
            out.extend(range(int(lo), int(hi) + 1))
        else:
            out.append(int(part))
    return out


def _rng(*key) -> random.Random:
    return random.Random("-".join(map(str, key)))


def random_coloring(G: Hypergraph, colors: int, rng: random.Random) -> EdgeColoring:
    return EdgeColoring(colors, tuple(rng.randrange(colors) for _ in range(G.m)))


def _base_vertices(policy, n: int, rng: random.Random) -> list[int]:
    if policy == "all":
        return list(range(n))
    if policy == "random":
        return [rng.randrange(n)]
    return [int(policy)]


def verify_coloring(G: Hypergraph, chi: EdgeColoring, xs, stats: dict) -> list[dict]:
    """Certify every base vertex in ``xs``; returns failure records."""
    failures = []
    bound = certified_bound(G.n, G.k)
    wide = chi if chi.r == G.k + 1 else EdgeColoring(G.k + 1, chi.colors)
    for x in xs:
        try:
            cert = find_large_component(G, chi, x, check_degree=False)
        except ClaimViolation as exc:
            stats["claim_failures"] += 1
            failures.append({"x": x, "error": str(exc), "colors": list(chi.colors)})
            continue
        stats["certificates"] += 1
        stats["branches"][cert.branch] += 1
        profile = deficiency_profile(G, wide, x)
        if profile.all_large():
            stats["claim_instances"] += len(check_claims(profile, G.n, G.k).instances)
        if not revalidate(G, chi, cert) or cert.size < bound:
            failures.append({"x": x, "certificate": cert.to_json(), "colors": list(chi.colors)})
        stats["min_size"] = min(stats["min_size"], cert.size)
    return failures


def _new_stats() -> dict:
    return {"certificates": 0, "claim_failures": 0, "claim_instances": 0,
            "branches": Counter(), "min_size": float("inf")}


def verify_theorem(ns, r: int, trials: int, seed: int, x_policy="0",
                   G: Hypergraph | None = None, colorings=()) -> dict:
    """Random-coloring campaign for the codegree theorem.

    Without ``G`` each ``n`` in ``ns`` uses ``K_n^r``.  A given ``G`` must meet
    the codegree threshold (callers check first).  Extra ``colorings`` are
    certified alongside the random ones.
    """
    per_n = []
    failures = []
    total = _new_stats()
    graphs = [G] if G is not None else [complete_hypergraph(n, r) for n in ns]
    for H in graphs:
        stats = _new_stats()
        for t in range(trials):
            rng = _rng(seed, H.n, t)
            chi = random_coloring(H, H.k + 1, rng)
            failures += verify_coloring(H, chi, _base_vertices(x_policy, H.n, rng), stats)
        for chi in colorings:
            failures += verify_coloring(H, chi, _base_vertices(x_policy, H.n, _rng(seed)), stats)
        per_n.append({"n": H.n, "r": H.k, "bound": certified_bound(H.n, H.k),
                      "certificates": stats["certificates"],
                      "min_certificate": stats["min_size"],
                      "branches": dict(stats["branches"])})
        for key in ("certificates", "claim_failures", "claim_instances"):
            total[key] += stats[key]
        total["branches"].update(stats["branches"])
    return {
        "r": r, "trials": trials, "seed": seed, "x_policy": str(x_policy),
        "certificates": total["certificates"], "claim_failures": total["claim_failures"],
        "claim_instances_checked": total["claim_instances"],
        "failures": len(failures), "failure_details": failures[:5],
        "branches": dict(total["branches"]), "per_n": per_n,
    }


def endgame_can_fire(n: int, r: int) -> bool:
    """ENDGAME needs ``r`` disjoint deficiency sets, each of order above
    ``n/(r+1)``, that avoid the base vertex."""
    return r * (n // (r + 1) + 1) <= n - 1


def endgame_block_coloring(G: Hypergraph, x: int = 0) -> EdgeColoring:
    """Hand-built (r+1)-coloring that forces ENDGAME at ``x``.

    Blocks ``B_0..B_{r-1}`` of order ``n//(r+1) + 1`` avoid ``x``.  An edge
    through ``x`` has ``r-1`` other vertices, so it misses some block and
    takes the color of the first one it misses; every other edge takes color
    ``r``.  No color-``a`` edge meets ``B_a``, so each ``F_a`` contains it,
    and ``F_r`` is everything but ``x``.
    """
    n, r = G.n, G.k
    if not endgame_can_fire(n, r):
        raise ValueError(f"ENDGAME cannot fire for n={n}, r={r}")
    size = n // (r + 1) + 1
    others = [v for v in range(n) if v != x]
    block_of = {v: a for a in range(r) for v in others[a * size:(a + 1) * size]}
    colors = []
    for e in G.edges:
        if x in e:
            hit = {block_of.get(v) for v in e}
            colors.append(min(a for a in range(r) if a not in hit))
        else:
            colors.append(r)
    return EdgeColoring(r + 1, tuple(colors))


def targeted_endgame_coloring(G: Hypergraph, x: int = 0, seed: int = 0,
                              iterations: int = 20000, restarts: int = 10):
    """Hill-climb towards a coloring whose components through ``x`` are all
    small, starting from the partition construction when ``G`` is complete.
    Returns ``(coloring, certificate)``; the certificate is ``None`` if no
    ENDGAME instance was reached."""
    from .constructions import gyarfas_partition_coloring
    from .solver import mc_heuristic

    r = G.k
    # (r+1)|F_i| > n for every i, i.e. every component through x has order
    # at most n - floor(n/(r+1)) - 1.
    cap = G.n - G.n // (r + 1) - 1
    initial = gyarfas_partition_coloring(G.n, r).coloring if G.is_complete() else None
    for attempt in range(restarts):
        h = mc_heuristic(G, r + 1, iterations=iterations, restarts=1, seed=seed + attempt,
                         focus=x, target=cap, initial=initial if attempt == 0 else None)
        cert = find_large_component(G, h.witness, x, check_degree=False)
        if cert.branch == ENDGAME:
            return h.witness, cert
    return None, None


def sample_min_degree(n: int, k: int, ell: int, target: int, rng: random.Random,
                      edge_budget: int | None = None) -> Hypergraph:
    """Delete uniformly random edges of ``K_n^k`` while every ``ell``-set keeps
    degree ``>= target``; stop at ``edge_budget`` edges or when stuck."""
    G = complete_hypergraph(n, k)
    deg = degree_table(G, ell)
    if min(deg.values()) < target:
        raise ValueError(f"K_{n}^{k} itself has minimum {ell}-degree below {target}")
    from itertools import combinations

    order = list(G.edges)
    rng.shuffle(order)
    alive = set(G.edges)
    # A blocked edge stays blocked because degrees only fall, so one pass over
    # a random order reaches the fixpoint.
    for e in order:
        if edge_budget is not None and len(alive) <= edge_budget:
            break
        subs = list(combinations(e, ell))
        if all(deg[S] > target for S in subs):
            alive.discard(e)
            for S in subs:
                deg[S] -= 1
    return Hypergraph(n, k, tuple(sorted(alive)))


@dataclass
class ScanRow:
    n: int
    r: int
    k: int
    l: int
    delta: int
    mc_lower: int
    mc_upper: int
    method: str
    seed: int
    runtime_ms: int


def _method(report) -> str:
    if report.lower_source == "exact":
        return "exact"
    if report.upper_source in ("construction", "witness"):
        return "theorem+construction"
    return "heuristic"


def _instances(spec: dict):
    family = spec.get("family", "complete")
    ks = spec.get("k")
    for r in parse_range(spec.get("r", [])):
        k = int(ks) if ks is not None else r
        colors = int(spec.get("colors", k + 1))
        ells = parse_range(spec.get("l", k - 1))
        for n in parse_range(spec.get("n", [])):
            for ell in ells:
                if family == "complete":
                    yield n, k, colors, ell, 0, None, lambda n=n, k=k: (complete_hypergraph(n, k), ())
                elif family == "extremal-example":
                    def build(n=n, r=r):
                        out = extremal_codegree_example(n, r)
                        return out.hypergraph, (out.coloring,)
                    yield n, r, colors, ell, 0, None, build
                elif family == "random-min-degree":
                    for target in parse_range(spec.get("targets", [])):
                        for seed in parse_range(spec.get("seeds", spec.get("seed", 0))):
                            def build(n=n, k=k, ell=ell, target=target, seed=seed):
                                rng = _rng(seed, n, k, ell, target)
                                G = sample_min_degree(n, k, ell, target, rng,
                                                      spec.get("edge_budget"))
                                return G, ()
                            yield n, k, colors, ell, seed, target, build
                else:
                    raise ValueError(f"unknown family {family!r}")


def run_scan(spec: dict) -> list[ScanRow]:
    """One row per grid instance, in grid order."""
    rows = []
    opts = {
        "exact_nodes": int(spec.get("exact_nodes", 10 ** 5)),
        "heuristic_iterations": int(spec.get("iterations", 2000)),
        "heuristic_restarts": int(spec.get("restarts", 5)),
    }
    for n, k, colors, ell, seed, _target, build in _instances(spec):
        start = time.perf_counter()
        G, witnesses = build()
        delta, _ = min_degree(G, ell)
        report = mc_bounds(G, colors, witnesses=witnesses, seed=seed, **opts)
        runtime = int(round((time.perf_counter() - start) * 1000))
        rows.append(ScanRow(n, colors, k, ell, delta, report.lower, report.upper,
                            _method(report), seed, runtime))
    return rows


def rows_to_csv(rows, timing: bool = True) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=SCAN_COLUMNS, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        d = asdict(row)
        if not timing:
            d["runtime_ms"] = 0
        writer.writerow(d)
    return buf.getvalue()


__all__ = [
    "SCAN_COLUMNS", "ScanRow", "endgame_can_fire", "meets_codegree_threshold",
    "parse_range", "random_coloring", "rows_to_csv", "run_scan", "sample_min_degree",
    "endgame_block_coloring", "targeted_endgame_coloring", "verify_coloring",
    "verify_theorem",
]
