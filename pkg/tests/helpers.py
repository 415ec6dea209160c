"""Independent oracles shared by the test modules."""

import random
from itertools import combinations

from hypermc.hypercore import EdgeColoring, Hypergraph, make_hypergraph


def bfs_components(G, colors, c):
    """Color-``c`` components by breadth-first search over shared edges."""
    adj = {v: set() for v in range(G.n)}
    for e, col in zip(G.edges, colors):
        if col == c:
            for u in e:
                adj[u].update(e)
    seen, comps = set(), []
    for s in range(G.n):
        if s in seen:
            continue
        comp, frontier = {s}, [s]
        while frontier:
            u = frontier.pop()
            for w in adj[u]:
                if w not in comp:
                    comp.add(w)
                    frontier.append(w)
        seen |= comp
        comps.append(frozenset(comp))
    return comps


def bfs_largest(G, colors, r):
    return max((len(c) for col in range(r) for c in bfs_components(G, colors, col)), default=0)


def random_hypergraph(rng, n, k, m):
    pool = list(combinations(range(n), k))
    return make_hypergraph(n, k, rng.sample(pool, min(m, len(pool))))


def random_coloring(rng, G, r):
    return EdgeColoring(r, tuple(rng.randrange(r) for _ in range(G.m)))


def small_corpus(count=50, seed=2024):
    """Seeded random hypergraphs with at most 8 edges."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        k = rng.choice([2, 2, 3])
        n = rng.randint(k, 7)
        out.append(random_hypergraph(rng, n, k, rng.randint(0, 8)))
    return out


# (criterion, status, detail) lines collected by test_acceptance and printed
# in the terminal summary.
ACCEPTANCE: list[tuple[str, str, str]] = []


def record(criterion, ok, detail):
    ACCEPTANCE.append((str(criterion), "PASS" if ok else "FAIL", detail))
    print(f"ACCEPTANCE {criterion}: {'PASS' if ok else 'FAIL'} {detail}")
    return ok
