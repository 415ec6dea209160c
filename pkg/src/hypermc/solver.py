"""mc_r(G): the minimum, over r-colorings of E(G), of the largest
monochromatic component.

Three routes with a shared objective:

* :func:`mc_brute` enumerates every coloring; tiny instances only, used as
  the independent oracle.
* :func:`mc_exact` is a depth-first branch-and-bound with color-symmetry
  breaking and per-color rollback union-find.
* :func:`mc_heuristic` is seeded random-restart hill climbing and yields an
  upper bound.

:func:`mc_bounds` combines certified lower bounds with witnessed upper bounds.
"""

from __future__ import annotations

import math
import os
import random
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations, product

from .hypercore import (
    EdgeColoring,
    Hypergraph,
    HypergraphError,
    largest_component_size,
    shadow,
)

BRUTE_LIMIT = 10 ** 8
DEFAULT_NODE_BUDGET = int(os.environ.get("HYPERMC_NODE_BUDGET", 10 ** 9))


class InstanceTooLarge(HypergraphError):
    pass


@dataclass(frozen=True)
class ExactResult:
    value: int
    witness: EdgeColoring
    nodes_explored: int
    complete: bool
    budget: dict

    def to_json(self) -> dict:
        return {"value": self.value, "complete": self.complete,
                "nodes_explored": self.nodes_explored, "budget": self.budget}


@dataclass(frozen=True)
class HeuristicResult:
    value: int
    witness: EdgeColoring
    iterations: int
    seed: int

    def to_json(self) -> dict:
        return {"value": self.value, "iterations": self.iterations, "seed": self.seed}


def mc_brute(G: Hypergraph, r: int) -> int:
    """Plain enumeration of all ``r**m`` colorings."""
    return brute_witness(G, r)[0]


def brute_witness(G: Hypergraph, r: int) -> tuple[int, EdgeColoring]:
    """Like :func:`mc_brute`, also returning the first optimal coloring met."""
    if r < 1:
        raise HypergraphError("need at least one color")
    if r ** G.m > BRUTE_LIMIT:
        raise InstanceTooLarge(f"{r}^{G.m} colorings exceeds the brute-force limit")
    best, arg = None, None
    for colors in product(range(r), repeat=G.m):
        v = largest_component_size(G, colors, r)
        if best is None or v < best:
            best, arg = v, colors
    return best, EdgeColoring(r, arg)


class RollbackDSU:
    """Union by size with an undo log; no path compression, so every union
    is undone in O(1)."""

    __slots__ = ("parent", "size", "log")

    def __init__(self, n: int):
        self.parent = list(range(n))
        self.size = [1] * n
        self.log: list[int] = []

    def find(self, v: int) -> int:
        parent = self.parent
        while parent[v] != v:
            v = parent[v]
        return v

    def union(self, a: int, b: int) -> int:
        """Merge the sets of ``a`` and ``b``; return the merged root."""
        a, b = self.find(a), self.find(b)
        if a == b:
            return a
        if self.size[a] < self.size[b]:
            a, b = b, a
        self.parent[b] = a
        self.size[a] += self.size[b]
        self.log.append(b)
        return a

    def checkpoint(self) -> int:
        return len(self.log)

    def rollback(self, mark: int) -> None:
        parent, size, log = self.parent, self.size, self.log
        while len(log) > mark:
            b = log.pop()
            a = parent[b]
            size[a] -= size[b]
            parent[b] = b


def trivial_lower_bound(G: Hypergraph) -> int:
    if G.n == 0:
        return 0
    return G.k if G.m else 1


def counting_lower_bound(G: Hypergraph, r: int) -> int:
    """Smallest ``t`` such that ``r`` color classes, each split into parts of
    order ``<= t``, can hold every edge.  A class whose components all have
    order at most ``t`` carries at most ``(n//t) C(t,k) + C(n%t,k)`` edges."""
    if G.m == 0:
        return trivial_lower_bound(G)
    for t in range(G.k, G.n + 1):
        cap = (G.n // t) * math.comb(t, G.k) + math.comb(G.n % t, G.k)
        if r * cap >= G.m:
            return t
    return G.n


class _BudgetExhausted(Exception):
    pass


class _Search:
    def __init__(self, G: Hypergraph, r: int, best: int, best_colors, max_nodes: int,
                 deadline: float | None, prune: bool, symmetry: bool, stop_at: int):
        self.edges = G.edges
        self.m = G.m
        self.r = r
        self.best = best
        self.best_colors = best_colors
        self.max_nodes = max_nodes
        self.deadline = deadline
        self.prune = prune
        self.symmetry = symmetry
        self.stop_at = stop_at
        self.nodes = 0
        self.dsu = [RollbackDSU(G.n) for _ in range(r)]
        self.colors = [0] * G.m
        self.done = False

    def apply(self, idx: int, c: int) -> int:
        """Add edge ``idx`` to color ``c``; return the size of its component."""
        dsu = self.dsu[c]
        e = self.edges[idx]
        root = e[0]
        for v in e[1:]:
            root = dsu.union(root, v)
        self.colors[idx] = c
        return dsu.size[root]

    def run(self, idx: int, max_used: int, cur: int) -> None:
        self.nodes += 1
        if self.nodes > self.max_nodes:
            raise _BudgetExhausted
        if self.deadline is not None and not self.nodes & 1023 \
                and time.perf_counter() > self.deadline:
            raise _BudgetExhausted
        if idx == self.m:
            if cur < self.best:
                self.best = cur
                self.best_colors = tuple(self.colors)
                if cur <= self.stop_at:
                    self.done = True
            return
        limit = min(max_used + 2, self.r) if self.symmetry else self.r
        for c in range(limit):
            dsu = self.dsu[c]
            mark = len(dsu.log)
            size = self.apply(idx, c)
            new = cur if cur >= size else size
            if not self.prune or new < self.best:
                self.run(idx + 1, max_used if max_used >= c else c, new)
            dsu.rollback(mark)
            if self.done:
                return


def _prefixes(G: Hypergraph, r: int, depth: int, best: int, symmetry: bool, prune: bool):
    """Colorings of the first ``depth`` edges that survive pruning, in search order."""
    out = []
    n_nodes = 0

    def rec(prefix, max_used):
        nonlocal n_nodes
        n_nodes += 1
        if len(prefix) == depth:
            out.append(tuple(prefix))
            return
        limit = min(max_used + 2, r) if symmetry else r
        for c in range(limit):
            prefix.append(c)
            if not prune or _prefix_value(G, prefix, r) < best:
                rec(prefix, max(max_used, c))
            prefix.pop()

    rec([], -1)
    return out, n_nodes


def _prefix_value(G: Hypergraph, prefix, r: int) -> int:
    sub = Hypergraph(G.n, G.k, G.edges[: len(prefix)])
    return largest_component_size(sub, prefix, r)


def _solve_subtask(args):
    G, r, prefix, best, best_colors, max_nodes, deadline, prune, symmetry, stop_at = args
    s = _Search(G, r, best, best_colors, max_nodes, deadline, prune, symmetry, stop_at)
    cur, max_used = 1 if G.n else 0, -1
    for idx, c in enumerate(prefix):
        cur = max(cur, s.apply(idx, c))
        max_used = max(max_used, c)
    s.nodes = 0
    complete = True
    try:
        s.run(len(prefix), max_used, cur)
    except _BudgetExhausted:
        complete = False
    return s.best, s.best_colors, s.nodes, complete


def mc_exact(G: Hypergraph, r: int, max_nodes: int | None = None,
             time_limit: float | None = None, incumbent: EdgeColoring | None = None,
             heuristic: bool = True, prune: bool = True, symmetry: bool = True,
             split_depth: int = 0, workers: int = 1, seed: int = 0) -> ExactResult:
    """Exact mc_r(G) by branch-and-bound; ``complete=False`` means the budget
    ran out and ``value`` is only an upper bound.

    With ``split_depth > 0`` the search is cut into one subtask per surviving
    coloring of the first ``split_depth`` edges.  Subtasks start from the same
    incumbent and never share improvements, so the result (including
    ``nodes_explored``) is identical for every ``workers`` count.  The node
    budget then applies per subtask.
    """
    if r < 1:
        raise HypergraphError("need at least one color")
    if max_nodes is None:
        max_nodes = DEFAULT_NODE_BUDGET
    budget = {"max_nodes": max_nodes, "time_limit": time_limit,
              "split_depth": split_depth, "prune": prune, "symmetry": symmetry}
    deadline = time.perf_counter() + time_limit if time_limit is not None else None

    best_colors = (0,) * G.m
    best = largest_component_size(G, best_colors, r)
    if incumbent is not None:
        incumbent.check(G)
        v = largest_component_size(G, incumbent.colors, r)
        if v < best:
            best, best_colors = v, incumbent.colors
    if heuristic and prune and G.m:
        h = mc_heuristic(G, r, iterations=2000, restarts=3, seed=seed,
                         target=trivial_lower_bound(G))
        if h.value < best:
            best, best_colors = h.value, h.witness.colors
    stop_at = trivial_lower_bound(G) if prune else -1
    if best <= stop_at:
        return ExactResult(best, EdgeColoring(r, best_colors), 0, True, budget)

    depth = min(split_depth, G.m)
    prefixes, prefix_nodes = _prefixes(G, r, depth, best, symmetry, prune) if depth else ([()], 0)
    tasks = [(G, r, p, best, best_colors, max_nodes, deadline, prune, symmetry, stop_at)
             for p in prefixes]
    if workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_solve_subtask, tasks))
    else:
        results = [_solve_subtask(t) for t in tasks]

    nodes, complete = prefix_nodes, True
    for value, colors, sub_nodes, sub_complete in results:
        nodes += sub_nodes
        complete &= sub_complete
        if value < best:
            best, best_colors = value, colors
    return ExactResult(best, EdgeColoring(r, tuple(best_colors)), nodes, complete, budget)


class _HillState:
    """Per-color component labels and vertex degrees for a full coloring.

    The objective is ``(M, number of components of order M, closest, peel)``
    where ``M`` is the largest component order, ``peel`` sums over those
    components the smallest vertex degree inside them and ``closest`` is the
    minimum of those degrees.  Single-edge moves rarely split a component
    outright; the last two entries reward stripping a vertex towards
    detachment, which is what eventually splits one.
    """

    def __init__(self, G: Hypergraph, r: int, colors: list[int]):
        self.G = G
        self.r = r
        self.colors = colors
        self.members = [set() for _ in range(r)]
        for i, c in enumerate(colors):
            self.members[c].add(i)
        self.deg = [[0] * G.n for _ in range(r)]
        for e, c in zip(G.edges, colors):
            for v in e:
                self.deg[c][v] += 1
        self.roots = [self._partition(c) for c in range(r)]

    def _partition(self, c: int, skip: int = -1) -> list[int]:
        parent = list(range(self.G.n))

        def find(v):
            while parent[v] != v:
                parent[v] = parent[parent[v]]
                v = parent[v]
            return v

        edges = self.G.edges
        for i in self.members[c]:
            if i == skip:
                continue
            e = edges[i]
            a = find(e[0])
            for v in e[1:]:
                b = find(v)
                if a != b:
                    parent[b] = a
        return [find(v) for v in range(self.G.n)]

    @staticmethod
    def _score(roots_by_color, deg_by_color):
        top, count, closest, peel = 0, 0, 0, 0
        for roots, deg in zip(roots_by_color, deg_by_color):
            sizes = Counter(roots)
            big = max(sizes.values())
            if big < top:
                continue
            low = {}
            for v, root in enumerate(roots):
                if sizes[root] == big:
                    d = deg[v]
                    if d < low.get(root, d + 1):
                        low[root] = d
            if big > top:
                top, count, closest, peel = big, 0, min(low.values()), 0
            count += len(low)
            closest = min(closest, min(low.values()))
            peel += sum(low.values())
        return top, count, closest, peel

    def objective(self):
        return self._score(self.roots, self.deg)

    def largest(self) -> int:
        return max(max(Counter(roots).values()) for roots in self.roots)

    def edges_on_largest(self) -> list[int]:
        top = self.largest()
        sizes = [Counter(roots) for roots in self.roots]
        out = []
        for i, e in enumerate(self.G.edges):
            c = self.colors[i]
            if sizes[c][self.roots[c][e[0]]] == top:
                out.append(i)
        return out

    def _thin_spots(self) -> list[tuple[int, int]]:
        """(color, vertex) pairs where a vertex of minimum degree sits on a
        largest component of that color."""
        top = self.largest()
        spots = []
        for c, roots in enumerate(self.roots):
            for root, size in Counter(roots).items():
                if size == top:
                    verts = [v for v in range(self.G.n) if roots[v] == root]
                    low = min(self.deg[c][v] for v in verts)
                    spots.extend((c, v) for v in verts if self.deg[c][v] == low)
        return spots

    def pick_edge(self, rng: random.Random) -> int:
        """An edge on a largest component: half the time uniformly, otherwise
        one through a minimum-degree vertex of such a component."""
        if rng.random() < 0.5:
            return rng.choice(self.edges_on_largest())
        c, v = rng.choice(self._thin_spots())
        return rng.choice([i for i in self.members[c] if v in self.G.edges[i]])

    def candidate_moves(self, i: int):
        """Objective after moving edge ``i`` to each other color."""
        e = self.G.edges[i]
        a = self.colors[i]
        roots = list(self.roots)
        deg = list(self.deg)
        roots[a] = self._partition(a, skip=i)
        deg[a] = list(self.deg[a])
        for v in e:
            deg[a][v] -= 1
        out = []
        for b in range(self.r):
            if b == a:
                continue
            old = self.roots[b]
            merge = {old[v] for v in e}
            target = old[e[0]]
            rb = [target if root in merge else root for root in old]
            db = list(self.deg[b])
            for v in e:
                db[v] += 1
            roots[b], deg[b] = rb, db
            out.append((self._score(roots, deg), b))
            roots[b], deg[b] = self.roots[b], self.deg[b]
        return out

    def move(self, i: int, b: int) -> None:
        a = self.colors[i]
        self.members[a].discard(i)
        self.members[b].add(i)
        self.colors[i] = b
        for v in self.G.edges[i]:
            self.deg[a][v] -= 1
            self.deg[b][v] += 1
        self.roots[a] = self._partition(a)
        self.roots[b] = self._partition(b)


class _FocusState(_HillState):
    """Objective: sizes of the components through one fixed vertex, largest first."""

    def __init__(self, G, r, colors, focus: int):
        self.focus = focus
        super().__init__(G, r, colors)

    def _score(self, roots_by_color, deg_by_color):
        x = self.focus
        return tuple(sorted((roots.count(roots[x]) for roots in roots_by_color), reverse=True))

    def edges_on_largest(self):
        best = max(range(self.r), key=lambda c: self.roots[c].count(self.roots[c][self.focus]))
        roots = self.roots[best]
        return [i for i in self.members[best] if roots[self.G.edges[i][0]] == roots[self.focus]]


def _greedy_start(G: Hypergraph, r: int, rng: random.Random) -> list[int]:
    """Edges in random order, each put in the color whose component it grows least."""
    dsu = [RollbackDSU(G.n) for _ in range(r)]
    colors = [0] * G.m
    order = list(range(G.m))
    rng.shuffle(order)
    for i in order:
        e = G.edges[i]
        grown = []
        for c in range(r):
            roots = {dsu[c].find(v) for v in e}
            grown.append(sum(dsu[c].size[root] for root in roots))
        low = min(grown)
        c = rng.choice([c for c in range(r) if grown[c] == low])
        root = e[0]
        for v in e[1:]:
            root = dsu[c].union(root, v)
        colors[i] = c
    return colors


def mc_heuristic(G: Hypergraph, r: int, iterations: int = 10 ** 4, restarts: int = 10,
                 seed: int = 0, plateau: int | None = None, target: int | None = None,
                 initial: EdgeColoring | None = None, focus: int | None = None,
                 start: str = "greedy") -> HeuristicResult:
    """Random-restart hill climbing over colorings; returns an upper bound.

    Each step picks a random edge on a currently-largest component and moves
    it to the color with the best resulting objective (largest component
    size, then how many components reach it, then the ``_HillState`` peel
    terms), accepting non-worsening moves.  Restarts begin from a greedy
    coloring (``start="greedy"``) or a uniform one (``start="random"``).
    A restart ends after ``iterations`` steps or ``plateau`` steps without
    strict improvement.  ``target`` stops the run once reached.

    ``focus`` switches the objective to the component sizes through that
    vertex; the returned ``value`` is still the ordinary largest component.
    """
    if r < 1:
        raise HypergraphError("need at least one color")
    rng = random.Random(seed)
    if plateau is None:
        plateau = max(200, min(4 * G.m, 2000))
    if G.m == 0:
        return HeuristicResult(trivial_lower_bound(G), EdgeColoring(r, ()), 0, seed)

    def make_state(colors):
        if focus is None:
            return _HillState(G, r, colors)
        return _FocusState(G, r, colors, focus)

    best_key, best_colors = None, None
    total = 0
    for restart in range(max(restarts, 1)):
        if restart == 0 and initial is not None:
            initial.check(G)
            colors = list(initial.colors)
        else:
            colors = _greedy_start(G, r, rng) if start == "greedy" else \
                [rng.randrange(r) for _ in range(G.m)]
        state = make_state(colors)
        cur = state.objective()
        stale = 0
        if best_key is None or cur < best_key:
            best_key, best_colors = cur, tuple(state.colors)
        for _ in range(iterations):
            if target is not None and best_key[0] <= target:
                break
            if r == 1 or stale >= plateau:
                break
            total += 1
            i = state.pick_edge(rng)
            cands = state.candidate_moves(i)
            low = min(obj for obj, _ in cands)
            if low <= cur:
                state.move(i, rng.choice([b for obj, b in cands if obj == low]))
            else:
                low = cur
            stale = 0 if low < cur else stale + 1
            cur = low
            if cur < best_key:
                best_key, best_colors = cur, tuple(state.colors)
        if target is not None and best_key[0] <= target:
            break
    witness = EdgeColoring(r, best_colors)
    return HeuristicResult(largest_component_size(G, best_colors, r), witness, total, seed)


@dataclass
class BoundsReport:
    lower: int
    lower_source: str
    upper: int
    upper_source: str
    witness: EdgeColoring
    certificates: list[dict] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def exact(self) -> bool:
        return self.lower == self.upper

    def to_json(self) -> dict:
        return {"lower": self.lower, "lower_source": self.lower_source,
                "upper": self.upper, "upper_source": self.upper_source,
                "exact": self.exact, "certificates": self.certificates,
                "notes": self.notes}


def mc_bounds(G: Hypergraph, r: int, witnesses=(), constructions: bool = True,
              exact_nodes: int = 10 ** 6, heuristic_iterations: int = 2000,
              heuristic_restarts: int = 5, seed: int = 0) -> BoundsReport:
    """Certified lower bound and witnessed upper bound on mc_r(G).

    Lower bounds: a lone edge, the counting bound, a complete ``r``-shadow
    when ``r <= k``, the large-codegree theorem when ``r = k+1``, and
    exhaustive search when it completes within ``exact_nodes``.  Upper
    bounds: supplied witnesses, the partition construction for complete
    ``k``-graphs with ``k+1`` colors, hill climbing, and exact search.
    """
    from .constructions import gyarfas_partition_coloring
    from .witness import (certified_bound, find_large_component, meets_codegree_threshold,
                          revalidate)
    from .hypercore import min_degree

    lowers = [(trivial_lower_bound(G), "trivial"), (counting_lower_bound(G, r), "counting")]
    notes = []
    certificates = []
    if r == 1 and G.n:
        lowers.append((largest_component_size(G, (0,) * G.m, 1), "single color"))
    elif 2 <= r <= G.k and shadow(G, r).is_complete():
        lowers.append((G.n, "complete shadow"))
    theorem = False
    if r == G.k + 1 and G.k >= 3 and G.n >= G.k:
        delta, _ = min_degree(G, G.k - 1)
        theorem = meets_codegree_threshold(G.n, G.k, delta)
        if theorem:
            lowers.append((certified_bound(G.n, G.k), "theorem"))
        else:
            notes.append(f"codegree theorem inapplicable: delta_{G.k - 1} = {delta}")

    uppers = []
    for chi in witnesses:
        chi.check(G)
        uppers.append((largest_component_size(G, chi.colors, r), "witness", chi))
    if constructions and theorem and G.is_complete():
        out = gyarfas_partition_coloring(G.n, G.k)
        uppers.append((largest_component_size(G, out.coloring.colors, r), "construction",
                       out.coloring))
    if not uppers:
        zero = EdgeColoring(r, (0,) * G.m)
        uppers.append((largest_component_size(G, zero.colors, r), "single color", zero))

    lower, lower_source = max(lowers, key=lambda t: t[0])
    upper, upper_source, witness = min(uppers, key=lambda t: t[0])

    if upper > lower and heuristic_iterations:
        h = mc_heuristic(G, r, iterations=heuristic_iterations, restarts=heuristic_restarts,
                         seed=seed, target=lower)
        if h.value < upper:
            upper, upper_source, witness = h.value, "heuristic", h.witness
    if upper > lower and exact_nodes:
        ex = mc_exact(G, r, max_nodes=exact_nodes, incumbent=witness, heuristic=False)
        if ex.value < upper:
            upper, upper_source, witness = ex.value, "exact", ex.witness
        if ex.complete:
            lower, lower_source = ex.value, "exact"
    if theorem:
        cert = find_large_component(G, witness, 0, check_degree=False)
        certificates.append({"branch": cert.branch, "size": cert.size,
                             "valid": revalidate(G, witness, cert)})
    return BoundsReport(lower, lower_source, upper, upper_source, witness,
                        certificates, notes)
