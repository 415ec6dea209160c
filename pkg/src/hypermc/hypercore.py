"""Core data model: uniform hypergraphs, edge colorings, degrees, shadows and
per-color connected components.

Vertices are ``0..n-1`` and colors ``0..r-1``.  Vertex sets handed back to
callers are ``frozenset``; internally the hot paths use Python ints as
bitsets, which have no width limit, so there is no separate large-``n``
representation.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from math import comb
from typing import Iterable, Sequence


class HypergraphError(ValueError):
    """Malformed hypergraph, coloring, or out-of-range argument."""


@dataclass(frozen=True)
class Hypergraph:
    n: int
    k: int
    edges: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.k < 1:
            raise HypergraphError(f"uniformity must be >= 1, got {self.k}")
        if self.n < 0:
            raise HypergraphError(f"vertex count must be >= 0, got {self.n}")
        prev = None
        for e in self.edges:
            if len(e) != self.k:
                raise HypergraphError(f"edge {e} does not have {self.k} vertices")
            if any(e[i] >= e[i + 1] for i in range(self.k - 1)):
                raise HypergraphError(f"edge {e} is not strictly increasing")
            if e[0] < 0 or e[-1] >= self.n:
                raise HypergraphError(f"edge {e} has a vertex outside [0, {self.n})")
            if prev is not None and e <= prev:
                raise HypergraphError("edges are not in canonical (sorted, distinct) order")
            prev = e

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def edge_masks(self) -> tuple[int, ...]:
        return tuple(sum(1 << v for v in e) for e in self.edges)

    @cached_property
    def edge_index(self) -> dict[tuple[int, ...], int]:
        return {e: i for i, e in enumerate(self.edges)}

    def __contains__(self, edge) -> bool:
        return tuple(sorted(edge)) in self.edge_index

    def is_complete(self) -> bool:
        return self.m == comb(self.n, self.k)


@dataclass(frozen=True)
class EdgeColoring:
    r: int
    colors: tuple[int, ...]

    def __post_init__(self):
        if self.r < 1:
            raise HypergraphError(f"color count must be >= 1, got {self.r}")
        for c in self.colors:
            if not 0 <= c < self.r:
                raise HypergraphError(f"color {c} outside [0, {self.r})")

    def check(self, G: Hypergraph) -> None:
        if len(self.colors) != G.m:
            raise HypergraphError(
                f"coloring has {len(self.colors)} entries but hypergraph has {G.m} edges")

    def permuted(self, perm: Sequence[int]) -> "EdgeColoring":
        """Recolor every edge of color ``c`` with ``perm[c]``."""
        return EdgeColoring(self.r, tuple(perm[c] for c in self.colors))


@dataclass(frozen=True)
class ComponentSet:
    color: int
    vertices: frozenset[int]
    is_trivial: bool

    @property
    def size(self) -> int:
        return len(self.vertices)


def make_hypergraph(n: int, k: int, edges: Iterable[Sequence[int]]) -> Hypergraph:
    """Canonicalize ``edges`` (sort each, dedupe, sort the list) and validate."""
    canon = set()
    for e in edges:
        t = tuple(sorted(int(v) for v in e))
        if len(t) != k:
            raise HypergraphError(f"edge {tuple(e)} has length {len(t)}, expected {k}")
        if len(set(t)) != k:
            raise HypergraphError(f"edge {tuple(e)} repeats a vertex")
        if t[0] < 0 or t[-1] >= n:
            raise HypergraphError(f"edge {tuple(e)}: vertex out of range [0, {n})")
        canon.add(t)
    return Hypergraph(n, k, tuple(sorted(canon)))


def complete_hypergraph(n: int, k: int) -> Hypergraph:
    if k < 2 or n < k:
        raise HypergraphError(f"complete hypergraph needs n >= k >= 2, got n={n}, k={k}")
    return Hypergraph(n, k, tuple(combinations(range(n), k)))


def _check_vertex_set(G: Hypergraph, S) -> tuple[int, ...]:
    S = tuple(sorted(set(S)))
    if S and (S[0] < 0 or S[-1] >= G.n):
        raise HypergraphError(f"vertex set {S} not inside [0, {G.n})")
    return S


def degree_of_set(G: Hypergraph, S: Iterable[int]) -> int:
    """Number of edges of ``G`` containing every vertex of ``S``."""
    S = _check_vertex_set(G, S)
    if len(S) > G.k:
        raise HypergraphError(f"|S| = {len(S)} exceeds uniformity {G.k}")
    mask = sum(1 << v for v in S)
    return sum(1 for em in G.edge_masks if em & mask == mask)


def degree_table(G: Hypergraph, ell: int) -> dict[tuple[int, ...], int]:
    """Degree of every ``ell``-subset of the vertex set (zero-degree sets included)."""
    deg = dict.fromkeys(combinations(range(G.n), ell), 0)
    for e in G.edges:
        for S in combinations(e, ell):
            deg[S] += 1
    return deg


def min_degree(G: Hypergraph, ell: int) -> tuple[int, frozenset[int]]:
    """Minimum ``ell``-degree and the lexicographically smallest set attaining it."""
    if ell < 0 or ell > G.k or ell > G.n:
        raise HypergraphError(f"ell={ell} must satisfy 0 <= ell <= min(k={G.k}, n={G.n})")
    deg = degree_table(G, ell)
    # dict preserves the lexicographic order of combinations(); min() keeps the first.
    best = min(deg, key=deg.__getitem__)
    return deg[best], frozenset(best)


def shadow(G: Hypergraph, r: int) -> Hypergraph:
    if not 2 <= r <= G.k:
        raise HypergraphError(f"shadow order {r} must lie in [2, {G.k}]")
    faces = {f for e in G.edges for f in combinations(e, r)}
    return Hypergraph(G.n, r, tuple(sorted(faces)))


def _color_partition(G: Hypergraph, colors: Sequence[int], c: int) -> list[int]:
    """Union-find parent array for the color-``c`` subhypergraph (fully compressed)."""
    parent = list(range(G.n))

    def find(v):
        root = v
        while parent[root] != root:
            root = parent[root]
        while parent[v] != root:
            parent[v], v = root, parent[v]
        return root

    for e, col in zip(G.edges, colors):
        if col != c:
            continue
        a = find(e[0])
        for v in e[1:]:
            b = find(v)
            if a != b:
                parent[b] = a
    return [find(v) for v in range(G.n)]


def color_components(G: Hypergraph, chi: EdgeColoring, c: int) -> list[ComponentSet]:
    """Partition of the vertex set into color-``c`` components, ordered by least vertex.

    Vertices on no color-``c`` edge come back as trivial singleton components.
    """
    chi.check(G)
    roots = _color_partition(G, chi.colors, c)
    touched = set()
    for e, col in zip(G.edges, chi.colors):
        if col == c:
            touched.update(e)
    groups: dict[int, list[int]] = {}
    for v, root in enumerate(roots):
        groups.setdefault(root, []).append(v)
    return [ComponentSet(c, frozenset(vs), vs[0] not in touched)
            for vs in sorted(groups.values())]


def component_of(G: Hypergraph, chi: EdgeColoring, c: int, x: int) -> ComponentSet:
    if not 0 <= x < G.n:
        raise HypergraphError(f"vertex {x} outside [0, {G.n})")
    for comp in color_components(G, chi, c):
        if x in comp.vertices:
            return comp
    raise AssertionError("component partition does not cover every vertex")


def largest_mono_component(G: Hypergraph, chi: EdgeColoring) -> tuple[int, int, frozenset[int]]:
    """Largest monochromatic component as ``(size, color, vertices)``.

    Ties go to the smallest color, then to the lexicographically smallest
    sorted vertex tuple.
    """
    chi.check(G)
    best = None
    for c in range(chi.r):
        for comp in color_components(G, chi, c):
            key = (-comp.size, c, tuple(sorted(comp.vertices)))
            if best is None or key < best[0]:
                best = (key, comp)
    if best is None:  # n == 0
        return 0, 0, frozenset()
    return best[1].size, best[1].color, best[1].vertices


def largest_component_size(G: Hypergraph, colors: Sequence[int], r: int) -> int:
    """Size of the largest monochromatic component; no tie-breaking work."""
    if G.n == 0:
        return 0
    best = 1
    for c in range(r):
        roots = _color_partition(G, colors, c)
        counts: dict[int, int] = {}
        for root in roots:
            counts[root] = counts.get(root, 0) + 1
        best = max(best, max(counts.values()))
    return best
