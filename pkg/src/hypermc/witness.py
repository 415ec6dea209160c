"""Constructive large-component finder for ``(r+1)``-colored ``r``-graphs of
large minimum codegree.

Given ``G`` with ``(r+1) * delta_{r-1}(G) >= r*n - (r-1)(r+1)`` and any
``(r+1)``-coloring, :func:`find_large_component` returns a monochromatic
component of order at least ``ceil(r n / (r+1))`` along with a trace of how
it was found.  The argument runs from a base vertex ``x``:

* ``C_i`` is the color-``i`` component of ``x`` and ``F_i`` its complement.
* If some ``F_i`` is small (``(r+1)|F_i| <= n``) then ``C_i`` is the answer.
* Otherwise the deficiency sets obey three intersection laws (checked by
  :func:`check_claims`), which force a rigid structure; after relabeling the
  colors, the last color has one component absorbing every ``F_a ∩ F_last``.

Every intersection law and derived equality is asserted.  On a legal
input a failed assertion means a bug here, or a counterexample to the
underlying theorem; :class:`ClaimViolation` carries the full profile.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, permutations

from .hypercore import (
    ComponentSet,
    EdgeColoring,
    Hypergraph,
    HypergraphError,
    color_components,
    component_of,
    min_degree,
)

SMALL_DEFICIENCY = "SMALL_DEFICIENCY"
ENDGAME = "ENDGAME"


class PreconditionError(HypergraphError):
    """Input outside the range where a large component is guaranteed."""


class ClaimViolation(AssertionError):
    def __init__(self, message: str, profile: "DeficiencyProfile | None" = None):
        super().__init__(message)
        self.profile = profile


@dataclass(frozen=True)
class DeficiencyProfile:
    x: int
    n: int
    components: tuple[ComponentSet, ...]
    F: tuple[frozenset[int], ...]

    @property
    def colors(self) -> int:
        return len(self.F)

    @property
    def union(self) -> frozenset[int]:
        return frozenset().union(*self.F)

    @property
    def exclusive(self) -> tuple[frozenset[int], ...]:
        out = []
        for i, Fi in enumerate(self.F):
            others = frozenset().union(*(Fj for j, Fj in enumerate(self.F) if j != i))
            out.append(Fi - others)
        return tuple(out)

    def all_large(self) -> bool:
        return all(self.colors * len(Fi) > self.n for Fi in self.F)

    def as_dict(self) -> dict:
        return {
            "x": self.x,
            "F": [sorted(Fi) for Fi in self.F],
            "C": [sorted(c.vertices) for c in self.components],
        }


@dataclass(frozen=True)
class ClaimInstance:
    claim: int
    indices: tuple[int, ...]
    ok: bool


@dataclass
class ClaimReport:
    applicable: bool
    instances: list[ClaimInstance] = field(default_factory=list)

    @property
    def failures(self) -> list[ClaimInstance]:
        return [c for c in self.instances if not c.ok]

    @property
    def ok(self) -> bool:
        return not self.failures


@dataclass
class ComponentCertificate:
    color: int
    vertices: frozenset[int]
    branch: str
    base_vertex: int
    small_color: int | None = None
    relabeling: tuple[int, ...] | None = None
    majority_side: int | None = None
    assertions: list[tuple[str, bool]] = field(default_factory=list)

    @property
    def size(self) -> int:
        return len(self.vertices)

    def to_json(self) -> dict:
        branch = {"name": self.branch}
        if self.branch == SMALL_DEFICIENCY:
            branch["color"] = self.small_color
        else:
            branch["majority_side"] = self.majority_side
        return {
            "color": self.color,
            "size": self.size,
            "vertices": sorted(self.vertices),
            "branch": branch,
            "relabeling": list(self.relabeling) if self.relabeling is not None else None,
            "assertions": [{"check": name, "ok": ok} for name, ok in self.assertions],
            "base_vertex": self.base_vertex,
        }


def certified_bound(n: int, r: int) -> int:
    """``ceil(r n / (r+1))``."""
    return -(-r * n // (r + 1))


def meets_codegree_threshold(n: int, r: int, delta: int) -> bool:
    """``delta >= r n/(r+1) - (r-1)`` in integers."""
    return (r + 1) * delta >= r * n - (r - 1) * (r + 1)


def deficiency_profile(G: Hypergraph, chi: EdgeColoring, x: int) -> DeficiencyProfile:
    if chi.r != G.k + 1:
        raise HypergraphError(
            f"coloring must use exactly k+1 = {G.k + 1} colors, got {chi.r}")
    V = frozenset(range(G.n))
    comps = tuple(component_of(G, chi, i, x) for i in range(chi.r))
    return DeficiencyProfile(x, G.n, comps, tuple(V - c.vertices for c in comps))


def check_claims(profile: DeficiencyProfile, n: int, r: int) -> ClaimReport:
    """Evaluate the three intersection laws over every index tuple.

    1. ``F_h ∩ F_i ∩ F_j = ∅`` for distinct ``h, i, j``;
    2. ``F_h ∩ F_i = ∅`` or ``F_j ∩ F_k = ∅`` for distinct ``h, i, j, k``;
    3. ``F_h ∩ F_i = ∅`` or ``F_j* = ∅`` for distinct ``h, i, j``.

    The laws are only guaranteed once every ``(r+1)|F_i| > n``; below that the
    report is marked not applicable but still evaluated.
    """
    F = profile.F
    if len(F) != r + 1:
        raise HypergraphError(f"profile has {len(F)} colors, expected {r + 1}")
    star = profile.exclusive
    report = ClaimReport(applicable=all((r + 1) * len(Fi) > n for Fi in F))
    idx = range(r + 1)
    for h, i, j in combinations(idx, 3):
        report.instances.append(ClaimInstance(1, (h, i, j), not (F[h] & F[i] & F[j])))
    for h, i, j, k in permutations(idx, 4):
        if h < i and j < k and (h, i) < (j, k):
            ok = not (F[h] & F[i]) or not (F[j] & F[k])
            report.instances.append(ClaimInstance(2, (h, i, j, k), ok))
    for h, i in combinations(idx, 2):
        for j in idx:
            if j not in (h, i):
                ok = not (F[h] & F[i]) or not star[j]
                report.instances.append(ClaimInstance(3, (h, i, j), ok))
    return report


def _require(cond: bool, message: str, cert: ComponentCertificate | None,
             profile: DeficiencyProfile):
    if cert is not None:
        cert.assertions.append((message, bool(cond)))
    if not cond:
        raise ClaimViolation(f"assertion failed: {message}; profile={profile.as_dict()}",
                             profile)


def find_large_component(G: Hypergraph, chi: EdgeColoring, x: int = 0,
                         check_degree: bool = True) -> ComponentCertificate:
    """Monochromatic component of order ``>= ceil(r n/(r+1))`` with its trace.

    ``chi`` may use fewer than ``r+1`` colors; it is widened to ``r+1``.
    """
    n, r = G.n, G.k
    if r < 3 or n < r:
        raise PreconditionError(f"need n >= r >= 3, got n={n}, r={r}")
    if chi.r > r + 1:
        raise PreconditionError(f"coloring uses {chi.r} colors, at most r+1 = {r + 1} allowed")
    chi.check(G)
    if chi.r < r + 1:
        chi = EdgeColoring(r + 1, chi.colors)
    if check_degree:
        delta, _ = min_degree(G, r - 1)
        if not meets_codegree_threshold(n, r, delta):
            raise PreconditionError(
                f"minimum codegree {delta} below r n/(r+1) - (r-1) for n={n}, r={r}")
    bound = certified_bound(n, r)

    profile = deficiency_profile(G, chi, x)
    F = profile.F
    for i, Fi in enumerate(F):
        if (r + 1) * len(Fi) <= n:
            comp = profile.components[i]
            cert = ComponentCertificate(i, comp.vertices, SMALL_DEFICIENCY, x, small_color=i)
            _require(comp.size >= bound, f"|C_{i}| >= {bound}", cert, profile)
            return cert

    cert = ComponentCertificate(-1, frozenset(), ENDGAME, x)
    report = check_claims(profile, n, r)
    for inst in report.instances:
        _require(inst.ok, f"claim {inst.claim} at {inst.indices}", None, profile)
    cert.assertions.append((f"claims 1-3 ({len(report.instances)} instances)", True))

    # Pigeonhole: sum |F_i| > n > |F| (x lies in no F_i), so two overlap.
    pair = next(((i, j) for i, j in combinations(range(r + 1), 2) if F[i] & F[j]), None)
    _require(pair is not None, "some F_i ∩ F_j nonempty", cert, profile)
    i, j = pair
    # perm[working color] = original color; the pair goes to the last two slots.
    perm = [c for c in range(r + 1) if c not in pair] + [i, j]
    W = [F[c] for c in perm]
    Wstar = [profile.exclusive[c] for c in perm]
    head = range(r - 1)

    for a, b in combinations(head, 2):
        _require(not (W[a] & W[b]), f"F_{perm[a]} ∩ F_{perm[b]} empty", cert, profile)
    for a in head:
        _require(not Wstar[a], f"F_{perm[a]}* empty", cert, profile)
    for a in head:
        _require(len(W[a] & W[r - 1]) + len(W[a] & W[r]) == len(W[a]),
                 f"F_{perm[a]} splits over the last two colors", cert, profile)

    a = r - 2
    lo, hi = len(W[a] & W[r - 1]), len(W[a] & W[r])
    side = r if hi >= lo else r - 1
    _require(2 * (r + 1) * len(W[a] & W[side]) > n, "majority side exceeds n/(2(r+1))",
             cert, profile)
    if side == r - 1:
        perm[r - 1], perm[r] = perm[r], perm[r - 1]
        W[r - 1], W[r] = W[r], W[r - 1]
        Wstar[r - 1], Wstar[r] = Wstar[r], Wstar[r - 1]
    majority = perm[r]
    last = W[r]

    for b in head:
        _require(len(W[b] & last) == len(W[b]), f"F_{perm[b]} ⊆ F_{perm[r]}", cert, profile)
    _require(not Wstar[r - 1], f"F_{perm[r - 1]}* empty", cert, profile)
    _require(len(W[r - 1] & last) == len(W[r - 1]), f"F_{perm[r - 1]} ⊆ F_{perm[r]}",
             cert, profile)

    target = frozenset().union(*(W[b] & last for b in range(r)))
    color = perm[r]
    home = [c for c in color_components(G, chi, color) if target & c.vertices]
    _require(len(home) == 1, "union of F_a ∩ F_last lies in one component", cert, profile)
    comp = home[0]
    _require(target <= comp.vertices, "component contains the whole union", cert, profile)
    _require((r + 1) * comp.size > r * n, "component order exceeds r n/(r+1)", cert, profile)

    cert.color = color
    cert.vertices = comp.vertices
    cert.relabeling = tuple(perm)
    cert.majority_side = majority
    return cert


def revalidate(G: Hypergraph, chi: EdgeColoring, cert: ComponentCertificate) -> bool:
    """Recompute the certified component from scratch and check the bound."""
    if chi.r < G.k + 1:
        chi = EdgeColoring(G.k + 1, chi.colors)
    if not cert.vertices:
        return False
    v = min(cert.vertices)
    comp = component_of(G, chi, cert.color, v)
    return comp.vertices == cert.vertices and cert.size >= certified_bound(G.n, G.k)
