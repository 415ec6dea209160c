"""Plain-text hypergraph and coloring files.

Hypergraph: header ``n k m`` then ``m`` lines of ``k`` ascending vertex
indices in canonical order.  Coloring: header ``m r`` then ``m`` lines with
one color each, aligned to the canonical edge order.
"""

from __future__ import annotations

import warnings
from pathlib import Path

from .hypercore import EdgeColoring, Hypergraph, HypergraphError, make_hypergraph


class FormatError(HypergraphError):
    pass


def _lines(text: str) -> list[str]:
    return [ln.strip() for ln in text.splitlines() if ln.strip()]


def dumps_hypergraph(G: Hypergraph) -> str:
    out = [f"{G.n} {G.k} {G.m}"]
    out.extend(" ".join(map(str, e)) for e in G.edges)
    return "\n".join(out) + "\n"


def loads_hypergraph(text: str) -> Hypergraph:
    lines = _lines(text)
    if not lines:
        raise FormatError("empty hypergraph file")
    try:
        n, k, m = map(int, lines[0].split())
        rows = [tuple(map(int, ln.split())) for ln in lines[1:]]
    except ValueError as exc:
        raise FormatError(f"malformed hypergraph file: {exc}") from None
    if len(rows) != m:
        raise FormatError(f"header announces {m} edges, file has {len(rows)}")
    G = make_hypergraph(n, k, rows)
    if G.edges != tuple(rows):
        warnings.warn("hypergraph file was not in canonical order; canonicalized on read",
                      stacklevel=2)
    return G


def dumps_coloring(chi: EdgeColoring) -> str:
    out = [f"{len(chi.colors)} {chi.r}"]
    out.extend(str(c) for c in chi.colors)
    return "\n".join(out) + "\n"


def loads_coloring(text: str, G: Hypergraph | None = None) -> EdgeColoring:
    lines = _lines(text)
    if not lines:
        raise FormatError("empty coloring file")
    try:
        m, r = map(int, lines[0].split())
        colors = tuple(int(ln) for ln in lines[1:])
    except ValueError as exc:
        raise FormatError(f"malformed coloring file: {exc}") from None
    if len(colors) != m:
        raise FormatError(f"header announces {m} colors, file has {len(colors)}")
    chi = EdgeColoring(r, colors)
    if G is not None:
        chi.check(G)
    return chi


def read_hypergraph(path) -> Hypergraph:
    return loads_hypergraph(Path(path).read_text())


def write_hypergraph(G: Hypergraph, path) -> None:
    Path(path).write_text(dumps_hypergraph(G))


def read_coloring(path, G: Hypergraph | None = None) -> EdgeColoring:
    return loads_coloring(Path(path).read_text(), G)


def write_coloring(chi: EdgeColoring, path) -> None:
    Path(path).write_text(dumps_coloring(chi))
