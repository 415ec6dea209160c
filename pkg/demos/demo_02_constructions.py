"""
Extremal colorings
==================

Three explicit colorings that keep every monochromatic component small, each
re-checked from scratch by the library.
"""

from hypermc import (
    affine_plane_coloring,
    color_components,
    extremal_codegree_example,
    gyarfas_partition_coloring,
    min_degree,
)
from hypermc.constructions import ConstructionError


def show(out):
    print(f"{out.name} {out.params}: {out.hypergraph.m} edges, ok={out.ok}")
    for check in out.checks:
        flag = "" if check.gating else " (informational)"
        print(f"   {check.name}: claimed {check.claimed}, got {check.computed}{flag}")


###############################################################################
# Balanced partition coloring
# ---------------------------
# Split the vertices into r+1 near-equal parts; an r-edge misses some part
# and takes that part's color.  Components of color i avoid part i.
show(gyarfas_partition_coloring(12, 3))

###############################################################################
# A sparser 3-graph one codegree short
# ------------------------------------
# Deleting a structured family of edges from K_n^3 drops the minimum
# codegree by one below the large-component threshold, and a matching
# 4-coloring then keeps every component below ceil(3n/4).
ex = extremal_codegree_example(13, 3)
show(ex)
print("codegree:", min_degree(ex.hypergraph, 2)[0])

# With block size 2 the last color contains the whole 3-graph on the X
# blocks, a component of order 6 that exceeds the bound r(b-1) = 3.  The
# largest component overall is still 7.
small = extremal_codegree_example(10, 3)
print([c.size for c in color_components(small.hypergraph, small.coloring, 3)
       if not c.is_trivial])

try:
    extremal_codegree_example(19, 5)
except ConstructionError as exc:
    print("rejected:", exc)

###############################################################################
# Affine plane coloring of a complete graph
# -----------------------------------------
# Points of the 3x3 affine plane, blown up to blocks of 2 vertices; each
# parallel class of lines is one color.
show(affine_plane_coloring(3, 2))
