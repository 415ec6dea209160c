"""
Hypergraphs, colorings and monochromatic components
===================================================

Build a few hypergraphs, color their edges and look at the components each
color class splits the vertices into.
"""

from hypermc import (
    EdgeColoring,
    color_components,
    complete_hypergraph,
    largest_mono_component,
    make_hypergraph,
    min_degree,
    shadow,
)

# Edges are canonicalized: each is sorted and duplicates are dropped.
G = make_hypergraph(6, 3, [[2, 1, 0], [0, 1, 2], [2, 3, 4], [4, 5, 3]])
print(G.edges)

# Color the three edges 0, 0, 1.  Color 0 joins {0..4} through vertex 2;
# vertex 5 is untouched by color 0, so it forms a trivial component.
chi = EdgeColoring(2, (0, 0, 1))
for comp in color_components(G, chi, 0):
    print("color 0:", sorted(comp.vertices), "trivial" if comp.is_trivial else "")

print("largest:", largest_mono_component(G, chi))

###############################################################################
# Degrees and shadows
# -------------------
# The minimum l-degree is the fewest edges containing any l-set.  For the
# complete 3-graph on 6 vertices every pair lies in 4 edges.
K = complete_hypergraph(6, 3)
for ell in range(4):
    print(ell, min_degree(K, ell))

# The 2-shadow collects every pair covered by an edge.
print(shadow(G, 2).edges)
print("K_6^3 has complete 2-shadow:", shadow(K, 2).is_complete())
