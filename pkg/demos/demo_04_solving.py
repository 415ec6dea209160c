"""
Exact and heuristic mc
======================

mc_r(G) is the best an adversary can do: the smallest possible largest
monochromatic component over all r-colorings.
"""

import time

from hypermc import complete_hypergraph, extremal_codegree_example
from hypermc import mc_bounds, mc_brute, mc_exact, mc_heuristic

K4 = complete_hypergraph(4, 2)
print("brute:", mc_brute(K4, 3), "exact:", mc_exact(K4, 3).value)

###############################################################################
# Branch-and-bound
# ----------------
# Colors are interchangeable, so an edge may only open the next unused
# color, and a branch dies once its partial largest component reaches the
# incumbent.
start = time.perf_counter()
res = mc_exact(complete_hypergraph(6, 3), 4)
print(res.value, res.complete, res.nodes_explored, f"{time.perf_counter() - start:.2f}s")

# Splitting the first edges into independent subtasks gives the same report
# for any worker count.
a = mc_exact(complete_hypergraph(6, 3), 4, split_depth=3, workers=1)
b = mc_exact(complete_hypergraph(6, 3), 4, split_depth=3, workers=2)
print("identical:", a == b)

###############################################################################
# Local search and bounds
# -----------------------
G = extremal_codegree_example(10, 3).hypergraph
h = mc_heuristic(G, 4, 10 ** 5, 20, seed=3)
print("heuristic upper bound:", h.value, "after", h.iterations, "moves")

# A counting argument matches it: four color classes whose components have
# order at most 6 hold at most 96 < 102 edges.  Handing the heuristic's
# coloring to the bounds report closes the gap to an exact value.
rep = mc_bounds(G, 4, witnesses=[h.witness], seed=3)
print(rep.lower, rep.lower_source, rep.upper, rep.upper_source)

rep = mc_bounds(complete_hypergraph(12, 3), 4, seed=0)
print(rep.lower, rep.lower_source, rep.upper, rep.upper_source, rep.certificates)
