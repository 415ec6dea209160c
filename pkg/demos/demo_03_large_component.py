"""
Certifying a large component
============================

In a 3-graph with large minimum codegree, every 4-coloring has a
monochromatic component of order at least ceil(3n/4).  The finder returns
one together with the branch of the argument that produced it.
"""

import random

from hypermc import EdgeColoring, complete_hypergraph, find_large_component
from hypermc.campaign import endgame_block_coloring, targeted_endgame_coloring
from hypermc.witness import PreconditionError, revalidate
from hypermc import extremal_codegree_example

K = complete_hypergraph(10, 3)
rng = random.Random(1)
chi = EdgeColoring(4, tuple(rng.randrange(4) for _ in range(K.m)))
cert = find_large_component(K, chi)
print(cert.branch, cert.color, sorted(cert.vertices), revalidate(K, chi, cert))

###############################################################################
# The rigid case
# --------------
# Random colorings almost always leave one color spanning nearly everything
# from the base vertex.  A hand-built coloring where every color misses a
# big block forces the structural endgame instead.
K13 = complete_hypergraph(13, 3)
hard = endgame_block_coloring(K13, x=0)
cert = find_large_component(K13, hard)
print(cert.branch, "relabeling", cert.relabeling, "size", cert.size)
for name, ok in cert.assertions:
    print("  ", "ok " if ok else "BAD", name)

# Hill climbing on the components through the base vertex finds such
# colorings too.
_, found = targeted_endgame_coloring(K13, 0, seed=300, iterations=20000, restarts=20)
print("hill climbing reached:", found.branch if found else None)

###############################################################################
# Below the threshold there is no guarantee
# -----------------------------------------
ex = extremal_codegree_example(10, 3)
try:
    find_large_component(ex.hypergraph, ex.coloring)
except PreconditionError as exc:
    print("rejected:", exc)
