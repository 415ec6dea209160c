"""Monochromatic components of edge-colored uniform hypergraphs."""

from .constructions import (
    ConstructionOutput,
    PartitionScheme,
    affine_plane_coloring,
    balanced_partition,
    extremal_codegree_example,
    gyarfas_partition_coloring,
)
from .hypercore import (
    ComponentSet,
    EdgeColoring,
    Hypergraph,
    HypergraphError,
    color_components,
    complete_hypergraph,
    component_of,
    degree_of_set,
    largest_mono_component,
    make_hypergraph,
    min_degree,
    shadow,
)
from .solver import ExactResult, HeuristicResult, mc_bounds, mc_brute, mc_exact, mc_heuristic
from .witness import (
    ComponentCertificate,
    DeficiencyProfile,
    check_claims,
    deficiency_profile,
    find_large_component,
)

__version__ = "0.1.0"
