"""Exact metric, edge metric and mixed metric dimension of small graphs."""

from metdim.errors import *  # noqa: F401,F403
from metdim.families import (
    FlowerSnarkLabeling,
    baseline_family,
    complete_bipartite,
    cycle,
    flower_isomorphism,
    flower_snark,
    is_automorphism,
    path,
    wheel,
)
from metdim.graph import (
    DistanceMatrix,
    EdgeItem,
    Graph,
    VertexItem,
    all_pairs_distances,
    build_graph,
    coordinate_vector,
    item_distance,
    structural_report,
)
from metdim.io import parse_edge_list, read_edge_list, format_edge_list
from metdim.resolver import ResolvingVerdict, Variant, is_resolving, signature_table
from metdim.solver import (
    Basis,
    Certificate,
    DimensionReport,
    NoBasis,
    dimension_lower_bound,
    dimension_profile,
    excision_criterion,
    minimum_resolving_set,
)

__version__ = "0.1.0"
