"""Rotation/shift digraphs on fixed-length distinct-symbol words.

The package provides three layers:

* closed-form machinery — distances, unique shortest paths, bounded rerouting
  and exact-length walks when rotations are deleted, and wide-diameter
  containers of internally disjoint paths (:mod:`cycleprefix.topology`,
  :mod:`cycleprefix.routing`, :mod:`cycleprefix.containers`);
* brute-force oracles that recompute the same answers by explicit search, for
  cross-checking (:mod:`cycleprefix.oracle`, :mod:`cycleprefix.verify`);
* a FastAPI service and a thin CLI client (:mod:`cycleprefix.service`,
  :mod:`cycleprefix.cli`).
"""

from .containers import (
    CharTriple,
    Container,
    ContainerLeg,
    WitnessReport,
    build_container,
    char_triple,
    first_out_of_band,
    leg_distance,
    lower_bound_witness,
    match_in_neighbor,
    smallest_free_symbol,
)
from .errors import (
    CyclePrefixError,
    DomainError,
    InstanceTooLargeError,
    ParameterError,
    SameVertexError,
    UndefinedStatisticError,
    VertexError,
)
from .oracle import (
    ContainerCheck,
    DistanceTable,
    GraphModel,
    ReachabilityReport,
    bfs_distances,
    count_geodesics,
    diameter,
    enumerate_geodesics,
    exact_k_reachable,
    menger_disjoint_count,
    sample_vertex_pairs,
    verify_container,
)
from .routing import (
    HeaderSplit,
    distance,
    header_split,
    is_remote,
    next_hop_distance_check,
    reach_walk,
    remote_distance_witness,
    remote_vertex_example,
    restricted_route,
    shortest_path,
)
from .topology import (
    NetworkParams,
    Vertex,
    arc_count,
    arc_op,
    arcs_from,
    compose,
    dead_angle,
    in_neighbors,
    invert_sigma,
    is_arc,
    iter_vertices,
    normalizing_sigma,
    origin_in_neighbor,
    out_neighbors,
    relabel,
    rotate,
    shift,
    standard_origin,
    vertex_count,
    vertex_from_text,
    vertex_to_text,
)

__version__ = "0.1.0"

__all__ = [
    "CharTriple",
    "Container",
    "ContainerCheck",
    "ContainerLeg",
    "CyclePrefixError",
    "DistanceTable",
    "DomainError",
    "GraphModel",
    "HeaderSplit",
    "InstanceTooLargeError",
    "NetworkParams",
    "ParameterError",
    "ReachabilityReport",
    "SameVertexError",
    "UndefinedStatisticError",
    "Vertex",
    "VertexError",
    "WitnessReport",
    "arc_count",
    "arc_op",
    "arcs_from",
    "bfs_distances",
    "build_container",
    "char_triple",
    "compose",
    "count_geodesics",
    "dead_angle",
    "diameter",
    "distance",
    "enumerate_geodesics",
    "exact_k_reachable",
    "first_out_of_band",
    "header_split",
    "in_neighbors",
    "invert_sigma",
    "is_arc",
    "is_remote",
    "iter_vertices",
    "leg_distance",
    "lower_bound_witness",
    "match_in_neighbor",
    "menger_disjoint_count",
    "next_hop_distance_check",
    "normalizing_sigma",
    "origin_in_neighbor",
    "out_neighbors",
    "reach_walk",
    "relabel",
    "remote_distance_witness",
    "remote_vertex_example",
    "restricted_route",
    "rotate",
    "sample_vertex_pairs",
    "shift",
    "shortest_path",
    "smallest_free_symbol",
    "standard_origin",
    "vertex_count",
    "vertex_from_text",
    "vertex_to_text",
    "verify_container",
]
