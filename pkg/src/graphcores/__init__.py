"""k-core, triangle k-core and vertex triangle k-core decompositions with comparison tooling."""

__version__ = "0.1.0"

from .decompositions import (
    DEGREE,
    KCORE,
    METHODS,
    TRIANGLES,
    TRICORE,
    VTRICORE,
    CoreAssignment,
    EdgeLevelAssignment,
    PropertyFunction,
    decompose,
    k_core_decompose,
    oracle_core_numbers,
    oracle_edge_levels,
    p_core_decompose,
    triangle_core_decompose,
    truss_edges,
    vertex_triangle_core_decompose,
)
from .graph import (
    Graph,
    MissingEdgeError,
    SnapParseError,
    from_edge_list,
    induced_subgraph,
    is_clique,
    parse_snap,
    triangles_through_edge,
    triangles_through_vertex,
)

__all__ = [
    "CoreAssignment",
    "DEGREE",
    "EdgeLevelAssignment",
    "Graph",
    "KCORE",
    "METHODS",
    "MissingEdgeError",
    "PropertyFunction",
    "SnapParseError",
    "TRIANGLES",
    "TRICORE",
    "VTRICORE",
    "decompose",
    "from_edge_list",
    "induced_subgraph",
    "is_clique",
    "k_core_decompose",
    "oracle_core_numbers",
    "oracle_edge_levels",
    "p_core_decompose",
    "parse_snap",
    "triangle_core_decompose",
    "triangles_through_edge",
    "triangles_through_vertex",
    "truss_edges",
    "vertex_triangle_core_decompose",
]
