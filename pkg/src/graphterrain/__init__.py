"""graphterrain: scalar trees and terrain meshes for measured graphs.

Pipeline: load a graph and a per-vertex or per-edge measure, build the
scalar tree whose subtrees are the maximal alpha-connected components,
merge equal-value chains into super nodes, then lay the tree out as a 3D
terrain whose peaks are dense regions (K-cores, K-trusses, communities)
and whose cross sections answer "what holds together at level alpha".
"""

from .correlation import CorrelationField, gci, lci, outlier_scores
from .errors import (
    CapExceededError,
    CoverageError,
    DuplicateDefinitionError,
    EmptyGraphError,
    GraphTerrainError,
    ParseError,
    UnknownIdError,
)
from .graph import (
    EdgeScalarGraph,
    Neighborhood,
    ScalarGraph,
    load_edge_list,
    load_edge_scalars,
    load_vertex_scalars,
    neighborhood,
    write_edge_list,
    write_edge_scalars,
    write_vertex_scalars,
)
from .measures import (
    EdgeField,
    VertexField,
    betweenness_field,
    degree_field,
    kcore_field,
    ktruss_field,
)
from .oracle import (
    ComponentSetReport,
    build_edge_tree_naive_dual,
    enumerate_edge_components_bruteforce,
    enumerate_maximal_components_bruteforce,
)
from .terrain import (
    Layout,
    Peak,
    TerrainMesh,
    build_mesh,
    export_obj,
    force_layout_2d,
    layout_2d,
    mesh_to_document,
    peaks_at,
    pick,
    save_mesh,
)
from .tree import (
    Cut,
    CutComponent,
    ScalarTree,
    build_edge_scalar_tree,
    build_vertex_scalar_tree,
    cut_at_alpha,
    load_tree,
    mcc_of,
    postprocess_super_tree,
    save_tree,
    simplify,
    subtree_members,
    tree_from_document,
    tree_to_document,
)

__version__ = "0.1.0"
