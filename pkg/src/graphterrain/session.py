"""One loaded-and-built analysis state shared by the CLI and the service.

A session is an immutable snapshot: graph, scalar source, postprocessed
(and optionally simplified) tree, terrain mesh, and the coloring fields the
viewer may switch between. Construction time for the tree is measured
separately from I/O and measure computation.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

import numpy as np

from .graph import (
    EdgeScalarGraph,
    ScalarGraph,
    load_edge_list,
    load_edge_scalars,
    load_vertex_scalars,
)
from .measures import (
    betweenness_field,
    degree_field,
    kcore_field,
    ktruss_field,
)
from .terrain import build_mesh, color_classes, layout_2d
from .tree import (
    build_edge_scalar_tree,
    build_vertex_scalar_tree,
    postprocess_super_tree,
    simplify,
)

VERTEX_SCALAR_SOURCES = ("kcore", "degree", "betweenness")
EDGE_SCALAR_SOURCES = ("ktruss",)


@dataclass
class Session:
    graph: ScalarGraph
    kind: str
    scalar_source: str
    tree: object
    mesh: object
    egraph: EdgeScalarGraph | None
    construction_seconds: float
    color_fields: dict = field(default_factory=dict)

    # -- id translation -------------------------------------------------

    def members_to_original(self, members):
        """Internal member ids -> reportable ids (original vertex ids, or
        [u, v] original endpoint pairs for edge trees)."""
        if self.kind == "vertex":
            orig = self.graph.original_ids
            return [int(orig[m]) for m in members]
        endpoints = self.tree.edge_endpoints
        return [[int(endpoints[m][0]), int(endpoints[m][1])] for m in members]

    def fields_metadata(self):
        out = []
        for name, values in self.color_fields.items():
            node_values, classes, quartiles, _ = color_classes(
                self.tree, None if values is None else values)
            n = self.tree.node_count
            out.append({
                "name": name,
                "quartiles": list(quartiles),
                "node_values": [node_values[i] for i in range(n)],
                "node_classes": [classes[i] for i in range(n)],
            })
        return out


def resolve_vertex_source(graph: ScalarGraph, spec: str):
    """Scalar source spec -> (VertexField-like, name). Specs: kcore,
    degree, betweenness, file:PATH."""
    if spec == "kcore":
        return kcore_field(graph)
    if spec == "degree":
        return degree_field(graph)
    if spec == "betweenness":
        return betweenness_field(graph)
    if spec.startswith("file:"):
        loaded = load_vertex_scalars(spec[5:], graph)
        return _Named(spec[5:], loaded.vertex_scalar)
    raise ValueError(f"unknown vertex scalar source {spec!r}; expected one of "
                     f"{VERTEX_SCALAR_SOURCES} or file:PATH")


def resolve_edge_source(graph: ScalarGraph, spec: str):
    if spec == "ktruss":
        return ktruss_field(graph)
    if spec.startswith("file:"):
        loaded = load_edge_scalars(spec[5:], graph)
        return _Named(spec[5:], loaded.edge_scalar)
    raise ValueError(f"unknown edge scalar source {spec!r}; expected "
                     f"{EDGE_SCALAR_SOURCES} or file:PATH")


class _Named:
    def __init__(self, name, values):
        self.name = name
        self.values = values


def build_session(graph_path, scalar_spec, kind, bins=None,
                  color_by=None) -> Session:
    """Load, measure, build the super tree and mesh; time the tree part."""
    graph = load_edge_list(graph_path)
    egraph = None
    if kind == "vertex":
        source = resolve_vertex_source(graph, scalar_spec)
        sgraph = graph.with_scalars(source.values)
        t0 = time.perf_counter()
        tree = postprocess_super_tree(build_vertex_scalar_tree(sgraph))
        if bins is not None:
            tree = simplify(tree, bins)
        elapsed = time.perf_counter() - t0
        graph = sgraph
    elif kind == "edge":
        source = resolve_edge_source(graph, scalar_spec)
        egraph = EdgeScalarGraph(graph, source.values)
        t0 = time.perf_counter()
        tree = postprocess_super_tree(build_edge_scalar_tree(egraph))
        if bins is not None:
            tree = simplify(tree, bins)
        elapsed = time.perf_counter() - t0
    else:
        raise ValueError(f"kind must be 'vertex' or 'edge', got {kind!r}")

    color_values = _resolve_color(graph, tree, kind, color_by)
    mesh = build_mesh(tree, layout_2d(tree), color_values)

    session = Session(graph=graph, kind=kind, scalar_source=source.name,
                      tree=tree, mesh=mesh, egraph=egraph,
                      construction_seconds=elapsed)
    session.color_fields["self"] = None
    if color_values is not None:
        session.color_fields[getattr(color_values, "name", "color")] = color_values
    if kind == "vertex":
        if scalar_spec != "degree":
            session.color_fields.setdefault("degree", degree_field(graph))
        if scalar_spec != "kcore":
            session.color_fields.setdefault("kcore", kcore_field(graph))
    return session


def _resolve_color(graph, tree, kind, color_by):
    if color_by in (None, "self"):
        return None
    if color_by.startswith("file:"):
        if kind == "vertex":
            return _Named(color_by[5:],
                          load_vertex_scalars(color_by[5:], graph).vertex_scalar)
        return _Named(color_by[5:],
                      load_edge_scalars(color_by[5:], graph).edge_scalar)
    if kind == "vertex":
        return resolve_vertex_source(graph, color_by)
    return resolve_edge_source(graph, color_by)
