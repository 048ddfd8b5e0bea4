"""Brute-force reference implementations.

These are deliberately naive: they re-derive maximal alpha-(edge-)connected
components straight from the definition so the tree-based query path can be
checked against something that shares none of its code. They ship with the
package (not only the tests) so the acceptance suite can be re-run against
user data. Not built for speed; hard size caps guard against misuse.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import CapExceededError
from .graph import EdgeScalarGraph, ScalarGraph

VERTEX_CAP = 10_000
DUAL_EDGE_CAP = 50_000_000


@dataclass(frozen=True)
class ComponentSetReport:
    """Canonicalized family of component member sets at one alpha."""

    alpha: float
    components: frozenset  # frozenset of frozensets of ids


def enumerate_maximal_components_bruteforce(graph: ScalarGraph, alpha):
    """All maximal alpha-connected components, from the definition.

    Keep the vertices with scalar >= alpha, take the induced subgraph,
    return its connected components as canonical id sets.
    """
    if graph.vertex_count > VERTEX_CAP:
        raise CapExceededError(
            f"oracle capped at {VERTEX_CAP} vertices, got {graph.vertex_count}")
    alive = graph.vertex_scalar >= alpha
    seen = np.zeros(graph.vertex_count, dtype=bool)
    components = []
    for start in range(graph.vertex_count):
        if not alive[start] or seen[start]:
            continue
        comp = []
        stack = [start]
        seen[start] = True
        while stack:
            u = stack.pop()
            comp.append(u)
            for w in graph.neighbors(u):
                w = int(w)
                if alive[w] and not seen[w]:
                    seen[w] = True
                    stack.append(w)
        components.append(frozenset(comp))
    return ComponentSetReport(alpha=float(alpha), components=frozenset(components))


def enumerate_edge_components_bruteforce(egraph: EdgeScalarGraph, alpha):
    """All maximal alpha-edge-connected components (edges with scalar >=
    alpha, adjacency = shared endpoint), as canonical edge-id sets."""
    if egraph.vertex_count > VERTEX_CAP:
        raise CapExceededError(
            f"oracle capped at {VERTEX_CAP} vertices, got {egraph.vertex_count}")
    alive = egraph.edge_scalar >= alpha
    seen = np.zeros(egraph.edge_count, dtype=bool)
    components = []
    for start in range(egraph.edge_count):
        if not alive[start] or seen[start]:
            continue
        comp = []
        stack = [start]
        seen[start] = True
        while stack:
            e = stack.pop()
            comp.append(e)
            for v in egraph.edges[e]:
                for f in egraph.incident_edges(int(v)):
                    f = int(f)
                    if alive[f] and not seen[f]:
                        seen[f] = True
                        stack.append(f)
        components.append(frozenset(comp))
    return ComponentSetReport(alpha=float(alpha), components=frozenset(components))


def build_edge_tree_naive_dual(egraph: EdgeScalarGraph):
    """Edge scalar tree via the dual-graph detour.

    Every edge becomes a dual vertex; two dual vertices are adjacent when
    the edges share an endpoint. The dual graph then goes through the plain
    vertex-tree sweep. Dual edge count is sum(degree^2)-ish, so a memory
    cap applies.
    """
    from .tree import build_vertex_scalar_tree  # local import avoids a cycle

    degrees = np.diff(egraph.edge_indptr)
    dual_edge_bound = int(np.sum(degrees * (degrees - 1)) // 2)
    if dual_edge_bound > DUAL_EDGE_CAP:
        raise CapExceededError(
            f"dual graph needs ~{dual_edge_bound} edges, cap is {DUAL_EDGE_CAP}")
    pairs = []
    for v in range(egraph.vertex_count):
        inc = egraph.incident_edges(v)
        for i in range(len(inc)):
            for j in range(i + 1, len(inc)):
                pairs.append((int(inc[i]), int(inc[j])))
    dual = ScalarGraph.from_edges(
        np.asarray(pairs, dtype=np.int64).reshape(-1, 2),
        num_vertices=egraph.edge_count,
        vertex_scalar=egraph.edge_scalar,
    )
    tree = build_vertex_scalar_tree(dual)
    tree.kind = "edge"
    return tree
