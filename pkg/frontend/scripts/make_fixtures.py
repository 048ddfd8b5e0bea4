#!/usr/bin/env python3
"""Regenerate the JSON fixtures the frontend unit tests run against.

Everything is produced by the backend library itself so the tests pin the
exact documents the viewer will meet in production. Deterministic; rerun
whenever the document schema changes.
"""

import json
import os

import numpy as np

from graphterrain import (
    EdgeScalarGraph,
    ScalarGraph,
    build_edge_scalar_tree,
    build_mesh,
    build_vertex_scalar_tree,
    cut_at_alpha,
    layout_2d,
    mesh_to_document,
    postprocess_super_tree,
    tree_to_document,
)
from graphterrain.session import Session
from graphterrain.terrain import color_classes

OUT = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))),
                   "tests", "fixtures")


def dump(name, doc):
    with open(os.path.join(OUT, name), "w") as fh:
        json.dump(doc, fh, sort_keys=True, indent=1)
        fh.write("\n")
    print("wrote", name)


def fields_doc(tree, fields):
    out = []
    for name, values in fields.items():
        node_values, classes, quartiles, _ = color_classes(tree, values)
        n = tree.node_count
        out.append({
            "name": name,
            "quartiles": list(quartiles),
            "node_values": [node_values[i] for i in range(n)],
            "node_classes": [classes[i] for i in range(n)],
        })
    return {"fields": out, "kind": tree.kind, "scalar_source": "fixture"}


def cuts_doc(tree, alphas):
    cuts = []
    for alpha in alphas:
        comps = [{
            "node": c.root,
            "alpha": float(tree.scalars[c.root]),
            "size": len(c.members),
            "members": [int(m) for m in c.members],
        } for c in cut_at_alpha(tree, alpha).components]
        cuts.append({"alpha": float(alpha), "components": comps})
    return {"cuts": cuts}


def main():
    os.makedirs(OUT, exist_ok=True)

    # two plateaus joined through a saddle, a tail below (9 vertices)
    edges = [(0, 1), (1, 2), (2, 4), (4, 0), (3, 5), (6, 4), (6, 5),
             (7, 6), (8, 7)]
    values = [5.0, 4.0, 3.0, 4.0, 3.0, 3.0, 2.0, 1.5, 1.0]
    g = ScalarGraph.from_edges(edges, num_vertices=9, vertex_scalar=values)
    tree = postprocess_super_tree(build_vertex_scalar_tree(g))
    mesh = build_mesh(tree, layout_2d(tree))
    dump("tree_nested.json", tree_to_document(tree))
    dump("mesh_nested.json", mesh_to_document(mesh))
    dump("fields_nested.json", fields_doc(tree, {
        "self": None,
        "degree": g.degrees.astype(float),
    }))
    dump("cuts_nested.json", cuts_doc(tree, [5.0, 4.0, 3.0, 2.5, 2.0, 1.0, 0.0]))

    # single node
    g1 = ScalarGraph.from_edges([], num_vertices=1, vertex_scalar=[4.5])
    t1 = postprocess_super_tree(build_vertex_scalar_tree(g1))
    dump("tree_single.json", tree_to_document(t1))
    dump("mesh_single.json", mesh_to_document(build_mesh(t1)))

    # a forest (two components) exercising the synthetic root
    g2 = ScalarGraph.from_edges([(0, 1), (2, 3)], num_vertices=4,
                                vertex_scalar=[1.0, 2.0, 1.0, 3.0])
    t2 = postprocess_super_tree(build_vertex_scalar_tree(g2))
    dump("tree_forest.json", tree_to_document(t2))
    dump("mesh_forest.json", mesh_to_document(build_mesh(t2)))

    # edge-kind documents (triangle plus a pendant edge)
    ge = ScalarGraph.from_edges([(0, 1), (0, 2), (1, 2), (2, 3)])
    eg = EdgeScalarGraph(ge, [3.0, 2.0, 2.0, 1.0])
    te = postprocess_super_tree(build_edge_scalar_tree(eg))
    dump("tree_edge.json", tree_to_document(te))
    dump("mesh_edge.json", mesh_to_document(build_mesh(te)))


if __name__ == "__main__":
    main()
