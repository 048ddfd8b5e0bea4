#!/usr/bin/env python3
"""Scalar trees from scratch.

A scalar graph is a graph with one number per vertex. Its scalar tree is a
rooted forest in which cutting at any height alpha yields exactly the
maximal connected components whose vertices all carry values >= alpha.
This script builds one by hand and walks through its queries.
"""

import numpy as np

from graphterrain import (
    ScalarGraph,
    build_vertex_scalar_tree,
    cut_at_alpha,
    mcc_of,
    postprocess_super_tree,
    subtree_members,
)

# Two tight groups joined through a lower-valued middleman, with a tail.
#
#   values:  5   4   3        4   3
#            0 - 1 - 2        3 - 5
#             \_____ 4 _______/
#                    |
#                    6 (2.0) - 7 (1.5) - 8 (1.0)
edges = [(0, 1), (1, 2), (2, 4), (4, 0), (3, 5), (6, 4), (6, 5), (7, 6), (8, 7)]
values = [5.0, 4.0, 3.0, 4.0, 3.0, 3.0, 2.0, 1.5, 1.0]
graph = ScalarGraph.from_edges(edges, num_vertices=9, vertex_scalar=values)

tree = postprocess_super_tree(build_vertex_scalar_tree(graph))
print(f"graph: {graph.vertex_count} vertices, {graph.edge_count} edges")
print(f"super tree: {tree.node_count} nodes, root = node {int(tree.roots[0])}")
print()

print("cut heights sweep from the peaks down to the valley floor:")
for alpha in (4.5, 3.0, 2.5, 2.0, 1.0):
    cut = cut_at_alpha(tree, alpha)
    sets = sorted(sorted(map(int, c.members)) for c in cut.components)
    print(f"  alpha={alpha:>3}: {len(cut.components)} component(s) {sets}")
print()

print("every vertex knows the component it is the floor of:")
for v in (0, 6, 8):
    comp = mcc_of(tree, v)
    print(f"  vertex {v} (value {values[v]}): members "
          f"{sorted(map(int, comp.members))}")
print()

root = int(tree.roots[0])
print(f"subtree under the root covers everything: "
      f"{sorted(map(int, subtree_members(tree, root)))}")
