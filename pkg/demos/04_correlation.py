#!/usr/bin/env python3
"""Comparing two measures on one graph.

The local correlation index correlates two vertex fields over every
vertex's neighborhood; the global index is their graph-wide mean. Negating
the local index yields an outlier score: vertices whose neighborhoods buck
the global trend. Those scores can seed a terrain of their own.
"""

import numpy as np

from graphterrain import (
    ScalarGraph,
    betweenness_field,
    build_vertex_scalar_tree,
    cut_at_alpha,
    degree_field,
    kcore_field,
    lci,
    outlier_scores,
    postprocess_super_tree,
)

rng = np.random.default_rng(5)

# two cliques joined by one long path: the path's middle vertices have high
# betweenness but low degree, the classic locally anti-correlated pattern
cliques = [(i, j) for i in range(6) for j in range(i + 1, 6)]
cliques += [(6 + i, 6 + j) for i in range(6) for j in range(i + 1, 6)]
path = [(5, 12), (12, 13), (13, 14), (14, 6)]
graph = ScalarGraph.from_edges(cliques + path, num_vertices=15)

deg = degree_field(graph)
btw = betweenness_field(graph)
result = lci(graph, deg, btw)
print(f"global correlation of degree vs betweenness: {result.gci:+.3f}")
if result.zero_variance_count:
    print(f"({result.zero_variance_count} flat neighborhoods scored 0)")
print()

scores = outlier_scores(result.lci)
order = np.argsort(-scores)
print("most locally anti-correlated vertices:")
for v in order[:3]:
    print(f"  vertex {v}: outlier score {scores[v]:+.3f}, degree "
          f"{int(deg.values[v])}, betweenness {btw.values[v]:.1f}")
print()

# outlier score as a scalar field: the bridge shows up as the highest peak
otree = postprocess_super_tree(
    build_vertex_scalar_tree(graph.with_scalars(scores)))
top = cut_at_alpha(otree, float(np.max(scores)))
print("peak of the outlier terrain:",
      [sorted(map(int, c.members)) for c in top.components])

coreness = kcore_field(graph)
both = lci(graph, deg, coreness)
print(f"\nfor contrast, degree vs coreness leans positive here: "
      f"{both.gci:+.3f}")
