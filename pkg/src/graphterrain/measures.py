"""Built-in scalar fields: degree, coreness, trussness, betweenness.

All measures are pure functions of an immutable graph and return the same
values on every run. Coreness and trussness use iterative min-peeling;
betweenness uses exact shortest-path dependency accumulation and is capped
to keep the quadratic cost honest.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

import numpy as np

from .errors import CapExceededError
from .graph import EdgeScalarGraph, ScalarGraph

BETWEENNESS_VERTEX_CAP = 100_000


@dataclass(frozen=True)
class VertexField:
    name: str
    values: np.ndarray


@dataclass(frozen=True)
class EdgeField:
    name: str
    values: np.ndarray


def degree_field(graph: ScalarGraph) -> VertexField:
    return VertexField("degree", graph.degrees.astype(np.float64))


def kcore_field(graph: ScalarGraph) -> VertexField:
    """Coreness of every vertex: the largest K such that the vertex sits in
    a subgraph of minimum internal degree K.

    Bucket peeling: repeatedly remove a vertex of minimum remaining degree;
    its degree at removal (made monotone) is its coreness. Ties resolve by
    ascending vertex id, though the output is order-independent.
    """
    n = graph.vertex_count
    deg = graph.degrees.astype(np.int64).copy()
    core = np.zeros(n, dtype=np.int64)
    if n == 0:
        return VertexField("kcore", core.astype(np.float64))

    max_deg = int(deg.max()) if n else 0
    buckets = [[] for _ in range(max_deg + 1)]
    for v in range(n):
        buckets[deg[v]].append(v)
    removed = np.zeros(n, dtype=bool)
    cur = 0
    indptr = graph.indptr
    indices = graph.indices
    processed = 0
    while processed < n:
        while cur <= max_deg and not buckets[cur]:
            cur += 1
        bucket = buckets[cur]
        v = min(bucket) if len(bucket) > 1 else bucket[0]
        bucket.remove(v)
        if removed[v]:
            continue  # stale entry from an earlier degree level
        removed[v] = True
        processed += 1
        core[v] = cur
        for w in indices[indptr[v]:indptr[v + 1]]:
            w = int(w)
            if not removed[w] and deg[w] > cur:
                deg[w] -= 1
                buckets[deg[w]].append(w)
    return VertexField("kcore", core.astype(np.float64))


def ktruss_field(graph: ScalarGraph) -> EdgeField:
    """Trussness of every edge: the largest K such that the edge sits in a
    subgraph where every edge closes at least K triangles.

    Triangle support per edge, then min-support peeling with the usual
    clamp (a surviving edge's support never drops below the support level
    being peeled), mirroring the coreness computation on the triangle
    structure. An edge in no triangle has trussness 0.
    """
    skeleton = EdgeScalarGraph(graph)
    edges = skeleton.edges
    m = len(edges)
    truss = np.zeros(m, dtype=np.int64)
    if m == 0:
        return EdgeField("ktruss", truss.astype(np.float64))

    neighbor_sets = [set(map(int, graph.neighbors(v)))
                     for v in range(graph.vertex_count)]
    support = np.zeros(m, dtype=np.int64)
    tri_partners = []
    for e, (u, v) in enumerate(edges):
        common = neighbor_sets[int(u)] & neighbor_sets[int(v)]
        support[e] = len(common)
        tri_partners.append(sorted(common))

    edge_of = {(int(a), int(b)): i for i, (a, b) in enumerate(edges)}

    def eid(a, b):
        return edge_of[(a, b) if a < b else (b, a)]

    alive = np.ones(m, dtype=bool)
    max_sup = int(support.max())
    buckets = [[] for _ in range(max_sup + 1)]
    for e in range(m):
        buckets[support[e]].append(e)
    cur = 0
    processed = 0
    while processed < m:
        while cur <= max_sup and not buckets[cur]:
            cur += 1
        bucket = buckets[cur]
        e = min(bucket) if len(bucket) > 1 else bucket[0]
        bucket.remove(e)
        if not alive[e] or support[e] != cur:
            continue  # stale entry; the edge moved to a lower bucket
        alive[e] = False
        processed += 1
        truss[e] = cur
        u, v = int(edges[e][0]), int(edges[e][1])
        for w in tri_partners[e]:
            e1 = eid(u, w)
            e2 = eid(v, w)
            if alive[e1] and alive[e2]:
                for f in (e1, e2):
                    if support[f] > cur:
                        support[f] -= 1
                        buckets[support[f]].append(f)
    return EdgeField("ktruss", truss.astype(np.float64))


def betweenness_field(graph: ScalarGraph, normalized=False,
                      vertex_cap=BETWEENNESS_VERTEX_CAP) -> VertexField:
    """Exact shortest-path betweenness (undirected, unit weights).

    One BFS per source with pair-dependency accumulation in reverse BFS
    order; sources in ascending id so the floating-point sum order is
    reproducible. Unnormalized values count each unordered pair once.
    ``normalized=True`` divides by (n-1)(n-2)/2.
    """
    n = graph.vertex_count
    if n > vertex_cap:
        raise CapExceededError(
            f"exact betweenness capped at {vertex_cap} vertices "
            f"(got {n}); subsample the graph first")
    bc = np.zeros(n, dtype=np.float64)
    indptr = graph.indptr.tolist()
    indices = graph.indices.tolist()
    for s in range(n):
        stack = []
        pred = [[] for _ in range(n)]
        sigma = [0] * n
        dist = [-1] * n
        sigma[s] = 1
        dist[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            stack.append(v)
            for k in range(indptr[v], indptr[v + 1]):
                w = indices[k]
                if dist[w] < 0:
                    dist[w] = dist[v] + 1
                    queue.append(w)
                if dist[w] == dist[v] + 1:
                    sigma[w] += sigma[v]
                    pred[w].append(v)
        delta = [0.0] * n
        while stack:
            w = stack.pop()
            coeff = (1.0 + delta[w]) / sigma[w]
            for v in pred[w]:
                delta[v] += sigma[v] * coeff
            if w != s:
                bc[w] += delta[w]
    bc /= 2.0  # each unordered pair visited from both endpoints
    if normalized:
        scale = (n - 1) * (n - 2) / 2.0
        if scale > 0:
            bc /= scale
    name = "betweenness_norm" if normalized else "betweenness"
    return VertexField(name, bc)
