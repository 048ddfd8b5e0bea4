"""Shared generators, fixture graphs, and independent reference code.

The reference implementations here (subset-enumeration coreness/trussness,
all-pairs betweenness counting, scalar correlation formulas) deliberately
share no code with the library paths they check.
"""

import math

import numpy as np
import pytest

from graphterrain import EdgeScalarGraph, ScalarGraph


# ----------------------------------------------------------------------
# random generators (seeded by the caller)


def random_scalar_graph(rng, max_vertices=200, tie_prone=None):
    """Random simple graph with scalars; ties are deliberately common."""
    n = int(rng.integers(2, max_vertices + 1))
    style = rng.integers(0, 3)
    if style == 0:
        p = min(1.0, 1.5 / n)
    elif style == 1:
        p = min(1.0, 4.0 / n)
    else:
        p = 0.3
    mask = rng.random((n, n)) < p
    iu = np.triu_indices(n, k=1)
    edges = np.column_stack([iu[0][mask[iu]], iu[1][mask[iu]]])
    if tie_prone is None:
        tie_prone = bool(rng.integers(0, 2))
    if tie_prone:
        pool = int(rng.integers(2, 8))
        scalars = rng.integers(0, pool, size=n).astype(float)
    else:
        scalars = rng.random(n)
    return ScalarGraph.from_edges(edges, num_vertices=n, vertex_scalar=scalars)


def random_edge_scalar_graph(rng, max_edges=400):
    """Random simple graph with edge scalars, at most ``max_edges`` edges."""
    n = int(rng.integers(2, 29))
    p = float(rng.choice([0.1, 0.3, 0.7]))
    mask = rng.random((n, n)) < p
    iu = np.triu_indices(n, k=1)
    edges = np.column_stack([iu[0][mask[iu]], iu[1][mask[iu]]])[:max_edges]
    graph = ScalarGraph.from_edges(edges, num_vertices=n)
    m = graph.edge_count
    if bool(rng.integers(0, 2)):
        pool = int(rng.integers(2, 8))
        scalars = rng.integers(0, pool, size=m).astype(float)
    else:
        scalars = rng.random(m)
    return EdgeScalarGraph(graph, scalars)


# ----------------------------------------------------------------------
# fixed anchor graphs


def nested_components_graph():
    """Nine vertices, two high plateaus joined through a lower saddle.

    Cutting at 2.5 gives exactly {0,1,2,4} and {3,5}; cutting at 2 joins
    them through vertex 6 into {0..6}; vertices 7 and 8 hang below.
    """
    edges = [(0, 1), (1, 2), (2, 4), (4, 0), (3, 5), (6, 4), (6, 5),
             (7, 6), (8, 7)]
    scalars = [5.0, 4.0, 3.0, 4.0, 3.0, 3.0, 2.0, 1.5, 1.0]
    return ScalarGraph.from_edges(edges, num_vertices=9, vertex_scalar=scalars)


def tied_chain_graph():
    """Five vertices where three tied-scalar nodes chain up during the
    sweep and must merge into one super node."""
    edges = [(0, 2), (2, 3), (3, 4), (4, 1)]
    scalars = [2.0, 2.0, 1.0, 1.0, 1.0]
    return ScalarGraph.from_edges(edges, num_vertices=5, vertex_scalar=scalars)


def path_graph(scalars):
    n = len(scalars)
    return ScalarGraph.from_edges([(i, i + 1) for i in range(n - 1)],
                                  num_vertices=n, vertex_scalar=list(scalars))


def triangle_edge_graph(scalars=(3.0, 2.0, 1.0)):
    g = ScalarGraph.from_edges([(0, 1), (0, 2), (1, 2)], num_vertices=3)
    return EdgeScalarGraph(g, list(scalars))


# ----------------------------------------------------------------------
# independent references


def kcore_bruteforce(graph):
    """Max over all vertex subsets containing v of the subset's minimum
    internal degree. Exponential; keep graphs small."""
    n = graph.vertex_count
    assert n <= 14, "subset enumeration blows up"
    adj = [set(map(int, graph.neighbors(v))) for v in range(n)]
    best = [0] * n
    for mask in range(1, 1 << n):
        subset = [v for v in range(n) if mask >> v & 1]
        sset = set(subset)
        mindeg = min(len(adj[v] & sset) for v in subset)
        for v in subset:
            if mindeg > best[v]:
                best[v] = mindeg
    return best


def ktruss_bruteforce(egraph):
    """Max over all edge subsets containing e of the subset's minimum
    per-edge triangle count."""
    m = egraph.edge_count
    assert m <= 14, "subset enumeration blows up"
    edges = [tuple(map(int, e)) for e in egraph.edges]
    best = [0] * m
    for mask in range(1, 1 << m):
        chosen = [i for i in range(m) if mask >> i & 1]
        present = set(edges[i] for i in chosen)

        def tri_count(u, v):
            return sum(1 for w in range(egraph.vertex_count)
                       if w not in (u, v)
                       and (min(u, w), max(u, w)) in present
                       and (min(v, w), max(v, w)) in present)

        mintri = min(tri_count(*edges[i]) for i in chosen)
        for i in chosen:
            if mintri > best[i]:
                best[i] = mintri
    return best


def betweenness_bruteforce(graph):
    """Pair-by-pair shortest-path counting (no dependency accumulation)."""
    n = graph.vertex_count
    dist = []
    sigma = []
    for s in range(n):
        d = [-1] * n
        sg = [0] * n
        d[s] = 0
        sg[s] = 1
        frontier = [s]
        while frontier:
            nxt = []
            for v in frontier:
                for w in map(int, graph.neighbors(v)):
                    if d[w] < 0:
                        d[w] = d[v] + 1
                        nxt.append(w)
            for v in nxt:
                for w in map(int, graph.neighbors(v)):
                    if d[w] == d[v] - 1:
                        sg[v] += sg[w]
            frontier = nxt
        dist.append(d)
        sigma.append(sg)
    bc = [0.0] * n
    for s in range(n):
        for t in range(s + 1, n):
            if dist[s][t] < 0 or sigma[s][t] == 0:
                continue
            for v in range(n):
                if v in (s, t) or dist[s][v] < 0 or dist[t][v] < 0:
                    continue
                if dist[s][v] + dist[t][v] == dist[s][t]:
                    bc[v] += sigma[s][v] * sigma[t][v] / sigma[s][t]
    return bc


def lci_reference(graph, a, b, hops=1):
    """Direct evaluation of the neighborhood correlation formulas with
    fsum accumulation; returns (values, zero_variance_count)."""
    n = graph.vertex_count
    out = [0.0] * n
    zero = 0
    for v in range(n):
        members = {v}
        frontier = {v}
        for _ in range(hops):
            nxt = set()
            for u in frontier:
                nxt.update(int(w) for w in graph.neighbors(u))
            frontier = nxt - members
            members |= nxt
        ids = sorted(members)
        k = len(ids)
        xa = [float(a[i]) for i in ids]
        xb = [float(b[i]) for i in ids]
        mean_a = math.fsum(xa) / k
        mean_b = math.fsum(xb) / k
        cov_ab = math.fsum((x - mean_a) * (y - mean_b) for x, y in zip(xa, xb)) / k
        cov_aa = math.fsum((x - mean_a) ** 2 for x in xa) / k
        cov_bb = math.fsum((y - mean_b) ** 2 for y in xb) / k
        if cov_aa <= 0 or cov_bb <= 0:
            zero += 1
            out[v] = 0.0
        else:
            out[v] = cov_ab / (math.sqrt(cov_aa) * math.sqrt(cov_bb))
    return out, zero


@pytest.fixture
def rng():
    return np.random.default_rng(20240817)
