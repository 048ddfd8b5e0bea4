"""Neighborhood correlation of two vertex fields.

For every vertex the two fields are correlated over its k-hop neighborhood
(the vertex itself included): population covariance over the neighborhood
divided by the product of the population standard deviations. The graph-
wide mean of these local indexes is the global index; negating the local
index gives an outlier score that flags neighborhoods bucking the overall
trend.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graph import ScalarGraph, neighborhood


@dataclass(frozen=True)
class CorrelationField:
    """Per-vertex local correlation plus the global summary."""

    field_a: str
    field_b: str
    hops: int
    lci: np.ndarray
    zero_variance_count: int

    @property
    def gci(self):
        return gci(self.lci)

    @property
    def outlier(self):
        return outlier_scores(self.lci)


def lci(graph: ScalarGraph, field_a, field_b, hops=1) -> CorrelationField:
    """Local correlation index of two fields on every vertex's k-hop ball.

    Neighborhoods with zero variance in either field get index 0 (neutral);
    how many were hit is reported on the result. Both fields must cover all
    vertices. Division uses population (1/|N|) covariance.
    """
    a, name_a = _field_values(graph, field_a)
    b, name_b = _field_values(graph, field_b)
    if hops < 1:
        raise ValueError("hops must be >= 1")
    n = graph.vertex_count
    if len(a) != n or len(b) != n:
        raise ValueError("fields must cover every vertex")

    # center globally: exact for covariance, kills most cancellation
    a = a - (a.mean() if n else 0.0)
    b = b - (b.mean() if n else 0.0)

    out = np.zeros(n, dtype=np.float64)
    zero_var = 0
    if hops == 1:
        indptr, indices = graph.indptr, graph.indices
        for v in range(n):
            ids = np.append(indices[indptr[v]:indptr[v + 1]], v)
            z, ok = _pearson(a[ids], b[ids])
            out[v] = z
            zero_var += not ok
    else:
        for v in range(n):
            ids = np.fromiter(neighborhood(graph, v, hops).members, dtype=np.int64)
            z, ok = _pearson(a[ids], b[ids])
            out[v] = z
            zero_var += not ok
    return CorrelationField(name_a, name_b, hops, out, zero_var)


def gci(lci_values) -> float:
    """Mean local index over all vertices."""
    values = np.asarray(lci_values, dtype=np.float64)
    if len(values) == 0:
        raise ValueError("gci of an empty graph is undefined")
    return float(values.mean())


def outlier_scores(lci_values) -> np.ndarray:
    """Pointwise negation: high score = locally anti-correlated."""
    return -np.asarray(lci_values, dtype=np.float64)


def _pearson(xa, xb):
    """Population Pearson over one neighborhood; (0, False) on zero variance."""
    k = len(xa)
    ma = xa.mean()
    mb = xb.mean()
    da = xa - ma
    db = xb - mb
    var_a = float(da @ da) / k
    var_b = float(db @ db) / k
    if var_a <= 0.0 or var_b <= 0.0:
        return 0.0, False
    cov = float(da @ db) / k
    return cov / np.sqrt(var_a * var_b), True


def _field_values(graph, f):
    if hasattr(f, "values"):
        return np.asarray(f.values, dtype=np.float64), getattr(f, "name", "field")
    return np.asarray(f, dtype=np.float64), "field"
