"""Graph representation and text-file ingestion.

Two in-memory graph flavours are provided: :class:`ScalarGraph` carries one
real value per vertex, :class:`EdgeScalarGraph` one real value per edge.
Both are immutable after construction and safe for concurrent reads.

File formats (UTF-8, whitespace separated, ``#`` starts a comment line):

* edge list      -- ``u v`` per line, undirected, self-loops dropped,
                    duplicates collapsed, directed inputs symmetrized.
* vertex scalars -- ``u value`` per line, one line per vertex.
* edge scalars   -- ``u v value`` per line, orientation-insensitive.

Vertex ids in files may be sparse or arbitrary; they are compacted to the
dense range ``[0, n)`` and the original ids kept so every output can report
them back.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

import numpy as np

from .errors import (
    CoverageError,
    DuplicateDefinitionError,
    EmptyGraphError,
    ParseError,
    UnknownIdError,
)


@dataclass(frozen=True)
class Neighborhood:
    """BFS ball of radius ``hops`` around ``center`` (center included)."""

    center: int
    hops: int
    members: frozenset


class ScalarGraph:
    """Undirected simple graph with one scalar per vertex.

    Adjacency is stored CSR-style (``indptr``/``indices``) with neighbor
    lists sorted ascending. ``original_ids[i]`` is the id vertex ``i`` had
    in the input file.
    """

    def __init__(self, indptr, indices, original_ids, vertex_scalar=None):
        self.indptr = np.asarray(indptr, dtype=np.int64)
        self.indices = np.asarray(indices, dtype=np.int64)
        self.original_ids = np.asarray(original_ids, dtype=np.int64)
        self.vertex_scalar = (
            None if vertex_scalar is None else np.asarray(vertex_scalar, dtype=np.float64)
        )
        self.vertex_count = len(self.original_ids)
        self._id_of = None

    # -- construction -------------------------------------------------

    @classmethod
    def from_edges(cls, edges, num_vertices=None, vertex_scalar=None):
        """Build from an iterable/array of (u, v) pairs with dense ids.

        Symmetrizes, drops self-loops and duplicate edges.
        """
        arr = np.asarray(list(edges) if not isinstance(edges, np.ndarray) else edges,
                         dtype=np.int64).reshape(-1, 2)
        n = int(num_vertices) if num_vertices is not None else (
            int(arr.max()) + 1 if arr.size else 0)
        edges_uv = _dedupe_undirected(arr)
        indptr, indices = _build_csr(edges_uv, n)
        return cls(indptr, indices, np.arange(n), vertex_scalar)

    # -- queries -------------------------------------------------------

    def neighbors(self, v):
        """Sorted neighbor ids of vertex ``v`` (ndarray view)."""
        return self.indices[self.indptr[v]:self.indptr[v + 1]]

    def degree(self, v):
        return int(self.indptr[v + 1] - self.indptr[v])

    @property
    def degrees(self):
        return np.diff(self.indptr)

    @property
    def edge_count(self):
        return int(len(self.indices) // 2)

    def edge_array(self):
        """All edges as an (m, 2) array with u < v, sorted lexicographically."""
        u = np.repeat(np.arange(self.vertex_count), self.degrees)
        v = self.indices
        keep = u < v
        return np.column_stack([u[keep], v[keep]])

    def compact_id(self, original_id):
        """Map an original file id to the dense internal id."""
        if self._id_of is None:
            self._id_of = {int(o): i for i, o in enumerate(self.original_ids)}
        try:
            return self._id_of[int(original_id)]
        except KeyError:
            raise UnknownIdError(f"unknown vertex id {original_id}") from None

    def has_edge(self, u, v):
        return bool(np.isin(v, self.neighbors(u)).any())

    def with_scalars(self, values):
        """Copy of this graph with ``vertex_scalar`` replaced."""
        values = np.asarray(values, dtype=np.float64)
        if len(values) != self.vertex_count:
            raise CoverageError(
                f"expected {self.vertex_count} scalar values, got {len(values)}")
        if not np.all(np.isfinite(values)):
            raise ValueError("vertex scalars must be finite")
        return ScalarGraph(self.indptr, self.indices, self.original_ids, values)


class EdgeScalarGraph:
    """Undirected simple graph with one scalar per edge.

    Edges are stored once with ``u < v``, sorted lexicographically; the row
    index is the dense edge id. ``edge_indptr``/``edge_indices`` give the
    incident edge ids per vertex (sorted ascending).
    """

    def __init__(self, graph: ScalarGraph, edge_scalar=None):
        self.graph = graph
        self.edges = graph.edge_array()
        self.edge_count = len(self.edges)
        self.edge_scalar = (
            None if edge_scalar is None else np.asarray(edge_scalar, dtype=np.float64)
        )
        self.edge_indptr, self.edge_indices = _incident_edge_csr(
            self.edges, graph.vertex_count)
        self._edge_of = None

    @property
    def vertex_count(self):
        return self.graph.vertex_count

    @property
    def original_ids(self):
        return self.graph.original_ids

    def incident_edges(self, v):
        """Sorted ids of the edges incident on vertex ``v``."""
        return self.edge_indices[self.edge_indptr[v]:self.edge_indptr[v + 1]]

    def edge_id(self, u, v):
        """Dense id of the edge {u, v} (compact vertex ids, any orientation)."""
        if self._edge_of is None:
            self._edge_of = {(int(a), int(b)): i for i, (a, b) in enumerate(self.edges)}
        key = (min(int(u), int(v)), max(int(u), int(v)))
        try:
            return self._edge_of[key]
        except KeyError:
            raise UnknownIdError(f"graph has no edge ({u}, {v})") from None

    def with_scalars(self, values):
        values = np.asarray(values, dtype=np.float64)
        if len(values) != self.edge_count:
            raise CoverageError(
                f"expected {self.edge_count} edge scalars, got {len(values)}")
        if not np.all(np.isfinite(values)):
            raise ValueError("edge scalars must be finite")
        return EdgeScalarGraph(self.graph, values)


# ----------------------------------------------------------------------
# loading


def load_edge_list(path):
    """Read an edge-list file into a :class:`ScalarGraph` skeleton.

    Lines are ``u v`` integer pairs; ``#`` lines are comments. Self-loops
    are dropped, duplicate/reversed edges collapsed, and vertex ids
    compacted (the original ids stay on the graph).
    """
    raw = []
    with open(path, "r", encoding="utf-8") as fh:
        for line_no, line in enumerate(fh, start=1):
            parts = _significant(line)
            if parts is None:
                continue
            if len(parts) != 2:
                raise ParseError(path, line_no,
                                 f"expected 'u v', got {line.strip()!r}")
            try:
                raw.append((int(parts[0]), int(parts[1])))
            except ValueError:
                raise ParseError(path, line_no,
                                 f"non-integer vertex id in {line.strip()!r}") from None
    if not raw:
        raise EmptyGraphError(f"{path}: no edges found")
    arr = np.asarray(raw, dtype=np.int64)
    original_ids = np.unique(arr)
    compact = np.searchsorted(original_ids, arr)
    edges_uv = _dedupe_undirected(compact)
    indptr, indices = _build_csr(edges_uv, len(original_ids))
    return ScalarGraph(indptr, indices, original_ids)


def load_vertex_scalars(path, graph: ScalarGraph):
    """Attach per-vertex scalars from a ``u value`` file; every vertex must
    be covered and ids must exist in the graph."""
    values = np.full(graph.vertex_count, np.nan)
    with open(path, "r", encoding="utf-8") as fh:
        for line_no, line in enumerate(fh, start=1):
            parts = _significant(line)
            if parts is None:
                continue
            if len(parts) != 2:
                raise ParseError(path, line_no,
                                 f"expected 'u value', got {line.strip()!r}")
            try:
                orig, val = int(parts[0]), float(parts[1])
            except ValueError:
                raise ParseError(path, line_no,
                                 f"malformed vertex/value in {line.strip()!r}") from None
            if not np.isfinite(val):
                raise ParseError(path, line_no, f"non-finite value {parts[1]}")
            v = graph.compact_id(orig)
            if not np.isnan(values[v]) and values[v] != val:
                raise DuplicateDefinitionError(
                    f"{path}:{line_no}: vertex {orig} redefined "
                    f"({values[v]} -> {val})")
            values[v] = val
    missing = int(np.isnan(values).sum())
    if missing:
        raise CoverageError(f"{path}: {missing} vertices have no scalar value")
    return graph.with_scalars(values)


def load_edge_scalars(path, graph: ScalarGraph):
    """Attach per-edge scalars from a ``u v value`` file (orientation
    insensitive); every edge must be covered."""
    skeleton = EdgeScalarGraph(graph)
    values = np.full(skeleton.edge_count, np.nan)
    with open(path, "r", encoding="utf-8") as fh:
        for line_no, line in enumerate(fh, start=1):
            parts = _significant(line)
            if parts is None:
                continue
            if len(parts) != 3:
                raise ParseError(path, line_no,
                                 f"expected 'u v value', got {line.strip()!r}")
            try:
                a, b, val = int(parts[0]), int(parts[1]), float(parts[2])
            except ValueError:
                raise ParseError(path, line_no,
                                 f"malformed edge/value in {line.strip()!r}") from None
            if not np.isfinite(val):
                raise ParseError(path, line_no, f"non-finite value {parts[2]}")
            e = skeleton.edge_id(graph.compact_id(a), graph.compact_id(b))
            if not np.isnan(values[e]) and values[e] != val:
                raise DuplicateDefinitionError(
                    f"{path}:{line_no}: edge ({a}, {b}) redefined "
                    f"({values[e]} -> {val})")
            values[e] = val
    missing = int(np.isnan(values).sum())
    if missing:
        raise CoverageError(f"{path}: {missing} edges have no scalar value")
    return skeleton.with_scalars(values)


# ----------------------------------------------------------------------
# writing (round-trip counterparts, original ids)


def write_edge_list(graph: ScalarGraph, path):
    orig = graph.original_ids
    with open(path, "w", encoding="utf-8") as fh:
        for u, v in graph.edge_array():
            fh.write(f"{orig[u]} {orig[v]}\n")


def write_vertex_scalars(graph, path, values=None):
    values = graph.vertex_scalar if values is None else values
    orig = graph.original_ids
    with open(path, "w", encoding="utf-8") as fh:
        for v in range(graph.vertex_count):
            fh.write(f"{orig[v]} {_fmt(values[v])}\n")


def write_edge_scalars(egraph: EdgeScalarGraph, path, values=None):
    values = egraph.edge_scalar if values is None else values
    orig = egraph.original_ids
    with open(path, "w", encoding="utf-8") as fh:
        for e, (u, v) in enumerate(egraph.edges):
            fh.write(f"{orig[u]} {orig[v]} {_fmt(values[e])}\n")


# ----------------------------------------------------------------------
# neighborhood query


def neighborhood(graph: ScalarGraph, v, hops):
    """BFS ball of radius ``hops`` around vertex ``v`` (``v`` included)."""
    if not 0 <= v < graph.vertex_count:
        raise UnknownIdError(f"vertex {v} out of range")
    if hops < 1:
        raise ValueError("hops must be >= 1")
    dist = {v: 0}
    queue = deque([v])
    while queue:
        u = queue.popleft()
        if dist[u] == hops:
            continue
        for w in graph.neighbors(u):
            w = int(w)
            if w not in dist:
                dist[w] = dist[u] + 1
                queue.append(w)
    return Neighborhood(center=v, hops=hops, members=frozenset(dist))


# ----------------------------------------------------------------------
# helpers


def _significant(line):
    """Split a data line; None for blanks and '#' comments."""
    stripped = line.strip()
    if not stripped or stripped.startswith("#"):
        return None
    return stripped.split()


def _fmt(x):
    x = float(x)
    return repr(int(x)) if x.is_integer() and abs(x) < 1e15 else repr(x)


def _dedupe_undirected(arr):
    """(k, 2) int array -> unique undirected edges with u < v, sorted."""
    if arr.size == 0:
        return arr.reshape(0, 2)
    lo = np.minimum(arr[:, 0], arr[:, 1])
    hi = np.maximum(arr[:, 0], arr[:, 1])
    keep = lo != hi  # self-loops out
    return np.unique(np.column_stack([lo[keep], hi[keep]]), axis=0)


def _build_csr(edges_uv, n):
    """Symmetric CSR (indptr, indices) from deduped u<v edges."""
    if len(edges_uv) == 0:
        return np.zeros(n + 1, dtype=np.int64), np.zeros(0, dtype=np.int64)
    both_u = np.concatenate([edges_uv[:, 0], edges_uv[:, 1]])
    both_v = np.concatenate([edges_uv[:, 1], edges_uv[:, 0]])
    order = np.lexsort((both_v, both_u))
    src, dst = both_u[order], both_v[order]
    indptr = np.zeros(n + 1, dtype=np.int64)
    np.add.at(indptr, src + 1, 1)
    np.cumsum(indptr, out=indptr)
    return indptr, dst.astype(np.int64)


def _incident_edge_csr(edges, n):
    """Per-vertex incident edge ids (CSR), edge ids ascending."""
    m = len(edges)
    if m == 0:
        return np.zeros(n + 1, dtype=np.int64), np.zeros(0, dtype=np.int64)
    verts = np.concatenate([edges[:, 0], edges[:, 1]])
    eids = np.concatenate([np.arange(m), np.arange(m)])
    order = np.lexsort((eids, verts))
    indptr = np.zeros(n + 1, dtype=np.int64)
    np.add.at(indptr, verts + 1, 1)
    np.cumsum(indptr, out=indptr)
    return indptr, eids[order].astype(np.int64)
