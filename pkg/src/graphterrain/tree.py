"""Scalar trees: build, merge ties, simplify, query.

A scalar tree is a rooted forest over a graph's vertices (or edges) in
which every node's scalar is >= its parent's. Cutting the tree at height
alpha yields exactly the maximal alpha-(edge-)connected components of the
underlying scalar graph, which is what every downstream feature (terrain
peaks, cross sections, component listing) is built on.

Construction sweeps ids in decreasing scalar order and glues each processed
id under the current roots of its already-processed neighbors, tracked with
a union-find. Equal-scalar ancestor chains are then merged into super nodes
so that subtrees correspond one-to-one with maximal components even when
scalar values repeat.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np

from .errors import UnknownIdError
from .graph import EdgeScalarGraph, ScalarGraph


@dataclass
class ScalarTree:
    """Rooted forest with one scalar per node.

    ``parent[i] = -1`` marks a root. ``members`` holds, per node, the
    sorted vertex/edge ids the node stands for; ``None`` means the identity
    mapping (node i <-> id i), which is what the builders produce before
    postprocessing. ``edge_endpoints`` (edge trees only) maps each edge id
    to its original endpoint pair for reporting.
    """

    kind: str                      # "vertex" | "edge"
    scalars: np.ndarray
    parent: np.ndarray
    members: list | None = None
    postprocessed: bool = False
    synthetic_root: bool = False
    edge_endpoints: np.ndarray | None = None
    _children: tuple | None = field(default=None, repr=False, compare=False)
    _node_of: np.ndarray | None = field(default=None, repr=False, compare=False)

    @property
    def node_count(self):
        return len(self.scalars)

    @property
    def roots(self):
        return np.flatnonzero(self.parent == -1)

    @property
    def member_count(self):
        if self.members is None:
            return self.node_count
        return sum(len(m) for m in self.members)

    def node_members(self, n):
        """Sorted ids directly attached to node ``n``."""
        if self.members is None:
            return np.array([n], dtype=np.int64)
        return np.asarray(self.members[n], dtype=np.int64)

    def children(self, n):
        """Children of node ``n``, ascending node id."""
        indptr, order = self._children_csr()
        return order[indptr[n + 1]:indptr[n + 2]]

    def _children_csr(self):
        if self._children is None:
            counts = np.bincount(self.parent + 1, minlength=self.node_count + 1)
            indptr = np.concatenate([[0], np.cumsum(counts)])
            order = np.argsort(self.parent, kind="stable")
            self._children = (indptr, order)
        return self._children

    def node_of(self, member_id):
        """Node holding ``member_id`` (postprocessed trees)."""
        if self._node_of is None:
            if self.members is None:
                lookup = np.arange(self.node_count)
            else:
                top = max((int(m[-1]) for m in self.members if len(m)), default=-1)
                lookup = np.full(top + 1, -1, dtype=np.int64)
                for n, mem in enumerate(self.members):
                    lookup[np.asarray(mem, dtype=np.int64)] = n
            self._node_of = lookup
        mid = int(member_id)
        if not 0 <= mid < len(self._node_of) or self._node_of[mid] < 0:
            raise UnknownIdError(f"id {member_id} is not a member of this tree")
        return int(self._node_of[mid])


@dataclass(frozen=True)
class CutComponent:
    """Handle for one maximal component: subtree root plus member ids."""

    root: int
    members: np.ndarray

    def __len__(self):
        return len(self.members)


@dataclass(frozen=True)
class Cut:
    """All maximal components with scalar >= alpha."""

    alpha: float
    components: list

    def member_sets(self):
        return frozenset(frozenset(int(i) for i in c.members) for c in self.components)


# ----------------------------------------------------------------------
# construction sweeps


def build_vertex_scalar_tree(graph: ScalarGraph) -> ScalarTree:
    """One tree node per vertex; decreasing-scalar sweep with union-find.

    Each processed vertex becomes the parent of the current subtree roots
    of its already-processed neighbors, so the last (minimum) vertex of a
    connected component ends up as that component's root. Ties are ordered
    by ascending vertex id; merge them afterwards with
    :func:`postprocess_super_tree` before cutting.
    """
    n = graph.vertex_count
    if n == 0:
        return ScalarTree("vertex", np.zeros(0), np.zeros(0, dtype=np.int64))
    scalars = np.asarray(graph.vertex_scalar, dtype=np.float64)
    order = np.lexsort((np.arange(n), -scalars))
    rank = np.empty(n, dtype=np.int64)
    rank[order] = np.arange(n)

    parent = [-1] * n
    uf = list(range(n))
    uf_rank = [0] * n
    subtree_root = list(range(n))
    indptr = graph.indptr.tolist()
    indices = graph.indices.tolist()
    rank_l = rank.tolist()
    order_l = order.tolist()

    for i in range(n):
        v = order_l[i]
        for k in range(indptr[v], indptr[v + 1]):
            w = indices[k]
            if rank_l[w] < i:
                a = v
                while uf[a] != a:
                    uf[a] = uf[uf[a]]
                    a = uf[a]
                b = w
                while uf[b] != b:
                    uf[b] = uf[uf[b]]
                    b = uf[b]
                if a != b:
                    parent[subtree_root[b]] = v
                    if uf_rank[a] < uf_rank[b]:
                        a, b = b, a
                    uf[b] = a
                    if uf_rank[a] == uf_rank[b]:
                        uf_rank[a] += 1
                    subtree_root[a] = v

    return ScalarTree("vertex", scalars.copy(), np.asarray(parent, dtype=np.int64))


def build_edge_scalar_tree(egraph: EdgeScalarGraph) -> ScalarTree:
    """One tree node per edge, O(|E| log |E|).

    Same sweep as the vertex build, but instead of scanning all edges that
    share an endpoint with the current edge, only the two endpoints'
    minimum-sorted-index incident edges are checked: every earlier-processed
    edge through a vertex already sits in the same subtree as that vertex's
    min-index edge, so one lookup per endpoint suffices.
    """
    m = egraph.edge_count
    endpoints = egraph.original_ids[egraph.edges]
    if m == 0:
        return ScalarTree("edge", np.zeros(0), np.zeros(0, dtype=np.int64),
                          edge_endpoints=endpoints)
    scalars = np.asarray(egraph.edge_scalar, dtype=np.float64)
    order = np.lexsort((np.arange(m), -scalars))
    rank = np.empty(m, dtype=np.int64)
    rank[order] = np.arange(m)

    # per vertex: smallest sorted index among incident edges
    min_rank = np.full(egraph.vertex_count, m, dtype=np.int64)
    np.minimum.at(min_rank, egraph.edges[:, 0], rank)
    np.minimum.at(min_rank, egraph.edges[:, 1], rank)

    parent = [-1] * m
    uf = list(range(m))
    uf_rank = [0] * m
    subtree_root = list(range(m))
    order_l = order.tolist()
    min_rank_l = min_rank.tolist()
    eu = egraph.edges[:, 0].tolist()
    ev = egraph.edges[:, 1].tolist()

    for i in range(m):
        e = order_l[i]
        mr1 = min_rank_l[eu[e]]
        mr2 = min_rank_l[ev[e]]
        if mr1 < i:
            a = e
            while uf[a] != a:
                uf[a] = uf[uf[a]]
                a = uf[a]
            b = order_l[mr1]
            while uf[b] != b:
                uf[b] = uf[uf[b]]
                b = uf[b]
            if a != b:
                parent[subtree_root[b]] = e
                if uf_rank[a] < uf_rank[b]:
                    a, b = b, a
                uf[b] = a
                if uf_rank[a] == uf_rank[b]:
                    uf_rank[a] += 1
                subtree_root[a] = e
        if mr2 < i and mr2 != mr1:
            a = e
            while uf[a] != a:
                uf[a] = uf[uf[a]]
                a = uf[a]
            b = order_l[mr2]
            while uf[b] != b:
                uf[b] = uf[uf[b]]
                b = uf[b]
            if a != b:
                parent[subtree_root[b]] = e
                if uf_rank[a] < uf_rank[b]:
                    a, b = b, a
                uf[b] = a
                if uf_rank[a] == uf_rank[b]:
                    uf_rank[a] += 1
                subtree_root[a] = e

    return ScalarTree("edge", scalars.copy(), np.asarray(parent, dtype=np.int64),
                      edge_endpoints=endpoints)


def postprocess_super_tree(tree: ScalarTree) -> ScalarTree:
    """Merge equal-scalar ancestor chains into super nodes.

    BFS from each root: children with the same scalar as the current node
    fold into its super node, children with a larger scalar start a new
    super node underneath. Afterwards every child scalar is strictly
    greater than its parent's and each subtree is exactly one maximal
    component. One pass, O(nodes).
    """
    n = tree.node_count
    if n == 0:
        return ScalarTree(tree.kind, tree.scalars.copy(), tree.parent.copy(),
                          members=[], postprocessed=True,
                          edge_endpoints=tree.edge_endpoints)

    cindptr, corder = tree._children_csr()
    corder_l = corder.tolist()
    cindptr_l = cindptr.tolist()
    scalars_l = tree.scalars.tolist()

    super_of = np.empty(n, dtype=np.int64)
    sup_scalar = []
    sup_parent = []

    for root in corder_l[:cindptr_l[1]]:  # parent == -1 group, id ascending
        sid = len(sup_scalar)
        sup_scalar.append(scalars_l[root])
        sup_parent.append(-1)
        super_of[root] = sid
        queue = [root]
        head = 0
        while head < len(queue):
            q = queue[head]
            head += 1
            sq = super_of[q]
            for ci in range(cindptr_l[q + 1], cindptr_l[q + 2]):
                c = corder_l[ci]
                if scalars_l[c] == scalars_l[q]:
                    super_of[c] = sq
                else:
                    tid = len(sup_scalar)
                    sup_scalar.append(scalars_l[c])
                    sup_parent.append(sq)
                    super_of[c] = tid
                queue.append(c)

    n_super = len(sup_scalar)
    if tree.members is None:
        morder = np.argsort(super_of, kind="stable")
        counts = np.bincount(super_of, minlength=n_super)
        members = np.split(morder, np.cumsum(counts)[:-1])
    else:
        buckets = [[] for _ in range(n_super)]
        for node, s in enumerate(super_of):
            buckets[s].append(tree.node_members(node))
        members = [np.sort(np.concatenate(b)) for b in buckets]

    return ScalarTree(tree.kind,
                      np.asarray(sup_scalar, dtype=np.float64),
                      np.asarray(sup_parent, dtype=np.int64),
                      members=members,
                      postprocessed=True,
                      edge_endpoints=tree.edge_endpoints)


def simplify(tree: ScalarTree, bins=None) -> ScalarTree:
    """Snap scalars to ``bins`` uniform bins over [min, max] (representative
    = bin lower edge), then merge the resulting ties. ``bins=None`` is the
    no-op flag. A degenerate scalar range collapses to a single bin."""
    if bins is None:
        return tree
    bins = int(bins)
    if bins < 1:
        raise ValueError("bins must be >= 1")
    if tree.node_count == 0:
        return postprocess_super_tree(tree)
    lo = float(tree.scalars.min())
    hi = float(tree.scalars.max())
    if hi == lo:
        snapped = np.full(tree.node_count, lo)
    else:
        idx = np.floor((tree.scalars - lo) / (hi - lo) * bins).astype(np.int64)
        np.clip(idx, 0, bins - 1, out=idx)
        snapped = lo + idx * ((hi - lo) / bins)
    binned = ScalarTree(tree.kind, snapped, tree.parent.copy(),
                        members=tree.members, postprocessed=False,
                        edge_endpoints=tree.edge_endpoints)
    return postprocess_super_tree(binned)


# ----------------------------------------------------------------------
# queries


def cut_at_alpha(tree: ScalarTree, alpha) -> Cut:
    """All maximal subtrees whose root scalar is >= ``alpha``.

    Each returned component's member set is a maximal alpha-connected
    component of the originating graph. Requires a postprocessed tree.
    """
    _require_postprocessed(tree)
    alpha = float(alpha)
    scalars = tree.scalars
    parent = tree.parent
    above = scalars >= alpha
    qualifying = [n for n in np.flatnonzero(above)
                  if parent[n] == -1 or scalars[parent[n]] < alpha]
    components = [CutComponent(int(n), subtree_members(tree, int(n)))
                  for n in qualifying]
    return Cut(alpha=alpha, components=components)


def subtree_members(tree: ScalarTree, node) -> np.ndarray:
    """Sorted member ids of the subtree rooted at ``node`` (inclusive)."""
    node = int(node)
    if not 0 <= node < tree.node_count:
        raise UnknownIdError(f"node {node} out of range")
    chunks = []
    stack = [node]
    while stack:
        q = stack.pop()
        chunks.append(tree.node_members(q))
        stack.extend(int(c) for c in tree.children(q))
    return np.sort(np.concatenate(chunks))


def mcc_of(tree: ScalarTree, member_id) -> CutComponent:
    """The maximal component whose floor is ``member_id``'s own scalar:
    the subtree rooted at the super node holding that id."""
    _require_postprocessed(tree)
    node = tree.node_of(member_id)
    return CutComponent(root=node, members=subtree_members(tree, node))


def _require_postprocessed(tree):
    if not tree.postprocessed:
        raise ValueError("operation requires a postprocessed (super) tree; "
                         "call postprocess_super_tree first")


# ----------------------------------------------------------------------
# serialization


def tree_to_document(tree: ScalarTree, original_ids=None):
    """Plain-dict form of a tree, ready for JSON.

    ``original_ids`` (vertex trees built from a compacted graph) maps member
    ids back to the input file's ids; pass None when members already carry
    the ids you want serialized. Edge trees keep dense edge ids as members
    and carry an ``edges`` table of original endpoint pairs.
    """
    nodes = []
    for n in range(tree.node_count):
        mem = tree.node_members(n)
        if original_ids is not None and tree.kind == "vertex":
            mem = np.sort(np.asarray(original_ids)[mem])
        nodes.append({
            "id": n,
            "scalar": float(tree.scalars[n]),
            "parent": int(tree.parent[n]),
            "members": [int(i) for i in mem],
        })
    doc = {
        "kind": tree.kind,
        "synthetic_root": bool(tree.synthetic_root),
        "roots": [int(r) for r in tree.roots],
        "nodes": nodes,
    }
    if tree.kind == "edge" and tree.edge_endpoints is not None:
        doc["edges"] = [[int(u), int(v)] for u, v in tree.edge_endpoints]
    return doc


def tree_from_document(doc) -> ScalarTree:
    nodes = sorted(doc["nodes"], key=lambda d: d["id"])
    scalars = np.array([d["scalar"] for d in nodes], dtype=np.float64)
    parent = np.array([d["parent"] for d in nodes], dtype=np.int64)
    members = [np.asarray(sorted(d["members"]), dtype=np.int64) for d in nodes]
    endpoints = None
    if "edges" in doc:
        endpoints = np.asarray(doc["edges"], dtype=np.int64).reshape(-1, 2)
    tree = ScalarTree(doc["kind"], scalars, parent, members=members,
                      synthetic_root=bool(doc.get("synthetic_root", False)),
                      edge_endpoints=endpoints)
    tree.postprocessed = _looks_postprocessed(scalars, parent)
    return tree


def save_tree(tree, path, original_ids=None):
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(tree_to_document(tree, original_ids), fh,
                  sort_keys=True, separators=(",", ":"))
        fh.write("\n")


def load_tree(path) -> ScalarTree:
    with open(path, "r", encoding="utf-8") as fh:
        return tree_from_document(json.load(fh))


def _looks_postprocessed(scalars, parent):
    nonroot = parent >= 0
    return bool(np.all(scalars[nonroot] > scalars[parent[nonroot]]))
