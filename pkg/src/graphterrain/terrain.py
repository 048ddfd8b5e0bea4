"""Terrain geometry: nested 2D layout, 3D mesh, peaks, linked force layout.

Every (super) tree node gets an axis-aligned rectangular boundary nested
strictly inside its parent's boundary, with enclosed area exactly
proportional to the node's descendant count (leaves get a small floor area
so they stay visible). Lifting each boundary to its node's scalar and
closing the gaps with vertical walls produces the terrain: peaks are
subtrees, peak height is the component's scalar floor, and slicing the
terrain with a horizontal plane at alpha exposes one peak per maximal
alpha-connected component.

Rectangles rather than round boundaries: two disjoint circles inside a
circle can cover at most half of it, so round boundaries cannot keep areas
proportional to subtree weight once siblings carry most of the parent's
weight. Nested rectangles can, exactly.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np

from .errors import CapExceededError, UnknownIdError
from .graph import ScalarGraph
from .tree import ScalarTree, cut_at_alpha, subtree_members

PALETTE = ("red", "yellow", "green", "blue")  # highest .. lowest quartile
LEAF_AREA_FRACTION = 0.001  # of the outer boundary's area
FORCE_LAYOUT_CAP = 5_000
VIRTUAL_ROOT = -1


@dataclass(frozen=True)
class Peak:
    """Terrain region within one boundary: a maximal component made visual."""

    node_id: int
    alpha: float
    members: np.ndarray
    area: float


@dataclass
class Layout:
    """Flat nested rectangles for every tree node (heights not yet applied).

    ``rects[n] = (x, y, w, h)`` is node n's boundary; ``cells[n]`` is the
    region inside its parent reserved for n's subtree (used for meshing the
    flat top around each child). Node id -1 is the virtual root added when
    the tree is a forest.
    """

    rects: dict
    cells: dict
    subtree_nodes: dict
    virtual_root: bool
    order: list  # parents before children


@dataclass
class TerrainMesh:
    tree: ScalarTree
    layout: Layout
    heights: dict              # node -> boundary height
    node_color: dict           # node -> palette class 0..3
    color_source: str
    quartiles: tuple
    flat: bool

    @property
    def bounds(self):
        x, y, w, h = self.layout.rects[self.outer_node]
        return (x, y, x + w, y + h)

    @property
    def outer_node(self):
        return VIRTUAL_ROOT if self.layout.virtual_root else self.layout.order[0]

    def walls(self):
        """(inner, outer, base, top, color) per non-outer boundary."""
        out = []
        for n in self.layout.order:
            if n == self.outer_node:
                continue
            p = self._parent_of(n)
            out.append((n, p, self.heights[p], self.heights[n], self.node_color[n]))
        return out

    def _parent_of(self, n):
        p = int(self.tree.parent[n])
        return VIRTUAL_ROOT if (p == -1 and self.layout.virtual_root) else p


# ----------------------------------------------------------------------
# 2D layout


def layout_2d(tree: ScalarTree) -> Layout:
    """Nested rectangles, area exactly proportional to descendant count.

    The parent's interior is partitioned into cells proportional to the
    children's subtree node counts (descending size, then ascending id);
    each child's boundary is its cell shrunk about the center to the
    child's own proportional area. Forests hang under a virtual root.
    """
    n = tree.node_count
    roots = [int(r) for r in tree.roots]
    subtree_nodes = _subtree_node_counts(tree)
    virtual = len(roots) != 1
    if virtual:
        subtree_nodes[VIRTUAL_ROOT] = n + 1
    outer = VIRTUAL_ROOT if virtual else roots[0]
    total = max(subtree_nodes.get(outer, 1) - 1, 1)  # descendants of outer
    side = float(np.sqrt(total))
    rects = {outer: (0.0, 0.0, side, side)}
    cells = {outer: rects[outer]}
    order = [outer]
    eps_area = max(LEAF_AREA_FRACTION * total, 1e-12)

    stack = [outer]
    while stack:
        parent = stack.pop()
        kids = roots if parent == VIRTUAL_ROOT else [int(c) for c in tree.children(parent)]
        if not kids:
            continue
        kids = sorted(kids, key=lambda c: (-subtree_nodes[c], c))
        weights = [subtree_nodes[c] for c in kids]
        for child, cell in zip(kids, _split_rect(rects[parent], weights)):
            desc = subtree_nodes[child] - 1
            cell_area = cell[2] * cell[3]
            target = float(desc) if desc > 0 else min(eps_area, 0.25 * cell_area)
            rects[child] = _shrink_to_area(cell, target)
            cells[child] = cell
            order.append(child)
            stack.append(child)
    return Layout(rects=rects, cells=cells, subtree_nodes=subtree_nodes,
                  virtual_root=virtual, order=order)


def _subtree_node_counts(tree):
    n = tree.node_count
    sizes = np.ones(n, dtype=np.int64)
    order = []
    stack = [int(r) for r in tree.roots]
    while stack:
        q = stack.pop()
        order.append(q)
        stack.extend(int(c) for c in tree.children(q))
    for i in reversed(order):  # children settled before their parent
        p = tree.parent[i]
        if p >= 0:
            sizes[p] += sizes[i]
    return {i: int(sizes[i]) for i in range(n)}


def _split_rect(rect, weights):
    """Partition rect into len(weights) cells with proportional areas,
    recursive bisection along the longer side (order preserved)."""
    if len(weights) == 1:
        return [rect]
    total = sum(weights)
    acc = 0
    best_k, best_diff = 1, None
    for k in range(1, len(weights)):
        acc += weights[k - 1]
        diff = abs(2 * acc - total)
        if best_diff is None or diff < best_diff:
            best_k, best_diff = k, diff
    frac = sum(weights[:best_k]) / total
    x, y, w, h = rect
    if w >= h:
        a = (x, y, w * frac, h)
        b = (x + w * frac, y, w * (1 - frac), h)
    else:
        a = (x, y, w, h * frac)
        b = (x, y + h * frac, w, h * (1 - frac))
    return _split_rect(a, weights[:best_k]) + _split_rect(b, weights[best_k:])


def _shrink_to_area(cell, target_area):
    x, y, w, h = cell
    scale = float(np.sqrt(target_area / (w * h)))
    scale = min(scale, 0.999999)  # keep strictly inside even for huge subtrees
    nw, nh = w * scale, h * scale
    return (x + (w - nw) / 2.0, y + (h - nh) / 2.0, nw, nh)


def rect_loop(rect):
    """Counter-clockwise corner loop of a rect (implicitly closed)."""
    x, y, w, h = rect
    return [[x, y], [x + w, y], [x + w, y + h], [x, y + h]]


# ----------------------------------------------------------------------
# mesh


def build_mesh(tree: ScalarTree, layout: Layout = None, color_field=None,
               flat=False) -> TerrainMesh:
    """Lift boundaries to their scalars and color walls by quartile class.

    ``color_field`` is a per-member field (VertexField/EdgeField or raw
    array); node color value = mean over the node's members. Without it the
    terrain scalar itself colors the walls. ``flat=True`` zeroes all
    heights (the 2D treemap view).
    """
    if layout is None:
        layout = layout_2d(tree)
    n = tree.node_count
    heights = {i: (0.0 if flat else float(tree.scalars[i])) for i in range(n)}
    if layout.virtual_root:
        lo = float(tree.scalars.min()) if n else 0.0
        span = float(tree.scalars.max() - lo) if n else 0.0
        heights[VIRTUAL_ROOT] = 0.0 if flat else lo - max(span * 1e-3, 1e-9, abs(lo) * 1e-9)

    node_values, node_color, quartiles, source = color_classes(tree, color_field)
    if layout.virtual_root:
        node_color = dict(node_color)
        node_color[VIRTUAL_ROOT] = 3

    return TerrainMesh(tree=tree, layout=layout, heights=heights,
                       node_color=node_color, color_source=source,
                       quartiles=quartiles, flat=flat)


def color_classes(tree: ScalarTree, color_field=None):
    """Quartile color class per node for a coloring field.

    ``color_field`` may be a VertexField/EdgeField, a dense array over the
    tree's member-id space, or a dict id -> value; None colors by the
    terrain scalar itself. A node's color value is the mean over its
    members. Returns (node_values, node_classes, quartiles, source_name):
    class 0..3 = red/yellow/green/blue = top..bottom quartile.
    """
    n = tree.node_count
    if color_field is None:
        node_values = {i: float(tree.scalars[i]) for i in range(n)}
        source = "self"
    else:
        raw = getattr(color_field, "values", color_field)
        source = getattr(color_field, "name", "field")
        if isinstance(raw, dict):
            try:
                node_values = {
                    i: float(np.mean([raw[int(m)] for m in tree.node_members(i)]))
                    for i in range(n)}
            except KeyError as missing:
                raise ValueError(f"color field has no value for id {missing}") from None
        else:
            values = np.asarray(raw, dtype=np.float64)
            if len(values) != tree.member_count:
                raise ValueError(
                    f"color field covers {len(values)} ids, tree has "
                    f"{tree.member_count} members")
            node_values = {i: float(values[tree.node_members(i)].mean())
                           for i in range(n)}

    vals = np.array([node_values[i] for i in range(n)]) if n else np.zeros(1)
    q25, q50, q75 = np.percentile(vals, [25, 50, 75])
    classes = {}
    for i in range(n):
        v = node_values[i]
        classes[i] = 0 if v >= q75 else 1 if v >= q50 else 2 if v >= q25 else 3
    return node_values, classes, (float(q25), float(q50), float(q75)), source


def peaks_at(tree: ScalarTree, mesh: TerrainMesh, alpha) -> list:
    """One peak per maximal component of the cut at ``alpha``."""
    cut = cut_at_alpha(tree, alpha)
    return [pick(mesh, comp.root) for comp in cut.components]


def pick(mesh: TerrainMesh, node_id) -> Peak:
    """Peak for one boundary: its height, member ids and enclosed area."""
    node_id = int(node_id)
    if node_id == VIRTUAL_ROOT and mesh.layout.virtual_root:
        members = np.sort(np.concatenate(
            [subtree_members(mesh.tree, int(r)) for r in mesh.tree.roots]))
        rect = mesh.layout.rects[VIRTUAL_ROOT]
        return Peak(VIRTUAL_ROOT, mesh.heights[VIRTUAL_ROOT], members,
                    rect[2] * rect[3])
    if node_id not in mesh.layout.rects:
        raise UnknownIdError(f"mesh has no boundary for node {node_id}")
    rect = mesh.layout.rects[node_id]
    return Peak(node_id, mesh.heights[node_id],
                subtree_members(mesh.tree, node_id), rect[2] * rect[3])


# ----------------------------------------------------------------------
# serialization


def mesh_to_document(mesh: TerrainMesh):
    order = mesh.layout.order
    boundaries = [{
        "node": int(n),
        "height": mesh.heights[n],
        "color": int(mesh.node_color[n]),
        "loop": rect_loop(mesh.layout.rects[n]),
    } for n in order]
    walls = [{
        "inner": int(i), "outer": int(o),
        "base": b, "top": t, "color": int(c),
    } for i, o, b, t, c in mesh.walls()]
    return {
        "kind": mesh.tree.kind,
        "synthetic_root": bool(mesh.layout.virtual_root),
        "palette": list(PALETTE),
        "color_source": mesh.color_source,
        "quartiles": list(mesh.quartiles),
        "bounds": list(mesh.bounds),
        "boundaries": boundaries,
        "walls": walls,
    }


def save_mesh(mesh, path):
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(mesh_to_document(mesh), fh, sort_keys=True,
                  separators=(",", ":"))
        fh.write("\n")


def export_obj(mesh: TerrainMesh, path):
    """Indexed triangle mesh in Wavefront OBJ text form.

    Caps: each node's boundary top, minus the cells reserved for its
    children (a rectangular ring per child); walls: each child boundary
    extruded from the parent's height to its own. Faces are grouped per
    palette class.
    """
    verts = []
    vert_index = {}
    faces_by_color = {i: [] for i in range(len(PALETTE))}

    def vid(x, y, z):
        key = (round(x, 9), round(y, 9), round(z, 9))
        if key not in vert_index:
            vert_index[key] = len(verts) + 1
            verts.append(key)
        return vert_index[key]

    def emit_rect(rect, z, color):
        x, y, w, h = rect
        a = vid(x, y, z)
        b = vid(x + w, y, z)
        c = vid(x + w, y + h, z)
        d = vid(x, y + h, z)
        faces_by_color[color] += [(a, b, c), (a, c, d)]

    def emit_ring(outer, inner, z, color):
        ox, oy, ow, oh = outer
        ix, iy, iw, ih = inner
        emit_rect((ox, oy, ow, iy - oy), z, color)                      # south
        emit_rect((ox, iy + ih, ow, oy + oh - iy - ih), z, color)       # north
        emit_rect((ox, iy, ix - ox, ih), z, color)                      # west
        emit_rect((ix + iw, iy, ox + ow - ix - iw, ih), z, color)      # east

    for n in mesh.layout.order:
        z = mesh.heights[n]
        color = mesh.node_color[n]
        kids = ([int(r) for r in mesh.tree.roots] if n == VIRTUAL_ROOT
                else [int(c) for c in mesh.tree.children(n)])
        if not kids:
            emit_rect(mesh.layout.rects[n], z, color)
            continue
        for child in kids:
            emit_ring(mesh.layout.cells[child], mesh.layout.rects[child], z, color)
        if not mesh.flat:
            for child in kids:
                loop = rect_loop(mesh.layout.rects[child])
                zc = mesh.heights[child]
                wall_color = mesh.node_color[child]
                for i in range(4):
                    x0, y0 = loop[i]
                    x1, y1 = loop[(i + 1) % 4]
                    a = vid(x0, y0, z)
                    b = vid(x1, y1, z)
                    c = vid(x1, y1, zc)
                    d = vid(x0, y0, zc)
                    faces_by_color[wall_color] += [(a, b, c), (a, c, d)]

    with open(path, "w", encoding="utf-8") as fh:
        fh.write("# terrain mesh\n")
        for x, y, z in verts:
            fh.write(f"v {x} {z} {y}\n")  # scalar height on the OBJ up axis
        for color, faces in faces_by_color.items():
            if not faces:
                continue
            fh.write(f"g class_{PALETTE[color]}\n")
            for a, b, c in faces:
                fh.write(f"f {a} {b} {c}\n")


# ----------------------------------------------------------------------
# linked 2D display


def force_layout_2d(graph: ScalarGraph, vertices, seed=0, iterations=100):
    """Deterministic spring layout of the induced subgraph.

    Fruchterman-Reingold with seeded initial positions and linear cooling.
    Returns (ids, positions): ids sorted ascending, positions (k, 2).
    """
    ids = np.unique(np.asarray(list(vertices), dtype=np.int64))
    if len(ids) > FORCE_LAYOUT_CAP:
        raise CapExceededError(
            f"force layout capped at {FORCE_LAYOUT_CAP} vertices, got {len(ids)}")
    if len(ids) == 0:
        return ids, np.zeros((0, 2))
    if ids.min() < 0 or ids.max() >= graph.vertex_count:
        raise UnknownIdError("vertex subset contains ids outside the graph")
    k = len(ids)
    local = {int(v): i for i, v in enumerate(ids)}
    edges = []
    for v in ids:
        for w in graph.neighbors(int(v)):
            w = int(w)
            if w in local and v < w:
                edges.append((local[int(v)], local[w]))
    edges = np.asarray(edges, dtype=np.int64).reshape(-1, 2)

    rng = np.random.default_rng(seed)
    pos = rng.random((k, 2))
    if k == 1:
        return ids, pos
    opt = float(np.sqrt(1.0 / k))
    temp = 0.1
    cool = temp / (iterations + 1)
    for _ in range(iterations):
        delta = pos[:, None, :] - pos[None, :, :]
        dist = np.linalg.norm(delta, axis=2)
        np.fill_diagonal(dist, 1.0)
        dist = np.maximum(dist, 1e-9)
        # repulsion ~ opt^2/d, attraction ~ d^2/opt on edges
        disp = (delta / dist[:, :, None]) * (opt * opt / dist)[:, :, None]
        disp = disp.sum(axis=1)
        if len(edges):
            dvec = pos[edges[:, 0]] - pos[edges[:, 1]]
            dlen = np.maximum(np.linalg.norm(dvec, axis=1), 1e-9)
            pull = dvec * (dlen / opt)[:, None]
            np.add.at(disp, edges[:, 0], -pull)
            np.add.at(disp, edges[:, 1], pull)
        length = np.maximum(np.linalg.norm(disp, axis=1), 1e-9)
        pos += disp / length[:, None] * np.minimum(length, temp)[:, None]
        temp -= cool
    pos -= pos.mean(axis=0)
    return ids, pos
