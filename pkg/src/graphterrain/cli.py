"""Command line entry points.

Everything is files first: `build` writes a tree document, `mesh` turns a
tree document into a mesh document (plus optional OBJ), `corr` writes a
per-vertex correlation file, and `serve` exposes a built session over HTTP
for the interactive viewer.

Exit codes: 0 ok, 1 internal error, 2 user-input error.
"""

from __future__ import annotations

import argparse
import os
import sys

from .correlation import lci
from .errors import GraphTerrainError
from .graph import load_edge_list, write_vertex_scalars
from .session import build_session, resolve_vertex_source
from .terrain import build_mesh, export_obj, layout_2d, save_mesh
from .tree import load_tree, save_tree


def main(argv=None):
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (GraphTerrainError, FileNotFoundError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # noqa: BLE001 - last-resort reporting
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="graphterrain",
        description="scalar trees and terrain meshes for measured graphs")
    sub = parser.add_subparsers(required=True)

    p = sub.add_parser("build", help="build a (super) scalar tree file")
    p.add_argument("--graph", required=True, help="edge list file")
    p.add_argument("--scalar", required=True,
                   help="kcore|ktruss|degree|betweenness|file:PATH")
    p.add_argument("--kind", choices=("vertex", "edge"), default=None,
                   help="defaults to edge for ktruss, vertex otherwise")
    p.add_argument("--bins", type=int, default=None,
                   help="simplify: snap scalars to N uniform bins")
    p.add_argument("--out", required=True, help="tree document to write")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("mesh", help="turn a tree file into a terrain mesh file")
    p.add_argument("--tree", required=True, help="tree document from build")
    p.add_argument("--color-by", default="self",
                   help="self | file:PATH (vertex or edge scalars)")
    p.add_argument("--flat", action="store_true",
                   help="zero all heights (2D treemap view)")
    p.add_argument("--out", required=True, help="mesh document to write")
    p.add_argument("--obj", default=None, help="also export an OBJ mesh here")
    p.set_defaults(func=cmd_mesh)

    p = sub.add_parser("corr", help="correlate two vertex fields")
    p.add_argument("--graph", required=True)
    p.add_argument("--field-a", required=True,
                   help="kcore|degree|betweenness|file:PATH")
    p.add_argument("--field-b", required=True)
    p.add_argument("--hops", type=int, default=1)
    p.add_argument("--out", default=None,
                   help="write per-vertex local indexes as a scalar file")
    p.set_defaults(func=cmd_corr)

    p = sub.add_parser("serve", help="serve a built session over HTTP")
    p.add_argument("--graph", required=True)
    p.add_argument("--scalar", required=True)
    p.add_argument("--kind", choices=("vertex", "edge"), default=None)
    p.add_argument("--bins", type=int, default=None)
    p.add_argument("--color-by", default=None)
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int,
                   default=int(os.environ.get("PORT", 8787)))
    p.set_defaults(func=cmd_serve)
    return parser


def _data_path(path):
    """Resolve relative inputs against DATA_DIR when set."""
    base = os.environ.get("GRAPHTERRAIN_DATA_DIR") or os.environ.get("DATA_DIR")
    if base and not os.path.isabs(path) and not os.path.exists(path):
        candidate = os.path.join(base, path)
        if os.path.exists(candidate):
            return candidate
    return path


def _infer_kind(args):
    if args.kind:
        return args.kind
    return "edge" if args.scalar == "ktruss" else "vertex"


def cmd_build(args):
    session = build_session(_data_path(args.graph), args.scalar,
                            _infer_kind(args), bins=args.bins)
    original_ids = (session.graph.original_ids
                    if session.kind == "vertex" else None)
    save_tree(session.tree, args.out, original_ids)
    print(f"tree nodes: {session.tree.node_count}")
    print(f"construction seconds: {session.construction_seconds:.4f}")
    print(f"wrote {args.out}")
    return 0


def cmd_mesh(args):
    tree = load_tree(_data_path(args.tree))
    color = _color_values_for_loaded_tree(tree, args.color_by)
    mesh = build_mesh(tree, layout_2d(tree), color, flat=args.flat)
    save_mesh(mesh, args.out)
    if args.obj:
        export_obj(mesh, args.obj)
        print(f"wrote {args.obj}")
    print(f"boundaries: {tree.node_count + (1 if len(tree.roots) != 1 else 0)}")
    print(f"wrote {args.out}")
    return 0


def _color_values_for_loaded_tree(tree, color_by):
    """Loaded trees carry original ids, so file fields become id->value maps."""
    if color_by in (None, "self"):
        return None
    if not color_by.startswith("file:"):
        raise ValueError("mesh --color-by accepts 'self' or file:PATH")
    path = _data_path(color_by[5:])
    if tree.kind == "vertex":
        mapping = {}
        with open(path, "r", encoding="utf-8") as fh:
            for line in fh:
                parts = line.split()
                if not parts or parts[0].startswith("#"):
                    continue
                mapping[int(parts[0])] = float(parts[1])
        return _NamedDict(os.path.basename(path), mapping)
    # edge tree: translate endpoint pairs to dense edge ids
    pair_value = {}
    with open(path, "r", encoding="utf-8") as fh:
        for line in fh:
            parts = line.split()
            if not parts or parts[0].startswith("#"):
                continue
            u, v, val = int(parts[0]), int(parts[1]), float(parts[2])
            pair_value[(min(u, v), max(u, v))] = val
    if tree.edge_endpoints is None:
        raise ValueError("tree document lacks the edge endpoint table")
    values = {}
    for e, (u, v) in enumerate(tree.edge_endpoints):
        key = (min(int(u), int(v)), max(int(u), int(v)))
        if key not in pair_value:
            raise ValueError(f"color file misses edge {key}")
        values[e] = pair_value[key]
    return _NamedDict(os.path.basename(path), values)


class _NamedDict:
    def __init__(self, name, values):
        self.name = name
        self.values = values


def cmd_corr(args):
    graph = load_edge_list(_data_path(args.graph))
    field_a = resolve_vertex_source(graph, args.field_a)
    field_b = resolve_vertex_source(graph, args.field_b)
    result = lci(graph, field_a, field_b, hops=args.hops)
    print(f"gci: {result.gci:.6f}")
    if result.zero_variance_count:
        print(f"zero-variance neighborhoods: {result.zero_variance_count}")
    if args.out:
        write_vertex_scalars(graph, args.out, values=result.lci)
        print(f"wrote {args.out}")
    return 0


def cmd_serve(args):
    from .service import TerrainService

    session = build_session(_data_path(args.graph), args.scalar,
                            _infer_kind(args), bins=args.bins,
                            color_by=args.color_by)
    service = TerrainService(session, host=args.host, port=args.port)
    print(f"tree nodes: {session.tree.node_count}")
    print(f"serving on http://{args.host}:{service.port}")
    try:
        service.serve_forever()
    except KeyboardInterrupt:
        service.stop()
    return 0


if __name__ == "__main__":
    sys.exit(main())
