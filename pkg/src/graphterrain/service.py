"""Read-only HTTP query service over one immutable session.

Plain stdlib HTTP/1.1 with JSON bodies and permissive CORS so the browser
viewer can talk to it directly. No request mutates state; GETs are pure.
Layout requests are bounded by a small worker pool.

Endpoints:
  GET  /health            {"status": "ok"}
  GET  /mesh              terrain mesh document
  GET  /tree              scalar tree document
  GET  /cut?alpha=A       maximal components at alpha (original ids)
  GET  /peak?node=N|root  members/area of one boundary
  GET  /fields            coloring fields with quartile classes
  POST /layout2d          {"vertices": [ids]} -> deterministic 2D positions
"""

from __future__ import annotations

import json
import threading
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from urllib.parse import parse_qs, urlparse

from .errors import CapExceededError, UnknownIdError
from .session import Session
from .terrain import VIRTUAL_ROOT, force_layout_2d, mesh_to_document, pick
from .tree import cut_at_alpha, tree_to_document

LAYOUT_WORKERS = 4


class TerrainService:
    """Owns the HTTP server; sessions are read-only snapshots."""

    def __init__(self, session: Session, host="127.0.0.1", port=8787):
        self.session = session
        handler = _make_handler(session)
        self.httpd = ThreadingHTTPServer((host, port), handler)
        self.httpd.daemon_threads = True
        self._thread = None

    @property
    def port(self):
        return self.httpd.server_address[1]

    def start(self):
        self._thread = threading.Thread(target=self.httpd.serve_forever,
                                        daemon=True)
        self._thread.start()
        return self

    def serve_forever(self):
        self.httpd.serve_forever()

    def stop(self):
        self.httpd.shutdown()
        self.httpd.server_close()
        if self._thread:
            self._thread.join(timeout=5)


def _make_handler(session: Session):
    mesh_doc = mesh_to_document(session.mesh)
    original_ids = (session.graph.original_ids
                    if session.kind == "vertex" else None)
    tree_doc = tree_to_document(session.tree, original_ids)
    fields_doc = {"fields": session.fields_metadata(),
                  "kind": session.kind,
                  "scalar_source": session.scalar_source}
    layout_pool = threading.BoundedSemaphore(LAYOUT_WORKERS)

    class Handler(BaseHTTPRequestHandler):
        protocol_version = "HTTP/1.1"

        def log_message(self, *args):
            pass

        # -- plumbing ---------------------------------------------------

        def _send(self, code, payload):
            body = json.dumps(payload).encode("utf-8")
            self.send_response(code)
            self.send_header("Content-Type", "application/json")
            self.send_header("Content-Length", str(len(body)))
            self._cors()
            self.end_headers()
            self.wfile.write(body)

        def _cors(self):
            self.send_header("Access-Control-Allow-Origin", "*")
            self.send_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS")
            self.send_header("Access-Control-Allow-Headers", "Content-Type")

        def do_OPTIONS(self):
            self.send_response(204)
            self._cors()
            self.send_header("Content-Length", "0")
            self.end_headers()

        # -- routes -----------------------------------------------------

        def do_GET(self):
            url = urlparse(self.path)
            query = parse_qs(url.query)
            try:
                if url.path == "/health":
                    self._send(200, {"status": "ok"})
                elif url.path == "/mesh":
                    self._send(200, mesh_doc)
                elif url.path == "/tree":
                    self._send(200, tree_doc)
                elif url.path == "/fields":
                    self._send(200, fields_doc)
                elif url.path == "/cut":
                    self._get_cut(query)
                elif url.path == "/peak":
                    self._get_peak(query)
                else:
                    self._send(404, {"error": f"no such endpoint {url.path}"})
            except BrokenPipeError:
                pass

        def _get_cut(self, query):
            try:
                alpha = float(query["alpha"][0])
            except (KeyError, ValueError, IndexError):
                self._send(400, {"error": "cut requires ?alpha=<number>"})
                return
            cut = cut_at_alpha(session.tree, alpha)
            components = [{
                "node": comp.root,
                "alpha": float(session.tree.scalars[comp.root]),
                "size": len(comp.members),
                "members": session.members_to_original(comp.members),
            } for comp in cut.components]
            self._send(200, {"alpha": alpha, "components": components})

        def _get_peak(self, query):
            raw = query.get("node", [None])[0]
            if raw is None:
                self._send(400, {"error": "peak requires ?node=<id>|root"})
                return
            if raw == "root":
                node = (VIRTUAL_ROOT if session.mesh.layout.virtual_root
                        else int(session.tree.roots[0]))
            else:
                try:
                    node = int(raw)
                except ValueError:
                    self._send(400, {"error": f"bad node id {raw!r}"})
                    return
            try:
                peak = pick(session.mesh, node)
            except UnknownIdError as exc:
                self._send(404, {"error": str(exc)})
                return
            self._send(200, {
                "node": peak.node_id,
                "alpha": peak.alpha,
                "area": peak.area,
                "size": len(peak.members),
                "members": session.members_to_original(peak.members),
            })

        def do_POST(self):
            url = urlparse(self.path)
            if url.path != "/layout2d":
                self._send(404, {"error": f"no such endpoint {url.path}"})
                return
            try:
                length = int(self.headers.get("Content-Length", 0))
                payload = json.loads(self.rfile.read(length) or b"{}")
                requested = payload["vertices"]
                if not isinstance(requested, list):
                    raise TypeError
            except (ValueError, KeyError, TypeError):
                self._send(400, {"error": 'body must be {"vertices": [ids]}'})
                return
            if session.kind != "vertex":
                # edge sessions: members are endpoint pairs; flatten
                requested = [v for pair in requested
                             for v in (pair if isinstance(pair, list) else [pair])]
            try:
                compact = [session.graph.compact_id(v) for v in requested]
            except UnknownIdError as exc:
                self._send(400, {"error": str(exc)})
                return
            try:
                with layout_pool:
                    ids, pos = force_layout_2d(session.graph, compact, seed=0)
            except CapExceededError as exc:
                self._send(413, {"error": str(exc)})
                return
            orig = session.graph.original_ids
            edges = []
            idset = set(int(i) for i in ids)
            for v in ids:
                for w in session.graph.neighbors(int(v)):
                    if int(w) in idset and int(v) < int(w):
                        edges.append([int(orig[v]), int(orig[int(w)])])
            self._send(200, {
                "positions": [{"id": int(orig[v]), "x": float(x), "y": float(y)}
                              for v, (x, y) in zip(ids, pos)],
                "edges": edges,
            })

    return Handler
