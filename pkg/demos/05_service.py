#!/usr/bin/env python3
"""The query service the interactive viewer talks to.

A session (graph + scalar source + tree + mesh) is served read-only over
HTTP. This script builds a session in-process, starts the service on a
free port, and exercises every endpoint the way the browser viewer does.
"""

import json
import os
import tempfile
import urllib.request

from graphterrain.service import TerrainService
from graphterrain.session import build_session

graph_file = os.path.join(tempfile.mkdtemp(prefix="svc_demo_"), "graph.txt")
with open(graph_file, "w") as fh:
    fh.write("0 1\n0 2\n1 2\n0 3\n1 3\n2 3\n3 4\n4 5\n5 6\n4 6\n6 7\n")

session = build_session(graph_file, "kcore", "vertex")
service = TerrainService(session, port=0).start()
base = f"http://127.0.0.1:{service.port}"
print(f"serving a {session.graph.vertex_count}-vertex session on {base}\n")


def get(path):
    with urllib.request.urlopen(base + path, timeout=10) as resp:
        return json.loads(resp.read())


print("GET /health ->", get("/health"))
mesh = get("/mesh")
print(f"GET /mesh   -> {len(mesh['boundaries'])} boundaries, "
      f"{len(mesh['walls'])} walls")
tree = get("/tree")
print(f"GET /tree   -> {len(tree['nodes'])} nodes, kind={tree['kind']}")

for alpha in (3, 2, 1):
    cut = get(f"/cut?alpha={alpha}")
    print(f"GET /cut?alpha={alpha} -> "
          f"{[c['members'] for c in cut['components']]}")

peak = get("/peak?node=root")
print(f"GET /peak?node=root -> {peak['size']} members")

fields = get("/fields")
print("GET /fields ->", [f["name"] for f in fields["fields"]])

req = urllib.request.Request(
    base + "/layout2d",
    data=json.dumps({"vertices": peak["members"][:5]}).encode(),
    headers={"Content-Type": "application/json"}, method="POST")
with urllib.request.urlopen(req, timeout=30) as resp:
    layout = json.loads(resp.read())
print(f"POST /layout2d -> {len(layout['positions'])} positions, "
      f"{len(layout['edges'])} edges")

service.stop()
print("\nservice stopped")
