import json
import subprocess
import sys
import urllib.error
import urllib.request

import numpy as np
import pytest

from graphterrain import cut_at_alpha, load_tree
from graphterrain.service import TerrainService
from graphterrain.session import build_session


def run_cli(*args, cwd=None):
    return subprocess.run([sys.executable, "-m", "graphterrain.cli", *args],
                          capture_output=True, text=True, cwd=cwd)


@pytest.fixture
def demo_graph(tmp_path):
    path = tmp_path / "graph.txt"
    path.write_text("# demo\n0 1\n0 2\n1 2\n2 3\n3 4\n4 5\n3 5\n5 6\n")
    return path


@pytest.fixture
def demo_scalars(tmp_path):
    path = tmp_path / "scalars.txt"
    path.write_text("".join(f"{v} {s}\n" for v, s in
                            [(0, 3), (1, 3), (2, 3), (3, 2), (4, 2), (5, 2), (6, 1)]))
    return path


class TestBuildCommand:
    def test_kcore_build(self, tmp_path, demo_graph):
        out = tmp_path / "tree.json"
        result = run_cli("build", "--graph", str(demo_graph),
                         "--scalar", "kcore", "--out", str(out))
        assert result.returncode == 0, result.stderr
        assert "tree nodes:" in result.stdout
        assert "construction seconds:" in result.stdout
        tree = load_tree(out)
        assert tree.kind == "vertex"
        assert tree.postprocessed

    def test_ktruss_defaults_to_edge_kind(self, tmp_path, demo_graph):
        out = tmp_path / "tree.json"
        result = run_cli("build", "--graph", str(demo_graph),
                         "--scalar", "ktruss", "--out", str(out))
        assert result.returncode == 0, result.stderr
        assert load_tree(out).kind == "edge"

    def test_file_scalar_source(self, tmp_path, demo_graph, demo_scalars):
        out = tmp_path / "tree.json"
        result = run_cli("build", "--graph", str(demo_graph),
                         "--scalar", f"file:{demo_scalars}", "--out", str(out))
        assert result.returncode == 0, result.stderr

    def test_empty_graph_exit_2(self, tmp_path):
        empty = tmp_path / "empty.txt"
        empty.write_text("# nothing\n")
        result = run_cli("build", "--graph", str(empty),
                         "--scalar", "kcore", "--out", str(tmp_path / "t.json"))
        assert result.returncode == 2
        assert "no edges" in result.stderr

    def test_deterministic_output(self, tmp_path, demo_graph):
        a, b = tmp_path / "a.json", tmp_path / "b.json"
        assert run_cli("build", "--graph", str(demo_graph), "--scalar", "kcore",
                       "--out", str(a)).returncode == 0
        assert run_cli("build", "--graph", str(demo_graph), "--scalar", "kcore",
                       "--out", str(b)).returncode == 0
        assert a.read_bytes() == b.read_bytes()


class TestMeshCommand:
    def test_mesh_from_tree(self, tmp_path, demo_graph):
        tree_path = tmp_path / "tree.json"
        mesh_path = tmp_path / "mesh.json"
        run_cli("build", "--graph", str(demo_graph), "--scalar", "kcore",
                "--out", str(tree_path))
        result = run_cli("mesh", "--tree", str(tree_path),
                         "--out", str(mesh_path), "--obj",
                         str(tmp_path / "mesh.obj"))
        assert result.returncode == 0, result.stderr
        doc = json.loads(mesh_path.read_text())
        assert doc["palette"] == ["red", "yellow", "green", "blue"]
        assert (tmp_path / "mesh.obj").exists()

    def test_color_by_file(self, tmp_path, demo_graph, demo_scalars):
        tree_path = tmp_path / "tree.json"
        mesh_path = tmp_path / "mesh.json"
        run_cli("build", "--graph", str(demo_graph), "--scalar", "kcore",
                "--out", str(tree_path))
        result = run_cli("mesh", "--tree", str(tree_path),
                         "--color-by", f"file:{demo_scalars}",
                         "--out", str(mesh_path))
        assert result.returncode == 0, result.stderr
        doc = json.loads(mesh_path.read_text())
        assert doc["color_source"].endswith("scalars.txt")

    def test_missing_tree_exit_2(self, tmp_path):
        result = run_cli("mesh", "--tree", str(tmp_path / "nope.json"),
                         "--out", str(tmp_path / "mesh.json"))
        assert result.returncode == 2

    def test_deterministic_mesh(self, tmp_path, demo_graph):
        tree_path = tmp_path / "tree.json"
        run_cli("build", "--graph", str(demo_graph), "--scalar", "kcore",
                "--out", str(tree_path))
        a, b = tmp_path / "a.json", tmp_path / "b.json"
        run_cli("mesh", "--tree", str(tree_path), "--out", str(a))
        run_cli("mesh", "--tree", str(tree_path), "--out", str(b))
        assert a.read_bytes() == b.read_bytes()


class TestCorrCommand:
    def test_self_correlation(self, tmp_path, demo_graph):
        result = run_cli("corr", "--graph", str(demo_graph),
                         "--field-a", "degree", "--field-b", "degree")
        assert result.returncode == 0, result.stderr
        assert "gci: 1.0" in result.stdout

    def test_constant_field_warns(self, tmp_path, demo_graph, demo_scalars):
        const = tmp_path / "const.txt"
        const.write_text("".join(f"{v} 2.0\n" for v in range(7)))
        result = run_cli("corr", "--graph", str(demo_graph),
                         "--field-a", f"file:{const}", "--field-b", "degree")
        assert result.returncode == 0, result.stderr
        assert "gci: 0.0" in result.stdout
        assert "zero-variance neighborhoods: 7" in result.stdout

    def test_writes_lci_file(self, tmp_path, demo_graph):
        out = tmp_path / "lci.txt"
        result = run_cli("corr", "--graph", str(demo_graph),
                         "--field-a", "degree", "--field-b", "kcore",
                         "--out", str(out))
        assert result.returncode == 0, result.stderr
        assert len(out.read_text().splitlines()) == 7


# ----------------------------------------------------------------------
# service


@pytest.fixture(scope="module")
def service(tmp_path_factory):
    base = tmp_path_factory.mktemp("svc")
    graph = base / "graph.txt"
    graph.write_text("0 1\n0 2\n1 2\n2 3\n3 4\n4 5\n3 5\n5 6\n")
    session = build_session(str(graph), "kcore", "vertex")
    svc = TerrainService(session, port=0).start()
    yield session, f"http://127.0.0.1:{svc.port}"
    svc.stop()


def get(url, expect=200):
    try:
        with urllib.request.urlopen(url, timeout=10) as resp:
            return resp.status, json.loads(resp.read())
    except urllib.error.HTTPError as err:
        return err.code, json.loads(err.read() or b"{}")


def post(url, payload, expect=200):
    req = urllib.request.Request(
        url, data=json.dumps(payload).encode(),
        headers={"Content-Type": "application/json"}, method="POST")
    try:
        with urllib.request.urlopen(req, timeout=30) as resp:
            return resp.status, json.loads(resp.read())
    except urllib.error.HTTPError as err:
        return err.code, json.loads(err.read() or b"{}")


class TestService:
    def test_health(self, service):
        _, base = service
        assert get(f"{base}/health") == (200, {"status": "ok"})

    def test_mesh_and_tree_documents(self, service):
        session, base = service
        status, mesh = get(f"{base}/mesh")
        assert status == 200
        assert len(mesh["boundaries"]) >= session.tree.node_count
        status, tree = get(f"{base}/tree")
        assert status == 200
        assert len(tree["nodes"]) == session.tree.node_count

    def test_cut_above_max_empty(self, service):
        session, base = service
        top = float(session.tree.scalars.max())
        status, doc = get(f"{base}/cut?alpha={top + 1}")
        assert status == 200
        assert doc["components"] == []

    def test_cut_matches_library(self, service):
        session, base = service
        for alpha in np.unique(session.tree.scalars):
            _, doc = get(f"{base}/cut?alpha={alpha}")
            got = {frozenset(c["members"]) for c in doc["components"]}
            want = {frozenset(int(session.graph.original_ids[m])
                              for m in comp.members)
                    for comp in cut_at_alpha(session.tree, alpha).components}
            assert got == want

    def test_cut_malformed_400(self, service):
        _, base = service
        assert get(f"{base}/cut?alpha=spam")[0] == 400
        assert get(f"{base}/cut")[0] == 400

    def test_peak_root_returns_all(self, service):
        session, base = service
        status, doc = get(f"{base}/peak?node=root")
        assert status == 200
        assert doc["size"] == session.graph.vertex_count

    def test_peak_unknown_404(self, service):
        _, base = service
        assert get(f"{base}/peak?node=999")[0] == 404

    def test_fields_metadata(self, service):
        session, base = service
        status, doc = get(f"{base}/fields")
        assert status == 200
        names = {f["name"] for f in doc["fields"]}
        assert "self" in names and "degree" in names
        for f in doc["fields"]:
            assert len(f["node_classes"]) == session.tree.node_count
            assert set(f["node_classes"]) <= {0, 1, 2, 3}

    def test_layout2d(self, service):
        session, base = service
        ids = [int(i) for i in session.graph.original_ids[:4]]
        status, doc = post(f"{base}/layout2d", {"vertices": ids})
        assert status == 200
        assert {p["id"] for p in doc["positions"]} == set(ids)

    def test_layout2d_oversized_413(self, service, monkeypatch):
        import graphterrain.terrain as terrain_mod
        _, base = service
        monkeypatch.setattr(terrain_mod, "FORCE_LAYOUT_CAP", 2)
        assert post(f"{base}/layout2d", {"vertices": [0, 1, 2]})[0] == 413

    def test_layout2d_bad_body_400(self, service):
        _, base = service
        assert post(f"{base}/layout2d", {"nope": 1})[0] == 400

    def test_layout2d_unknown_vertex_400(self, service):
        _, base = service
        assert post(f"{base}/layout2d", {"vertices": [424242]})[0] == 400

    def test_unknown_endpoint_404(self, service):
        _, base = service
        assert get(f"{base}/nonsense")[0] == 404

    def test_gets_idempotent(self, service):
        _, base = service
        a = get(f"{base}/mesh")
        b = get(f"{base}/mesh")
        assert a == b
