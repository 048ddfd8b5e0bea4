import numpy as np
import pytest

from graphterrain import (
    CapExceededError,
    EdgeScalarGraph,
    ScalarGraph,
    betweenness_field,
    degree_field,
    kcore_field,
    ktruss_field,
)

from conftest import (
    betweenness_bruteforce,
    kcore_bruteforce,
    ktruss_bruteforce,
    random_scalar_graph,
)


def star_graph(leaves=3):
    return ScalarGraph.from_edges([(0, i) for i in range(1, leaves + 1)])


def triangle():
    return ScalarGraph.from_edges([(0, 1), (0, 2), (1, 2)])


def complete(n):
    return ScalarGraph.from_edges([(i, j) for i in range(n)
                                   for j in range(i + 1, n)])


class TestDegree:
    def test_star(self):
        assert list(degree_field(star_graph()).values) == [3, 1, 1, 1]

    def test_triangle(self):
        assert list(degree_field(triangle()).values) == [2, 2, 2]

    def test_edgeless(self):
        g = ScalarGraph.from_edges([], num_vertices=2)
        assert list(degree_field(g).values) == [0, 0]


class TestCoreness:
    def test_triangle(self):
        assert list(kcore_field(triangle()).values) == [2, 2, 2]

    def test_star(self):
        assert list(kcore_field(star_graph()).values) == [1, 1, 1, 1]

    def test_k4_with_pendant(self):
        g = ScalarGraph.from_edges([(i, j) for i in range(4)
                                    for j in range(i + 1, 4)] + [(3, 4)])
        assert list(kcore_field(g).values) == [3, 3, 3, 3, 1]

    def test_matches_subset_enumeration(self, rng):
        for _ in range(25):
            g = random_scalar_graph(rng, max_vertices=12)
            assert list(kcore_field(g).values) == kcore_bruteforce(g)

    def test_bounded_by_degree(self, rng):
        for _ in range(10):
            g = random_scalar_graph(rng, max_vertices=60)
            assert np.all(kcore_field(g).values <= degree_field(g).values)


class TestTrussness:
    def test_triangle(self):
        assert list(ktruss_field(triangle()).values) == [1, 1, 1]

    def test_k4(self):
        assert list(ktruss_field(complete(4)).values) == [2] * 6

    def test_path_no_triangles(self):
        g = ScalarGraph.from_edges([(0, 1), (1, 2), (2, 3)])
        assert list(ktruss_field(g).values) == [0, 0, 0]

    def test_matches_subset_enumeration(self, rng):
        seen = 0
        while seen < 15:
            g = random_scalar_graph(rng, max_vertices=7)
            if g.edge_count == 0 or g.edge_count > 12:
                continue
            seen += 1
            eg = EdgeScalarGraph(g)
            assert list(ktruss_field(g).values) == ktruss_bruteforce(eg)

    def test_zero_iff_no_triangle(self, rng):
        for _ in range(10):
            g = random_scalar_graph(rng, max_vertices=25)
            eg = EdgeScalarGraph(g)
            values = ktruss_field(g).values
            nbr = [set(map(int, g.neighbors(v))) for v in range(g.vertex_count)]
            for e, (u, v) in enumerate(eg.edges):
                in_triangle = bool(nbr[int(u)] & nbr[int(v)])
                assert (values[e] == 0) == (not in_triangle)

    def test_bounded_by_endpoint_degrees(self, rng):
        for _ in range(10):
            g = random_scalar_graph(rng, max_vertices=30)
            eg = EdgeScalarGraph(g)
            deg = degree_field(g).values
            values = ktruss_field(g).values
            for e, (u, v) in enumerate(eg.edges):
                assert values[e] <= min(deg[int(u)], deg[int(v)]) - 1


class TestBetweenness:
    def test_path(self):
        g = ScalarGraph.from_edges([(0, 1), (1, 2)])
        assert list(betweenness_field(g).values) == [0.0, 1.0, 0.0]

    def test_star(self):
        assert list(betweenness_field(star_graph()).values) == [3.0, 0, 0, 0]

    def test_triangle_all_zero(self):
        assert list(betweenness_field(triangle()).values) == [0.0, 0.0, 0.0]

    def test_complete_graph_zero(self):
        assert np.allclose(betweenness_field(complete(6)).values, 0.0)

    def test_matches_pair_counting(self, rng):
        for _ in range(15):
            g = random_scalar_graph(rng, max_vertices=25)
            got = betweenness_field(g).values
            want = betweenness_bruteforce(g)
            assert np.allclose(got, want, atol=1e-9)

    def test_normalization(self):
        g = ScalarGraph.from_edges([(0, 1), (1, 2)])
        norm = betweenness_field(g, normalized=True).values
        assert norm[1] == pytest.approx(1.0)  # 1 / ((3-1)(3-2)/2)

    def test_cap(self):
        g = ScalarGraph.from_edges([(0, 1)])
        with pytest.raises(CapExceededError, match="subsample"):
            betweenness_field(g, vertex_cap=1)
