import numpy as np
import pytest

from graphterrain import (
    CapExceededError,
    EdgeScalarGraph,
    ScalarGraph,
    build_edge_scalar_tree,
    build_edge_tree_naive_dual,
    enumerate_edge_components_bruteforce,
    enumerate_maximal_components_bruteforce,
    postprocess_super_tree,
)

from conftest import path_graph, random_edge_scalar_graph, triangle_edge_graph


class TestVertexEnumeration:
    def test_path_two_plateaus(self):
        report = enumerate_maximal_components_bruteforce(
            path_graph([3.0, 1.0, 2.0]), 2.0)
        assert report.components == {frozenset({0}), frozenset({2})}

    def test_alpha_at_minimum(self):
        g = path_graph([3.0, 1.0, 2.0])
        report = enumerate_maximal_components_bruteforce(g, 1.0)
        assert report.components == {frozenset({0, 1, 2})}

    def test_alpha_above_max(self):
        g = path_graph([3.0, 1.0, 2.0])
        assert enumerate_maximal_components_bruteforce(g, 9.0).components \
            == frozenset()

    def test_permutation_invariance(self, rng):
        g = ScalarGraph.from_edges([(0, 1), (1, 2), (2, 3), (0, 3)],
                                   vertex_scalar=[4.0, 1.0, 3.0, 2.0])
        perm = np.array([2, 0, 3, 1])
        edges = [(perm[a], perm[b]) for a, b in g.edge_array()]
        scal = np.empty(4)
        scal[perm] = g.vertex_scalar
        h = ScalarGraph.from_edges(edges, num_vertices=4, vertex_scalar=scal)
        for alpha in np.unique(g.vertex_scalar):
            a = enumerate_maximal_components_bruteforce(g, alpha).components
            b = enumerate_maximal_components_bruteforce(h, alpha).components
            relabeled = frozenset(frozenset(int(perm[v]) for v in comp)
                                  for comp in a)
            assert relabeled == b


class TestEdgeEnumeration:
    def test_triangle_top_two(self):
        report = enumerate_edge_components_bruteforce(triangle_edge_graph(), 2.0)
        assert report.components == {frozenset({0, 1})}

    def test_above_max_empty(self):
        report = enumerate_edge_components_bruteforce(triangle_edge_graph(), 9.0)
        assert report.components == frozenset()

    def test_disjoint_edges_singletons(self):
        g = ScalarGraph.from_edges([(0, 1), (2, 3)])
        eg = EdgeScalarGraph(g, [1.0, 1.0])
        report = enumerate_edge_components_bruteforce(eg, 1.0)
        assert report.components == {frozenset({0}), frozenset({1})}


class TestNaiveDual:
    def test_triangle_matches_optimized(self):
        eg = triangle_edge_graph()
        naive = postprocess_super_tree(build_edge_tree_naive_dual(eg))
        fast = postprocess_super_tree(build_edge_scalar_tree(eg))
        assert naive.node_count == fast.node_count
        assert [set(map(int, naive.node_members(n)))
                for n in range(naive.node_count)] \
            == [set(map(int, fast.node_members(n)))
                for n in range(fast.node_count)]

    def test_single_edge(self):
        g = ScalarGraph.from_edges([(0, 1)])
        tree = build_edge_tree_naive_dual(EdgeScalarGraph(g, [1.0]))
        assert tree.node_count == 1

    def test_star_dual_is_triangle(self):
        # all three spokes meet at the hub, so the dual is fully connected
        g = ScalarGraph.from_edges([(0, 1), (0, 2), (0, 3)])
        eg = EdgeScalarGraph(g, [3.0, 2.0, 1.0])
        tree = build_edge_tree_naive_dual(eg)
        assert tree.node_count == 3
        assert len(tree.roots) == 1
        report = enumerate_edge_components_bruteforce(eg, 1.0)
        assert report.components == {frozenset({0, 1, 2})}

    def test_memory_cap(self):
        hub = ScalarGraph.from_edges([(0, i) for i in range(1, 12_000)])
        eg = EdgeScalarGraph(hub, np.ones(hub.edge_count))
        with pytest.raises(CapExceededError):
            build_edge_tree_naive_dual(eg)

    def test_random_equivalence(self, rng):
        from graphterrain import cut_at_alpha

        for _ in range(10):
            eg = random_edge_scalar_graph(rng, max_edges=60)
            naive = postprocess_super_tree(build_edge_tree_naive_dual(eg))
            for alpha in np.unique(eg.edge_scalar):
                got = cut_at_alpha(naive, alpha).member_sets()
                want = enumerate_edge_components_bruteforce(eg, alpha).components
                assert got == want
