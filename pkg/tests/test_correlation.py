import numpy as np
import pytest

from graphterrain import ScalarGraph, gci, lci, outlier_scores

from conftest import lci_reference, path_graph, random_scalar_graph


class TestLocalIndex:
    def test_self_correlation_is_one(self):
        g = ScalarGraph.from_edges([(0, 1), (1, 2)])
        a = [1.0, 5.0, 2.0]
        result = lci(g, a, a)
        assert np.allclose(result.lci, 1.0)

    def test_negated_field_is_minus_one(self):
        g = ScalarGraph.from_edges([(0, 1), (1, 2)])
        a = np.array([1.0, 5.0, 2.0])
        result = lci(g, a, -a)
        assert np.allclose(result.lci, -1.0)

    def test_path_center_value(self):
        # center of a 3-path sees all three pairs: (1,2), (2,4), (3,7)
        g = path_graph([0, 0, 0])
        a = [1.0, 2.0, 3.0]
        b = [2.0, 4.0, 7.0]
        result = lci(g, a, b)
        expected = np.corrcoef(a, b)[0, 1]  # population form cancels in r
        assert result.lci[1] == pytest.approx(expected, abs=1e-12)
        assert result.lci[1] == pytest.approx(0.99339927, abs=1e-6)

    def test_matches_reference(self, rng):
        for _ in range(30):
            g = random_scalar_graph(rng, max_vertices=40)
            a = rng.random(g.vertex_count) * 10
            b = rng.random(g.vertex_count) * 3 - 1
            hops = int(rng.integers(1, 3))
            got = lci(g, a, b, hops=hops)
            want, zero = lci_reference(g, a, b, hops=hops)
            assert np.allclose(got.lci, want, atol=1e-9)
            assert got.zero_variance_count == zero

    def test_zero_variance_neutral(self):
        g = ScalarGraph.from_edges([(0, 1), (1, 2)])
        result = lci(g, [1.0, 1.0, 1.0], [1.0, 2.0, 3.0])
        assert np.allclose(result.lci, 0.0)
        assert result.zero_variance_count == 3

    def test_affine_invariance(self, rng):
        for _ in range(10):
            g = random_scalar_graph(rng, max_vertices=30)
            a = rng.random(g.vertex_count)
            b = rng.random(g.vertex_count)
            base = lci(g, a, b)
            scaled = lci(g, 3.5 * a + 2.0, b)
            mask = base.lci != 0.0
            assert np.allclose(base.lci[mask], scaled.lci[mask], atol=1e-9)

    def test_symmetric_in_fields(self, rng):
        for _ in range(10):
            g = random_scalar_graph(rng, max_vertices=30)
            a = rng.random(g.vertex_count)
            b = rng.random(g.vertex_count)
            assert np.allclose(lci(g, a, b).lci, lci(g, b, a).lci, atol=1e-12)

    def test_bounded_by_one(self, rng):
        for _ in range(10):
            g = random_scalar_graph(rng, max_vertices=50)
            a = rng.random(g.vertex_count)
            b = rng.random(g.vertex_count)
            assert np.all(np.abs(lci(g, a, b).lci) <= 1 + 1e-12)


class TestGlobalIndex:
    def test_all_ones(self):
        assert gci([1.0, 1.0, 1.0]) == 1.0

    def test_balanced(self):
        assert gci([1.0, -1.0]) == 0.0

    def test_empty_graph_rejected(self):
        with pytest.raises(ValueError):
            gci([])


class TestOutlierScores:
    def test_negation(self):
        assert outlier_scores([1.0])[0] == -1.0
        assert outlier_scores([-0.7])[0] == pytest.approx(0.7)

    def test_extrema_swap(self, rng):
        values = rng.random(50) * 2 - 1
        scores = outlier_scores(values)
        assert np.argmax(scores) == np.argmin(values)
