import numpy as np
import scipy.sparse as sp

from src.graph import (
    default_knn,
    difference_matrix,
    gaussian_knn_weights,
    median_heuristic_phi,
    rank_reduce,
    reduce_graph,
    row_space_residual,
    variance_sparsity_weights,
)
from src.models import DifferenceMatrix, FusionGraph, InvalidInputError, SparsityWeights
from tests import TestCase
from tests.helpers import random_connected_graph


class TestGaussianKnnWeights(TestCase):

    def test_identical_rows_have_unit_weight(self):
        X = np.array([[1.0, 2.0], [1.0, 2.0], [5.0, 5.0]])
        graph = gaussian_knn_weights(X, k=1, phi=0.3)
        self.assertIn((0, 1, 1.0), graph.edges)

    def test_full_neighbourhood_is_complete(self):
        X = self.rng.standard_normal((6, 3))
        graph = gaussian_knn_weights(X, k=5)
        self.assertEqual(graph.m, 15)

    def test_three_points_on_a_line(self):
        # squared distances: (0,1) = 1, (1,2) = 4, (0,2) = 9
        X = np.array([[0.0], [1.0], [3.0]])
        graph = gaussian_knn_weights(X, k=1, phi=0.5)
        self.assertEqual([(i, j) for i, j, _ in graph.edges], [(0, 1), (1, 2)])
        self.assertAllClose(graph.weights, [np.exp(-0.5), np.exp(-2.0)], atol=1e-15)
        self.assertTrue(graph.is_connected())

    def test_disconnected_neighbourhoods_are_repaired(self):
        X = np.vstack([self.rng.normal(0, 0.1, (4, 2)), self.rng.normal(50, 0.1, (4, 2))])
        with self.assertLogs("src.graph.weights", level="WARNING"):
            graph = gaussian_knn_weights(X, k=1)
        self.assertTrue(graph.is_connected())
        self.assertTrue(np.all(graph.weights > 0))

    def test_auto_phi_and_default_k(self):
        self.assertEqual(default_knn(15), 5)
        self.assertEqual(default_knn(4), 3)
        self.assertEqual(median_heuristic_phi(np.array([1.0, 2.0, 4.0])), 0.5)
        self.assertEqual(median_heuristic_phi(np.zeros(3)), 1.0)

    def test_row_order_only_relabels(self):
        X = self.rng.standard_normal((9, 4))
        perm = self.rng.permutation(9)
        a = gaussian_knn_weights(X, k=3)
        b = gaussian_knn_weights(X[perm], k=3)
        relabelled = {(min(perm[i], perm[j]), max(perm[i], perm[j])): w for i, j, w in b.edges}
        self.assertEqual(set(relabelled), {(i, j) for i, j, _ in a.edges})
        for i, j, w in a.edges:
            self.assertAlmostEqual(relabelled[(i, j)], w, delta=1e-12)

    def test_bad_arguments(self):
        with self.assertRaises(InvalidInputError):
            gaussian_knn_weights(np.ones((1, 3)))
        with self.assertRaises(InvalidInputError):
            gaussian_knn_weights(np.ones((4, 3)), k=4)
        with self.assertRaises(InvalidInputError):
            gaussian_knn_weights(np.ones((4, 3)), k=0)


class TestSparsityWeights(TestCase):

    def test_equal_variances(self):
        X = np.array([[1.0, -1.0, 2.0, 0.0], [-1.0, 1.0, 0.0, 2.0]])
        omega = variance_sparsity_weights(X).omega
        self.assertAllClose(omega, np.full(4, 0.75), atol=1e-15)

    def test_single_varying_column(self):
        X = np.array([[1.0, 3.0, 3.0, 3.0], [1.0 + np.sqrt(2.0), 3.0, 3.0, 3.0]])
        omega = variance_sparsity_weights(X).omega
        self.assertAllClose(omega, [0.0, 1.0, 1.0, 1.0], atol=1e-12)

    def test_constant_matrix_is_uniform(self):
        omega = variance_sparsity_weights(np.ones((5, 3))).omega
        self.assertAllClose(omega, np.ones(3), atol=0)

    def test_weights_sum_rule(self):
        X = self.rng.standard_normal((7, 16))
        omega = variance_sparsity_weights(X).omega
        self.assertAlmostEqual(float(np.sum(1.0 - omega)), 1.0, delta=1e-12)
        self.assertTrue(np.all((omega >= 0) & (omega <= 1)))

    def test_needs_two_rows(self):
        with self.assertRaises(InvalidInputError):
            variance_sparsity_weights(np.ones((1, 4)))

    def test_model_rejects_all_zero(self):
        with self.assertRaises(InvalidInputError):
            SparsityWeights(np.zeros(3))


class TestFusionGraph(TestCase):

    def test_edges_are_sorted_and_validated(self):
        graph = FusionGraph.from_edges(4, [(2, 3, 1.0), (1, 0, 0.5), (0, 2, 2.0)])
        self.assertEqual([(i, j) for i, j, _ in graph.edges], [(0, 1), (0, 2), (2, 3)])
        with self.assertRaises(InvalidInputError):
            FusionGraph.from_edges(3, [(0, 1, 1.0), (1, 0, 1.0)])
        with self.assertRaises(InvalidInputError):
            FusionGraph.from_edges(3, [(0, 1, 0.0)])

    def test_components_under_mask(self):
        graph = FusionGraph.from_edges(3, [(0, 1, 1.0), (1, 2, 1.0)])
        count, labels = graph.components(np.array([True, False]))
        self.assertEqual(count, 2)
        self.assertEqual(labels[0], labels[1])
        self.assertNotEqual(labels[1], labels[2])


class TestDifferenceMatrix(TestCase):

    def test_single_edge(self):
        D = difference_matrix(FusionGraph.from_edges(2, [(0, 1, 1.0)]))
        self.assertAllClose(D.matrix.toarray(), [[1.0, -1.0]], atol=0)

    def test_complete_graph_rank(self):
        graph = FusionGraph.from_edges(3, [(0, 1, 1.0), (0, 2, 1.0), (1, 2, 1.0)])
        D = difference_matrix(graph)
        self.assertEqual(D.shape, (3, 3))
        self.assertEqual(np.linalg.matrix_rank(D.matrix.toarray()), 2)

    def test_rows_are_differences(self):
        graph = random_connected_graph(8, self.rng)
        D = difference_matrix(graph)
        U = self.rng.standard_normal((8, 5))
        DU = D @ U
        for r, (i, j, _) in enumerate(graph.edges):
            self.assertAllClose(DU[r], U[i] - U[j], atol=1e-15)
        self.assertAllClose(D @ np.ones(8), np.zeros(graph.m), atol=0)
        self.assertEqual(np.linalg.matrix_rank(D.matrix.toarray()), 7)


class TestRankReduce(TestCase):

    def test_full_rank_is_identity(self):
        graph = FusionGraph.from_edges(4, [(0, 1, 1.0), (1, 2, 1.0), (2, 3, 1.0)])
        reduction = rank_reduce(difference_matrix(graph))
        self.assertTrue(reduction.is_identity)
        self.assertEqual(reduction.rank, 3)

    def test_complete_graph_keeps_spanning_rows(self):
        graph = FusionGraph.from_edges(3, [(0, 1, 1.0), (0, 2, 1.0), (1, 2, 1.0)])
        D = difference_matrix(graph)
        reduction = rank_reduce(D)
        self.assertEqual(reduction.matrix.m, 2)
        self.assertEqual(np.linalg.matrix_rank(reduction.matrix.matrix.toarray()), 2)
        self.assertLess(row_space_residual(D, reduction.matrix), 1e-10)

    def test_duplicate_row_is_dropped(self):
        dense = np.array([[1.0, -1.0, 0.0], [1.0, -1.0, 0.0], [0.0, 1.0, -1.0]])
        reduction = rank_reduce(DifferenceMatrix(sp.csr_matrix(dense)))
        self.assertEqual(reduction.rank, 2)
        self.assertEqual(reduction.matrix.m, 2)

    def test_reduced_graph_is_spanning_forest(self):
        graph = random_connected_graph(10, self.rng, extra=12)
        reduced, reduction = reduce_graph(graph)
        self.assertEqual(reduced.m, 9)
        self.assertTrue(reduced.is_connected())
        self.assertLess(row_space_residual(difference_matrix(graph), reduction.matrix), 1e-10)
