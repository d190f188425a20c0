"""Fusion graph construction"""

from .difference import difference_matrix, rank_reduce, reduce_graph, row_space_residual
from .weights import default_knn, gaussian_knn_weights, median_heuristic_phi, variance_sparsity_weights

__all__ = [
    "default_knn",
    "difference_matrix",
    "gaussian_knn_weights",
    "median_heuristic_phi",
    "rank_reduce",
    "reduce_graph",
    "row_space_residual",
    "variance_sparsity_weights",
]
