"""Fusion weights over observations and sparsity weights over coefficients."""

import logging

import numpy as np
from scipy.sparse.csgraph import minimum_spanning_tree
from scipy.spatial.distance import pdist, squareform

from src.models import FusionGraph, InvalidInputError, SparsityWeights

logger = logging.getLogger(__name__)

DEFAULT_KNN = 5


def default_knn(n: int) -> int:
    return DEFAULT_KNN if n > DEFAULT_KNN else n - 1


def median_heuristic_phi(sq_distances: np.ndarray) -> float:
    """phi = 1 / median pairwise squared distance (1.0 when all points coincide)."""
    median = float(np.median(sq_distances)) if sq_distances.size else 0.0
    return 1.0 / median if median > 0 else 1.0


def gaussian_knn_weights(X, k: int | None = None, phi: float | str = "auto") -> FusionGraph:
    """
    Sparse Gaussian kernel weights w_ij = exp(-phi ||X_i - X_j||^2).

    An edge is kept when j is among the k nearest neighbours of i or vice
    versa. A disconnected neighbour graph is repaired by adding the edges of a
    minimum spanning tree over all pairwise distances.
    """
    X = np.asarray(X, dtype=float)
    if X.ndim != 2:
        raise InvalidInputError("gaussian_knn_weights expects a matrix")
    n = X.shape[0]
    if n < 2:
        raise InvalidInputError("At least two observations are needed to build a fusion graph")
    k = default_knn(n) if k is None else int(k)
    if not 1 <= k <= n - 1:
        raise InvalidInputError(f"k must lie in [1, {n - 1}], got {k}")

    condensed = pdist(X, metric="sqeuclidean")
    if phi == "auto" or phi is None:
        phi = median_heuristic_phi(condensed)
    phi = float(phi)
    if not np.isfinite(phi) or phi <= 0:
        raise InvalidInputError(f"phi must be positive, got {phi}")
    sq = squareform(condensed)

    selected = np.zeros((n, n), dtype=bool)
    for i in range(n):
        order = np.argsort(sq[i], kind="stable")
        neighbours = [j for j in order if j != i][:k]
        selected[i, neighbours] = True
    selected |= selected.T

    candidate = FusionGraph.from_edges(
        n, [(i, j, 1.0) for i, j in zip(*np.nonzero(np.triu(selected, k=1)))]
    )
    if not candidate.is_connected():
        # MST on shifted distances: ordering is what matters and zero entries
        # would otherwise read as missing edges.
        tree = minimum_spanning_tree(np.triu(sq + 1.0, k=1)).tocoo()
        added = 0
        for i, j in zip(tree.row, tree.col):
            a, b = min(i, j), max(i, j)
            if not selected[a, b]:
                added += 1
            selected[a, b] = selected[b, a] = True
        logger.warning("k-NN graph (k=%d) was disconnected; added %d spanning-tree edges", k, added)

    rows, cols = np.nonzero(np.triu(selected, k=1))
    weights = np.exp(-phi * sq[rows, cols])
    weights = np.maximum(weights, np.finfo(float).tiny)
    logger.debug("Fusion graph: n=%d, edges=%d, k=%d, phi=%.6g", n, rows.size, k, phi)
    return FusionGraph(n=n, pairs=np.column_stack([rows, cols]), weights=weights)


def variance_sparsity_weights(Xstar) -> SparsityWeights:
    """
    omega_j = 1 - zeta_j / ||zeta||_1 with zeta_j the sample variance of
    coefficient column j. A matrix without variance yields uniform weights.
    """
    Xstar = np.asarray(Xstar, dtype=float)
    if Xstar.ndim != 2 or Xstar.shape[0] < 2:
        raise InvalidInputError("Sample variances need at least two observations")
    zeta = Xstar.var(axis=0, ddof=1)
    total = float(np.abs(zeta).sum())
    if total == 0.0:
        logger.warning("All coefficient variances are zero; using uniform sparsity weights")
        return SparsityWeights.uniform(Xstar.shape[1])
    omega = np.clip(1.0 - zeta / total, 0.0, 1.0)
    if not np.any(omega > 0):
        return SparsityWeights.uniform(Xstar.shape[1])
    return SparsityWeights(omega)
