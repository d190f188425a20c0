"""
Wavelet sparse convex clustering: transform rows, solve the sparse convex
clustering problem on the coefficients, back-transform the centroids.
"""

import logging
from typing import Optional

import numpy as np

from src.graph import gaussian_knn_weights, reduce_graph, variance_sparsity_weights
from src.models import (
    ClusteringResult,
    FusionGraph,
    InvalidInputError,
    ProblemSpec,
    SolveReport,
    SolverConfig,
    SparsityWeights,
    WaveletBasis,
)
from src.solvers import solve
from src.wavelet import pad_rows, transform_rows, truncate_rows

from .clusters import consolidate_centroids, extract_clusters, refit_centroids, support_from

logger = logging.getLogger(__name__)


def normalize_total_power(X, target: float) -> np.ndarray:
    """Scale each row so that its sum of squares equals `target`."""
    X = np.asarray(X, dtype=float)
    if target < 0:
        raise InvalidInputError("Target power must be nonnegative")
    power = np.sum(X**2, axis=1)
    if np.any(power == 0):
        raise InvalidInputError("Cannot normalize a zero row")
    return X * np.sqrt(target / power)[:, np.newaxis]


def _solve_on(
    coefficients: np.ndarray,
    lam: float,
    gamma: float,
    graph: FusionGraph,
    omega: SparsityWeights,
    config: SolverConfig,
    rank_reduce: bool,
):
    if rank_reduce:
        full_edges = graph.m
        graph, _ = reduce_graph(graph)
        logger.info("Rank reduction kept %d of %d edges", graph.m, full_edges)
    spec = ProblemSpec.from_graph(coefficients, graph, lam, gamma, omega)
    report = solve(spec, config)
    return graph, report


def wavelet_sparse_convex_cluster(
    X,
    basis: WaveletBasis,
    lam: float,
    gamma: float,
    graph: Optional[FusionGraph] = None,
    omega: Optional[SparsityWeights] = None,
    config: Optional[SolverConfig] = None,
    *,
    knn: Optional[int] = None,
    phi="auto",
    rank_reduce: bool = False,
    refit: bool = False,
    padding_mode: str = "zero",
) -> ClusteringResult:
    """
    Cluster the rows of X with a fusion penalty on centroid differences and a
    group penalty on wavelet coefficient columns.

    Rows are padded to a power-of-two length first. Without an explicit graph
    the Gaussian k-NN weights are built on the coefficients, and without
    sparsity weights the variance weights are used.
    """
    config = config or SolverConfig()
    padded, layout = pad_rows(X, basis, mode=padding_mode)
    Xstar = transform_rows(padded, basis, "forward")
    if graph is None:
        graph = gaussian_knn_weights(Xstar, k=knn, phi=phi)
    if omega is None:
        omega = variance_sparsity_weights(Xstar)
    if len(omega) != Xstar.shape[1]:
        raise InvalidInputError(f"Expected {Xstar.shape[1]} sparsity weights, got {len(omega)}")

    graph, report = _solve_on(Xstar, lam, gamma, graph, omega, config, rank_reduce)

    labels = extract_clusters(report.V1, graph)
    support = support_from(report.V2)
    if refit:
        centroids_wavelet = refit_centroids(Xstar, labels, support)
    else:
        centroids_wavelet = consolidate_centroids(report.U_hat, labels, support)
    centroids = truncate_rows(transform_rows(centroids_wavelet, basis, "inverse"), layout)

    logger.info(
        "CWC lambda=%g gamma=%g: %d clusters, %d of %d coefficients active",
        lam,
        gamma,
        int(np.unique(labels).size),
        int(support.sum()),
        support.size,
    )
    return ClusteringResult(
        centroids=centroids,
        centroids_wavelet=centroids_wavelet,
        labels=labels,
        support_mask=support,
        objective=report.objective,
        report=report,
        method="CWC",
        layout=layout,
        params={
            "lambda": float(lam),
            "gamma": float(gamma),
            "basis": basis.family,
            "levels": layout.levels,
            "edges": graph.m,
            "refit": refit,
            "rank_reduce": rank_reduce,
        },
    )


def convex_cluster(
    X,
    lam: float,
    graph: Optional[FusionGraph] = None,
    config: Optional[SolverConfig] = None,
    *,
    knn: Optional[int] = None,
    phi="auto",
) -> tuple[np.ndarray, np.ndarray, SolveReport]:
    """
    Plain convex clustering (no sparsity penalty) in the coordinates given.
    Returns (labels, consolidated centroids, solver report).
    """
    X = np.asarray(X, dtype=float)
    config = config or SolverConfig()
    if graph is None:
        graph = gaussian_knn_weights(X, k=knn, phi=phi)
    spec = ProblemSpec.from_graph(X, graph, lam, 0.0)
    report = solve(spec, config)
    labels = extract_clusters(report.V1, graph)
    centroids = consolidate_centroids(report.U_hat, labels, np.ones(X.shape[1], dtype=bool))
    return labels, centroids, report
