"""Cluster extraction, centroid consolidation and centroid alignment."""

import numpy as np
from scipy.optimize import linear_sum_assignment

from src.models import FusionGraph, InvalidInputError


def relabel_by_first_appearance(labels) -> np.ndarray:
    """Rename labels to 0, 1, ... in the order they first occur."""
    labels = np.asarray(labels)
    _, first, inverse = np.unique(labels, return_index=True, return_inverse=True)
    rank = np.empty(first.size, dtype=np.int64)
    rank[np.argsort(first, kind="stable")] = np.arange(first.size)
    return rank[inverse.reshape(-1)]


def extract_clusters(V1, graph: FusionGraph) -> np.ndarray:
    """
    An edge is fused when its V1 row is exactly zero; clusters are the
    connected components of the fused edges.
    """
    V1 = np.asarray(V1)
    if V1.ndim != 2 or V1.shape[0] != graph.m:
        raise InvalidInputError(f"V1 must have one row per edge ({graph.m}), got shape {V1.shape}")
    fused = ~np.any(V1 != 0, axis=1)
    _, components = graph.components(fused)
    return relabel_by_first_appearance(components)


def support_from(V2) -> np.ndarray:
    """Columns carrying at least one nonzero entry."""
    return np.any(np.asarray(V2) != 0, axis=0)


def consolidate_centroids(U, labels, support_mask) -> np.ndarray:
    """Replace each cluster's rows by their mean, then zero columns outside the support."""
    U = np.asarray(U, dtype=float)
    labels = np.asarray(labels)
    consolidated = np.empty_like(U)
    for label in np.unique(labels):
        rows = labels == label
        consolidated[rows] = U[rows].mean(axis=0)
    consolidated[:, ~np.asarray(support_mask, dtype=bool)] = 0.0
    return consolidated


def refit_centroids(Xstar, labels, support_mask) -> np.ndarray:
    """Unpenalized cluster means of the data on the selected coefficients."""
    return consolidate_centroids(Xstar, labels, support_mask)


def class_means(X, labels) -> tuple[np.ndarray, np.ndarray]:
    """Distinct labels and the mean row of each class."""
    X = np.asarray(X, dtype=float)
    labels = np.asarray(labels)
    if labels.size != X.shape[0]:
        raise InvalidInputError(f"Got {labels.size} labels for {X.shape[0]} rows")
    classes = np.unique(labels)
    return classes, np.vstack([X[labels == c].mean(axis=0) for c in classes])


def _row_correlations(A: np.ndarray, B: np.ndarray) -> np.ndarray:
    A = A - A.mean(axis=1, keepdims=True)
    B = B - B.mean(axis=1, keepdims=True)
    norms = np.outer(np.linalg.norm(A, axis=1), np.linalg.norm(B, axis=1))
    with np.errstate(invalid="ignore", divide="ignore"):
        corr = (A @ B.T) / norms
    return np.nan_to_num(corr, nan=0.0)


def align_centroids(reference, estimated) -> tuple[np.ndarray, np.ndarray]:
    """
    Pair estimated centroids with reference centroids maximizing total
    correlation. Returns (order, correlations) where estimated[order[i]] is
    matched to reference[i]; unmatched reference rows get order -1.
    """
    reference = np.atleast_2d(np.asarray(reference, dtype=float))
    estimated = np.atleast_2d(np.asarray(estimated, dtype=float))
    if reference.shape[1] != estimated.shape[1]:
        raise InvalidInputError("Centroid sets differ in signal length")
    corr = _row_correlations(reference, estimated)
    rows, cols = linear_sum_assignment(corr, maximize=True)
    order = np.full(reference.shape[0], -1, dtype=np.int64)
    matched = np.full(reference.shape[0], np.nan)
    order[rows] = cols
    matched[rows] = corr[rows, cols]
    return order, matched
