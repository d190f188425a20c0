"""Clustering and support-recovery metrics."""

import numpy as np
from sklearn.metrics import adjusted_rand_score

from src.models import ClusteringResult, InvalidInputError, SyntheticDataset


def _labels(values, name: str) -> np.ndarray:
    array = np.asarray(values)
    if array.ndim != 1:
        raise InvalidInputError(f"{name} must be a vector of labels")
    return array


def adjusted_rand_index(a, b) -> float:
    """Pair-counting adjusted Rand index; 1.0 for identical partitions."""
    a, b = _labels(a, "a"), _labels(b, "b")
    if a.size != b.size:
        raise InvalidInputError(f"Label vectors differ in length ({a.size} vs {b.size})")
    if a.size < 2:
        raise InvalidInputError("ARI needs at least two labelled observations")
    return float(adjusted_rand_score(a, b))


def centroid_correlation(true_centroids_per_sample, estimated) -> float:
    """Pearson correlation of the two centroid matrices, vectorized."""
    truth = np.asarray(true_centroids_per_sample, dtype=float)
    estimate = np.asarray(estimated, dtype=float)
    if truth.shape != estimate.shape:
        raise InvalidInputError(f"Centroid shapes differ: {truth.shape} vs {estimate.shape}")
    x, y = truth.ravel(), estimate.ravel()
    if x.size < 2 or np.ptp(x) == 0 or np.ptp(y) == 0:
        raise InvalidInputError("Correlation is undefined for constant centroid matrices")
    return float(np.corrcoef(x, y)[0, 1])


def compression(U_wavelet) -> float:
    """Fraction of exactly-zero entries."""
    U = np.asarray(U_wavelet)
    if U.size == 0:
        return 1.0
    return float(np.count_nonzero(U == 0)) / U.size


def support_f1(true_support, estimated_support) -> float:
    truth = np.asarray(true_support, dtype=bool).ravel()
    estimate = np.asarray(estimated_support, dtype=bool).ravel()
    if truth.size != estimate.size:
        raise InvalidInputError(f"Support masks differ in length ({truth.size} vs {estimate.size})")
    n_true, n_est = int(truth.sum()), int(estimate.sum())
    if n_true == 0 and n_est == 0:
        return 1.0
    if n_true == 0 or n_est == 0:
        return 0.0
    hits = int(np.sum(truth & estimate))
    if hits == 0:
        return 0.0
    precision = hits / n_est
    recall = hits / n_true
    return 2.0 * precision * recall / (precision + recall)


def evaluate_result(result: ClusteringResult, dataset: SyntheticDataset) -> dict:
    """The four study metrics of a clustering run against its synthetic truth."""
    estimated = result.centroids[:, : dataset.X.shape[1]]
    try:
        correlation = centroid_correlation(dataset.per_sample_centroids, estimated)
    except InvalidInputError:
        correlation = float("nan")
    return {
        "ari": adjusted_rand_index(dataset.true_labels, result.labels),
        "correlation": correlation,
        "compression": compression(result.centroids_wavelet),
        "f1": support_f1(dataset.true_support, result.support_mask),
    }
