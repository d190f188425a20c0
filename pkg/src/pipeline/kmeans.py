"""Seeded k-means baseline."""

import numpy as np
from sklearn.cluster import KMeans

from src.models import InvalidInputError

from .clusters import relabel_by_first_appearance

DEFAULT_RESTARTS = 20
DEFAULT_MAX_ITER = 300


def kmeans(
    X, k: int, restarts: int = DEFAULT_RESTARTS, seed: int = 0, max_iter: int = DEFAULT_MAX_ITER
) -> tuple[np.ndarray, np.ndarray]:
    """
    Lloyd iterations from k-means++ seeds, best of `restarts` by within-cluster
    sum of squares. Labels are renamed by first appearance; centroids follow.
    """
    X = np.asarray(X, dtype=float)
    if X.ndim != 2:
        raise InvalidInputError("kmeans expects a matrix")
    n = X.shape[0]
    if not 1 <= int(k) <= n:
        raise InvalidInputError(f"k must lie in [1, {n}], got {k}")
    if restarts < 1:
        raise InvalidInputError("restarts must be positive")

    model = KMeans(
        n_clusters=int(k),
        init="k-means++",
        n_init=restarts,
        max_iter=max_iter,
        tol=0.0,
        algorithm="lloyd",
        random_state=seed,
    ).fit(X)
    labels = relabel_by_first_appearance(model.labels_)
    order = np.empty(int(labels.max()) + 1, dtype=np.int64)
    order[labels] = model.labels_
    return labels, model.cluster_centers_[order]


def within_cluster_ss(X, labels, centroids) -> float:
    X = np.asarray(X, dtype=float)
    return float(np.sum((X - np.asarray(centroids)[np.asarray(labels)]) ** 2))
