"""Synthetic dataset model"""

from dataclasses import dataclass
from typing import Optional

import numpy as np


@dataclass
class SyntheticDataset:
    """
    Noisy replicates of wavelet-sparse class centroids.

    `true_support` is the pooled support over classes; `class_supports` keeps
    one boolean row per class. `snr_db=None` marks a noiseless draw.
    """

    X: np.ndarray
    true_labels: np.ndarray
    true_centroids: np.ndarray
    true_centroids_wavelet: np.ndarray
    true_support: np.ndarray
    class_supports: np.ndarray
    snr_db: Optional[float]
    seed: int
    basis: str
    noise_variance: float = 0.0

    @property
    def n(self) -> int:
        return int(self.X.shape[0])

    @property
    def per_sample_centroids(self) -> np.ndarray:
        return self.true_centroids[self.true_labels]

    def to_truth_dict(self) -> dict:
        return {
            "basis": self.basis,
            "seed": int(self.seed),
            "snr_db": self.snr_db,
            "noise_variance": float(self.noise_variance),
            "n": self.n,
            "T": int(self.X.shape[1]),
            "classes": int(self.true_centroids.shape[0]),
            "labels": [int(v) for v in self.true_labels],
            "true_centroids": self.true_centroids.tolist(),
            "true_support": [int(j) for j in np.flatnonzero(self.true_support)],
            "class_supports": [
                [int(j) for j in np.flatnonzero(row)] for row in self.class_supports
            ],
        }
