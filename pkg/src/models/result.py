"""Clustering result model"""

from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .solver import SolveReport
from .wavelet import CoefficientLayout


@dataclass
class ClusteringResult:
    """
    Output of a clustering pipeline.

    `centroids` are in the time domain (truncated to the original length when
    a layout is attached); `centroids_wavelet` stay in padded coefficient space.
    """

    centroids: np.ndarray
    centroids_wavelet: np.ndarray
    labels: np.ndarray
    support_mask: np.ndarray
    objective: Optional[float] = None
    report: Optional[SolveReport] = None
    method: str = "CWC"
    layout: Optional[CoefficientLayout] = None
    params: dict = field(default_factory=dict)

    @property
    def n_clusters(self) -> int:
        return int(np.unique(self.labels).size)

    @property
    def compression(self) -> float:
        from src.evaluation import compression

        return compression(self.centroids_wavelet)

    def cluster_centroids(self) -> tuple[np.ndarray, np.ndarray]:
        """Distinct cluster labels and one time-domain centroid per cluster."""
        labels, first = np.unique(self.labels, return_index=True)
        return labels, self.centroids[first]

    def summary(self) -> dict:
        summary = {
            "method": self.method,
            "n_clusters": self.n_clusters,
            "compression": self.compression,
            "support_size": int(self.support_mask.sum()),
            "objective": None if self.objective is None else float(self.objective),
            "params": dict(self.params),
        }
        if self.report is not None:
            summary["solver"] = self.report.to_dict()
        if self.layout is not None:
            summary["padding"] = self.layout.to_dict()
        return summary
