"""
Service for the `metrics` command.
"""
import numpy as np

from src.config import Settings
from src.evaluation import adjusted_rand_index, centroid_correlation, compression, support_f1
from src.models import InvalidInputError, RunConfig
from src.pipeline import support_from
from src.repositories import RunRepository, load_json


class MetricsService:
    """Scores a `cluster` output directory against a `synth` truth file."""

    def __init__(self, repository: RunRepository, settings: Settings):
        self.repository = repository
        self.settings = settings

    def run(self, config: RunConfig) -> dict:
        truth = load_json(config.truth_path)
        results = RunRepository(config.result_dir)
        labels = results.read_labels("labels.csv")
        centroids = results.read_matrix("centroids.csv")
        centroids_wavelet = results.read_matrix("centroids_wavelet.csv")

        try:
            true_labels = np.asarray(truth["labels"], dtype=np.int64)
            true_centroids = np.asarray(truth["true_centroids"], dtype=float)
            true_support_idx = np.asarray(truth["true_support"], dtype=np.int64)
        except KeyError as e:
            raise InvalidInputError(f"Truth file lacks {e}") from None
        if centroids.shape != (true_labels.size, true_centroids.shape[1]):
            raise InvalidInputError(
                f"Centroids have shape {centroids.shape}, truth expects {(true_labels.size, true_centroids.shape[1])}"
            )
        if true_support_idx.size and true_support_idx.max() >= centroids_wavelet.shape[1]:
            raise InvalidInputError("Truth support lies outside the coefficient range")

        true_support = np.zeros(centroids_wavelet.shape[1], dtype=bool)
        true_support[true_support_idx] = True
        try:
            correlation = centroid_correlation(true_centroids[true_labels], centroids)
        except InvalidInputError:
            correlation = None

        metrics = {
            "ari": adjusted_rand_index(true_labels, labels),
            "correlation": correlation,
            "compression": compression(centroids_wavelet),
            "f1": support_f1(true_support, support_from(centroids_wavelet)),
        }
        self.repository.write_json("metrics.json", metrics)
        print(f"Metrics: {metrics}")
        return metrics
