"""Clustering pipelines, baselines and tuning"""

from .baselines import BaselineMethod, BaselineParams, baseline_pipeline
from .clusters import (
    align_centroids,
    class_means,
    consolidate_centroids,
    extract_clusters,
    refit_centroids,
    relabel_by_first_appearance,
    support_from,
)
from .cwc import convex_cluster, normalize_total_power, wavelet_sparse_convex_cluster
from .denoise import DenoiseOutcome, shrink_coefficients, soft_denoise_rows, universal_soft_denoise, universal_threshold
from .kmeans import kmeans, within_cluster_ss
from .pool import default_jobs, map_in_pool
from .tuning import GridEntry, TuningOutcome, grid_points, last_point, oracle_select, oracle_tune, run_grid

__all__ = [
    "BaselineMethod",
    "BaselineParams",
    "DenoiseOutcome",
    "GridEntry",
    "TuningOutcome",
    "align_centroids",
    "baseline_pipeline",
    "class_means",
    "consolidate_centroids",
    "convex_cluster",
    "default_jobs",
    "extract_clusters",
    "grid_points",
    "kmeans",
    "last_point",
    "map_in_pool",
    "normalize_total_power",
    "oracle_select",
    "oracle_tune",
    "refit_centroids",
    "relabel_by_first_appearance",
    "run_grid",
    "shrink_coefficients",
    "soft_denoise_rows",
    "support_from",
    "universal_soft_denoise",
    "universal_threshold",
    "wavelet_sparse_convex_cluster",
    "within_cluster_ss",
]
