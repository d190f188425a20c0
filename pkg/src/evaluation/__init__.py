"""Evaluation metrics and synthetic data"""

from .metrics import adjusted_rand_index, centroid_correlation, compression, evaluate_result, support_f1
from .synthetic import (
    DEFAULT_SNR_DB,
    generate_bench_instance,
    generate_synthetic,
    noise_variance_for_snr,
    realized_snr_db,
)

__all__ = [
    "DEFAULT_SNR_DB",
    "adjusted_rand_index",
    "centroid_correlation",
    "compression",
    "evaluate_result",
    "generate_bench_instance",
    "generate_synthetic",
    "noise_variance_for_snr",
    "realized_snr_db",
    "support_f1",
]
