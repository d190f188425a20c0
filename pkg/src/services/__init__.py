"""Services"""
from .bench_service import BenchService
from .clustering_service import ClusteringService, solver_config_from
from .denoise_service import DenoiseService
from .metrics_service import MetricsService
from .synth_service import SynthService

__all__ = [
    "BenchService",
    "ClusteringService",
    "DenoiseService",
    "MetricsService",
    "SynthService",
    "solver_config_from",
]
