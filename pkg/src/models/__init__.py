"""Domain models"""

from .dataset import SyntheticDataset
from .errors import InvalidConfigError, InvalidInputError, NumericalFailureError, WaveClustError
from .graph import DifferenceMatrix, FusionGraph, RankReduction, SparsityWeights
from .result import ClusteringResult
from .run_config import RunConfig
from .solver import (
    PenaltySpec,
    ProblemSpec,
    ResidualRecord,
    SolveReport,
    SolverConfig,
    SolverKind,
    SolverState,
)
from .wavelet import FAMILIES, CoefficientLayout, WaveletBasis

__all__ = [
    "FAMILIES",
    "ClusteringResult",
    "CoefficientLayout",
    "DifferenceMatrix",
    "FusionGraph",
    "InvalidConfigError",
    "InvalidInputError",
    "NumericalFailureError",
    "PenaltySpec",
    "ProblemSpec",
    "RankReduction",
    "ResidualRecord",
    "RunConfig",
    "SolveReport",
    "SolverConfig",
    "SolverKind",
    "SolverState",
    "SparsityWeights",
    "SyntheticDataset",
    "WaveClustError",
    "WaveletBasis",
]
