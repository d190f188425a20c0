"""
Service for the `denoise` command.
"""
import logging

from src.config import Settings
from src.models import RunConfig, WaveletBasis
from src.parsers import read_matrix
from src.pipeline import soft_denoise_rows
from src.repositories import RunRepository

logger = logging.getLogger(__name__)


class DenoiseService:
    """Universal-threshold wavelet denoising of every row of a signal matrix."""

    def __init__(self, repository: RunRepository, settings: Settings):
        self.repository = repository
        self.settings = settings

    def run(self, config: RunConfig) -> dict:
        X = read_matrix(config.input_path, header=config.header)
        basis = WaveletBasis(config.basis, config.levels)
        outcome = soft_denoise_rows(X, basis, fixed_sigma=config.fixed_sigma, padding_mode=config.padding_mode)

        self.repository.write_matrix("denoised.csv", outcome.signals)
        self.repository.write_json(
            "thresholds.json",
            {
                "basis": basis.family,
                "fixed_sigma": config.fixed_sigma,
                "padding": outcome.layout.to_dict(),
                "rows": outcome.thresholds(),
            },
        )
        print(f"Denoised {X.shape[0]} signals of length {X.shape[1]} with {basis.family}")
        return {"rows": int(X.shape[0]), "files": [str(p) for p in self.repository.written]}
