"""Wavelet shrinkage at the universal threshold."""

import logging
from dataclasses import dataclass
from typing import Optional

import numpy as np

from src.models import CoefficientLayout, InvalidInputError, WaveletBasis
from src.prox import soft_threshold
from src.wavelet import pad_rows, transform_rows, truncate_rows

logger = logging.getLogger(__name__)

MAD_CONSTANT = 0.6745


@dataclass
class DenoiseOutcome:
    signals: np.ndarray
    sigma: np.ndarray
    tau: np.ndarray
    layout: CoefficientLayout

    def thresholds(self) -> list[dict]:
        return [{"row": i, "sigma": float(s), "tau": float(t)} for i, (s, t) in enumerate(zip(self.sigma, self.tau))]


def universal_threshold(sigma, length: int):
    """tau = sigma * sqrt(2 ln T)."""
    return np.asarray(sigma, dtype=float) * np.sqrt(2.0 * np.log(length))


def noise_scale(coefficients: np.ndarray, layout: CoefficientLayout) -> np.ndarray:
    """Per-row MAD estimate from the finest detail band."""
    finest = coefficients[:, layout.finest_detail]
    return np.median(np.abs(finest), axis=1) / MAD_CONSTANT


def shrink_coefficients(
    coefficients: np.ndarray, layout: CoefficientLayout, fixed_sigma: Optional[float] = None
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Soft-threshold the detail bands of each row; the approximation band is kept."""
    if fixed_sigma is not None:
        if fixed_sigma < 0:
            raise InvalidInputError("fixed sigma must be nonnegative")
        sigma = np.full(coefficients.shape[0], float(fixed_sigma))
    else:
        sigma = noise_scale(coefficients, layout)
    tau = universal_threshold(sigma, layout.padded_length)
    shrunk = coefficients.copy()
    details = layout.details
    shrunk[:, details] = soft_threshold(coefficients[:, details], tau[:, np.newaxis])
    return shrunk, sigma, tau


def soft_denoise_rows(
    X, basis: WaveletBasis, fixed_sigma: Optional[float] = None, padding_mode: str = "zero"
) -> DenoiseOutcome:
    padded, layout = pad_rows(X, basis, mode=padding_mode)
    coefficients = transform_rows(padded, basis, "forward")
    shrunk, sigma, tau = shrink_coefficients(coefficients, layout, fixed_sigma)
    signals = truncate_rows(transform_rows(shrunk, basis, "inverse"), layout)
    logger.debug("Denoised %d rows, median tau=%.4g", signals.shape[0], float(np.median(tau)))
    return DenoiseOutcome(signals=signals, sigma=sigma, tau=tau, layout=layout)


def universal_soft_denoise(X, basis: WaveletBasis, fixed_sigma: Optional[float] = None) -> np.ndarray:
    """Row-wise universal-threshold wavelet denoising."""
    return soft_denoise_rows(X, basis, fixed_sigma=fixed_sigma).signals
