"""Seeded generators for the synthetic study and the timing benchmark."""

import logging
from typing import Optional

import numpy as np

from src.models import InvalidInputError, SyntheticDataset, WaveletBasis
from src.models.wavelet import max_levels
from src.wavelet import dwt_inverse

logger = logging.getLogger(__name__)

DEFAULT_SNR_DB = -7.7
DEFAULT_SPARSITY = 8
AMPLITUDE_RANGE = (1.0, 2.0)


def noise_variance_for_snr(signal_power: float, snr_db: float) -> float:
    """Variance giving 10 log10(signal_power / variance) = snr_db."""
    return float(signal_power) / 10.0 ** (snr_db / 10.0)


def realized_snr_db(clean, noisy) -> float:
    clean = np.asarray(clean, dtype=float)
    noise = np.asarray(noisy, dtype=float) - clean
    return float(10.0 * np.log10(np.mean(clean**2) / np.mean(noise**2)))


def generate_synthetic(
    basis: WaveletBasis,
    classes: int = 3,
    reps: int = 5,
    T: int = 1024,
    sparsity_per_class: int = DEFAULT_SPARSITY,
    snr_db: Optional[float] = DEFAULT_SNR_DB,
    seed: int = 0,
) -> SyntheticDataset:
    """
    Replicated noisy observations of `classes` wavelet-sparse centroids.

    Class supports are disjoint random coefficient positions with amplitudes
    +/-U[1, 2]. Noise variance is the mean per-signal power scaled to the
    requested SNR; `snr_db=None` draws no noise.
    """
    if classes < 1 or reps < 1 or sparsity_per_class < 1:
        raise InvalidInputError("classes, reps and sparsity_per_class must be positive")
    max_levels(T)
    if classes * sparsity_per_class > T:
        raise InvalidInputError(
            f"{classes} disjoint supports of size {sparsity_per_class} do not fit in {T} coefficients"
        )

    rng = np.random.default_rng(seed)
    positions = rng.choice(T, size=classes * sparsity_per_class, replace=False)
    coefficients = np.zeros((classes, T))
    class_supports = np.zeros((classes, T), dtype=bool)
    for c, support in enumerate(np.split(positions, classes)):
        magnitudes = rng.uniform(*AMPLITUDE_RANGE, size=sparsity_per_class)
        signs = rng.choice((-1.0, 1.0), size=sparsity_per_class)
        coefficients[c, support] = signs * magnitudes
        class_supports[c, support] = True

    centroids = dwt_inverse(coefficients, basis)
    labels = np.repeat(np.arange(classes), reps)
    clean = centroids[labels]

    if snr_db is None:
        variance = 0.0
        X = clean.copy()
    else:
        power = float(np.mean(np.mean(clean**2, axis=1)))
        variance = noise_variance_for_snr(power, snr_db)
        X = clean + rng.normal(scale=np.sqrt(variance), size=clean.shape)
    logger.debug("Synthetic draw: basis=%s n=%d T=%d noise variance=%.4g", basis.family, X.shape[0], T, variance)

    return SyntheticDataset(
        X=X,
        true_labels=labels,
        true_centroids=centroids,
        true_centroids_wavelet=coefficients,
        true_support=class_supports.any(axis=0),
        class_supports=class_supports,
        snr_db=snr_db,
        seed=seed,
        basis=basis.family,
        noise_variance=variance,
    )


def generate_bench_instance(
    n: int = 240,
    t: int = 1000,
    clusters: int = 3,
    informative: int = 6,
    seed: int = 0,
    separation: float = 3.0,
) -> tuple[np.ndarray, np.ndarray]:
    """
    Gaussian mixture whose cluster means differ only on the first
    `informative` features; every other feature is standard normal noise.
    """
    if not 1 <= clusters <= n:
        raise InvalidInputError(f"clusters must lie in [1, {n}]")
    if not 0 <= informative <= t:
        raise InvalidInputError(f"informative must lie in [0, {t}]")
    rng = np.random.default_rng(seed)
    labels = np.sort(np.arange(n) % clusters)
    means = np.zeros((clusters, t))
    means[:, :informative] = separation * rng.standard_normal((clusters, informative))
    X = means[labels] + rng.standard_normal((n, t))
    return X, labels
