"""Padding of signals to the next power-of-two length."""

import numpy as np

from src.models import CoefficientLayout, InvalidInputError, WaveletBasis

PAD_MODES = {"zero": "constant", "edge": "edge", "symmetric": "symmetric"}


def next_power_of_two(length: int) -> int:
    return 1 << max(int(length) - 1, 0).bit_length()


def pad_rows(X, basis: WaveletBasis | None = None, mode: str = "zero") -> tuple[np.ndarray, CoefficientLayout]:
    """Pad every row of X to the next power of two and describe the layout."""
    matrix = np.asarray(X, dtype=float)
    if matrix.ndim != 2:
        raise InvalidInputError("pad_rows expects a matrix of row signals")
    length = matrix.shape[1]
    if length < 2:
        raise InvalidInputError(f"Signals need at least 2 samples, got {length}")
    if mode not in PAD_MODES:
        raise InvalidInputError(f"Unknown padding mode '{mode}'. Choose one of {', '.join(PAD_MODES)}")

    padded_length = next_power_of_two(length)
    extra = padded_length - length
    if extra:
        matrix = np.pad(matrix, ((0, 0), (0, extra)), mode=PAD_MODES[mode])
    else:
        matrix = matrix.copy()

    basis = basis or WaveletBasis("haar")
    layout = CoefficientLayout.build(
        original_length=length,
        padded_length=padded_length,
        levels=basis.resolve_levels(padded_length),
        padding_mode=mode,
    )
    return matrix, layout


def pad_signal(x, mode: str = "zero", basis: WaveletBasis | None = None) -> tuple[np.ndarray, CoefficientLayout]:
    vector = np.asarray(x, dtype=float)
    if vector.ndim != 1:
        raise InvalidInputError("pad_signal expects a vector")
    padded, layout = pad_rows(vector[np.newaxis, :], basis=basis, mode=mode)
    return padded[0], layout


def truncate_rows(X, layout: CoefficientLayout) -> np.ndarray:
    """Drop the padded tail after an inverse transform."""
    return np.asarray(X)[..., : layout.original_length]
