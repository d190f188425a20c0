"""
Orthonormal discrete wavelet transform by the periodic pyramid algorithm.

Each analysis step maps a length-N block to N/2 approximation and N/2 detail
coefficients with circular indexing, so the transform is exactly orthogonal
at every depth, including depths where the filter is longer than the block.
"""

from functools import lru_cache

import numpy as np

from src.models import CoefficientLayout, InvalidInputError, WaveletBasis
from src.models.wavelet import max_levels

MATRIX_SIZE_LIMIT = 4096


@lru_cache(maxsize=64)
def _tap_positions(length: int, taps: int) -> tuple[np.ndarray, ...]:
    """For each filter tap m, the input positions (2k + m) mod N, k < N/2."""
    base = 2 * np.arange(length // 2)
    positions = []
    for m in range(taps):
        idx = (base + m) % length
        idx.setflags(write=False)
        positions.append(idx)
    return tuple(positions)


def _as_matrix(values) -> tuple[np.ndarray, bool]:
    array = np.asarray(values, dtype=float)
    if array.ndim == 1:
        return array[np.newaxis, :], True
    if array.ndim != 2:
        raise InvalidInputError("Expected a vector or a matrix of row signals")
    return array, False


def _analysis_step(block: np.ndarray, basis: WaveletBasis) -> tuple[np.ndarray, np.ndarray]:
    length = block.shape[1]
    approx = np.zeros((block.shape[0], length // 2))
    detail = np.zeros_like(approx)
    for m, idx in enumerate(_tap_positions(length, basis.taps)):
        column = block[:, idx]
        approx += basis.low_pass[m] * column
        detail += basis.high_pass[m] * column
    return approx, detail


def _synthesis_step(approx: np.ndarray, detail: np.ndarray, basis: WaveletBasis) -> np.ndarray:
    length = 2 * approx.shape[1]
    block = np.zeros((approx.shape[0], length))
    # Positions are distinct for a fixed tap, so fancy-index accumulation is safe.
    for m, idx in enumerate(_tap_positions(length, basis.taps)):
        block[:, idx] += basis.low_pass[m] * approx + basis.high_pass[m] * detail
    return block


def _forward_rows(X: np.ndarray, basis: WaveletBasis) -> np.ndarray:
    length = X.shape[1]
    levels = basis.resolve_levels(length)
    out = np.empty_like(X)
    approx = X
    end = length
    for _ in range(levels):
        approx, detail = _analysis_step(approx, basis)
        half = end // 2
        out[:, half:end] = detail
        end = half
    out[:, :end] = approx
    return out


def _inverse_rows(C: np.ndarray, basis: WaveletBasis) -> np.ndarray:
    length = C.shape[1]
    levels = basis.resolve_levels(length)
    size = length >> levels
    approx = C[:, :size]
    while size < length:
        detail = C[:, size : 2 * size]
        approx = _synthesis_step(approx, detail, basis)
        size *= 2
    return np.array(approx, dtype=float, copy=True)


def _check_length(length: int) -> None:
    max_levels(length)


def dwt_forward(signal, basis: WaveletBasis) -> np.ndarray:
    """
    Forward transform c = x Psi of a power-of-two length signal.

    Coefficients are laid out approximation first, then details coarse to fine.
    """
    X, is_vector = _as_matrix(signal)
    _check_length(X.shape[1])
    out = _forward_rows(X, basis)
    return out[0] if is_vector else out


def dwt_inverse(coeffs, basis: WaveletBasis) -> np.ndarray:
    """Inverse transform x = c Psi^T."""
    C, is_vector = _as_matrix(coeffs)
    _check_length(C.shape[1])
    out = _inverse_rows(C, basis)
    return out[0] if is_vector else out


def transform_rows(X, basis: WaveletBasis, direction: str = "forward") -> np.ndarray:
    """Apply the forward or inverse transform to every row of X."""
    matrix, _ = _as_matrix(X)
    if matrix.ndim != 2:
        raise InvalidInputError("transform_rows expects a matrix")
    _check_length(matrix.shape[1])
    if direction == "forward":
        return _forward_rows(matrix, basis)
    if direction == "inverse":
        return _inverse_rows(matrix, basis)
    raise InvalidInputError(f"direction must be 'forward' or 'inverse', got '{direction}'")


def dwt_matrix(length: int, basis: WaveletBasis) -> np.ndarray:
    """Explicit orthogonal Psi with dwt_forward(x) == x @ Psi."""
    if length > MATRIX_SIZE_LIMIT:
        raise InvalidInputError(
            f"Refusing to build a {length} x {length} transform matrix (limit {MATRIX_SIZE_LIMIT})"
        )
    _check_length(length)
    return _forward_rows(np.eye(length), basis)


def coefficient_layout(
    length: int, basis: WaveletBasis, original_length: int | None = None, padding_mode: str = "zero"
) -> CoefficientLayout:
    levels = basis.resolve_levels(length)
    return CoefficientLayout.build(
        original_length=length if original_length is None else original_length,
        padded_length=length,
        levels=levels,
        padding_mode=padding_mode,
    )
