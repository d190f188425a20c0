"""
Closed-form proximal maps of weighted group-l2 penalties and the matching
dual-ball projections. Thresholded groups come out as exact zeros.
"""

import numpy as np

from src.models import InvalidInputError, PenaltySpec


def _thresholds(M: np.ndarray, spec: PenaltySpec, axis: int) -> np.ndarray:
    groups = M.shape[0] if axis == 1 else M.shape[1]
    if spec.weights.size != groups:
        kind = "rows" if axis == 1 else "columns"
        raise InvalidInputError(f"Expected {groups} weights for {kind}, got {spec.weights.size}")
    return spec.thresholds


def _shrink_factors(norms: np.ndarray, tau: np.ndarray) -> np.ndarray:
    factors = np.zeros_like(norms)
    keep = norms > tau
    factors[keep] = 1.0 - tau[keep] / norms[keep]
    return factors


def _clip_factors(norms: np.ndarray, tau: np.ndarray) -> np.ndarray:
    factors = np.ones_like(norms)
    outside = norms > tau
    factors[outside] = tau[outside] / norms[outside]
    return factors


def _as_matrix(M) -> np.ndarray:
    M = np.asarray(M, dtype=float)
    if M.ndim != 2:
        raise InvalidInputError("Proximal operators act on matrices")
    return M


def prox_group_rows(M, spec: PenaltySpec) -> np.ndarray:
    """Row r -> (1 - tau_r / ||M_r||)_+ M_r with tau_r = scale * weight_r."""
    M = _as_matrix(M)
    tau = _thresholds(M, spec, axis=1)
    if spec.scale == 0:
        return M.copy()
    factors = _shrink_factors(np.linalg.norm(M, axis=1), tau)
    return M * factors[:, np.newaxis]


def prox_group_cols(M, spec: PenaltySpec) -> np.ndarray:
    """Column-wise group soft-thresholding."""
    M = _as_matrix(M)
    tau = _thresholds(M, spec, axis=0)
    if spec.scale == 0:
        return M.copy()
    factors = _shrink_factors(np.linalg.norm(M, axis=0), tau)
    return M * factors[np.newaxis, :]


def project_dual_ball_rows(M, spec: PenaltySpec) -> np.ndarray:
    """Row r -> M_r * min(1, tau_r / ||M_r||); the Moreau complement of prox_group_rows."""
    M = _as_matrix(M)
    tau = _thresholds(M, spec, axis=1)
    factors = _clip_factors(np.linalg.norm(M, axis=1), tau)
    return M * factors[:, np.newaxis]


def project_dual_ball_cols(M, spec: PenaltySpec) -> np.ndarray:
    M = _as_matrix(M)
    tau = _thresholds(M, spec, axis=0)
    factors = _clip_factors(np.linalg.norm(M, axis=0), tau)
    return M * factors[np.newaxis, :]


def soft_threshold(values, tau) -> np.ndarray:
    """Elementwise soft-thresholding; |v| <= tau maps to exactly zero."""
    values = np.asarray(values, dtype=float)
    magnitude = np.abs(values) - tau
    return np.where(magnitude > 0, np.sign(values) * magnitude, 0.0)
