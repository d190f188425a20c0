"""Largest-eigenvalue estimates for step sizes and step bounds."""

from typing import Callable

import numpy as np

from src.models import DifferenceMatrix


def power_iteration(
    matvec: Callable[[np.ndarray], np.ndarray],
    dim: int,
    tol: float = 1e-10,
    max_iters: int = 1000,
    seed: int = 0,
) -> float:
    """Rayleigh-quotient power iteration for a symmetric positive semidefinite operator."""
    rng = np.random.default_rng(seed)
    v = rng.standard_normal(dim)
    v /= np.linalg.norm(v)
    estimate = 0.0
    for _ in range(max_iters):
        w = matvec(v)
        updated = float(v @ w)
        norm = float(np.linalg.norm(w))
        if norm == 0.0:
            return 0.0
        v = w / norm
        if abs(updated - estimate) <= tol * max(1.0, abs(updated)):
            return updated
        estimate = updated
    return estimate


def gram_lambda_max(D: DifferenceMatrix, **kwargs) -> float:
    """lambda_max(D^T D)."""
    if D.m == 0:
        return 0.0
    Dt = D.T
    return power_iteration(lambda v: Dt @ (D.matrix @ v), D.n, **kwargs)


def augmented_lambda_max(D: DifferenceMatrix, rho: float, **kwargs) -> float:
    """lambda_max(I + rho D^T D)."""
    Dt = D.T
    return power_iteration(lambda v: v + rho * (Dt @ (D.matrix @ v)), D.n, **kwargs)
