"""Sparse convex clustering objective."""

import numpy as np

from src.models import InvalidInputError, ProblemSpec


def objective(spec: ProblemSpec, U) -> float:
    """
    1/2 ||U - X||_F^2 + lam * sum_r w_r ||(DU)_r||_2 + gamma * sum_j omega_j ||U_.j||_2
    """
    U = np.asarray(U, dtype=float)
    if U.shape != spec.X.shape:
        raise InvalidInputError(f"U has shape {U.shape}, expected {spec.X.shape}")
    value = 0.5 * float(np.sum((U - spec.X) ** 2))
    if spec.lam > 0 and spec.D.m:
        differences = np.asarray(spec.D @ U)
        value += spec.lam * float(spec.fusion_weights @ np.linalg.norm(differences, axis=1))
    if spec.gamma > 0:
        value += spec.gamma * float(spec.sparsity_weights @ np.linalg.norm(U, axis=0))
    return value
