"""Proximal operators"""

from .operators import (
    project_dual_ball_cols,
    project_dual_ball_rows,
    prox_group_cols,
    prox_group_rows,
    soft_threshold,
)

__all__ = [
    "project_dual_ball_cols",
    "project_dual_ball_rows",
    "prox_group_cols",
    "prox_group_rows",
    "soft_threshold",
]
