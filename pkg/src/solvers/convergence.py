"""Geometric-decay check on a solver's residual trace."""

from dataclasses import dataclass
from typing import Sequence

import numpy as np
from scipy.stats import linregress

from src.models import InvalidInputError, ResidualRecord

MIN_TAIL = 20
NOISE_FLOOR = 1e-13
R2_THRESHOLD = 0.98


@dataclass(frozen=True)
class LinearRateFit:
    rate: float
    slope: float
    intercept: float
    r_squared: float
    points: int

    @property
    def is_linear(self) -> bool:
        return self.r_squared >= R2_THRESHOLD and self.slope < 0

    def to_dict(self) -> dict:
        return {
            "rate": self.rate,
            "slope": self.slope,
            "r_squared": self.r_squared,
            "points": self.points,
            "is_linear": self.is_linear,
        }


def _residual_values(trace) -> np.ndarray:
    values = [entry.combined if isinstance(entry, ResidualRecord) else float(entry) for entry in trace]
    return np.asarray(values, dtype=float)


def fit_linear_rate(trace: Sequence, burn_in: float = 0.1) -> LinearRateFit:
    """
    Least-squares fit of log(residual) against iteration over the tail of the
    trace. Entries may be ResidualRecords (their combined residual is used) or
    plain numbers. Values at or below the noise floor are dropped so a solver
    that has hit machine precision does not flatten the fit.
    """
    values = _residual_values(trace)
    if not 0 <= burn_in < 1:
        raise InvalidInputError("burn_in must be a fraction in [0, 1)")
    start = int(np.floor(burn_in * values.size))
    iterations = np.arange(values.size)[start:]
    tail = values[start:]
    keep = np.isfinite(tail) & (tail > NOISE_FLOOR)
    iterations, tail = iterations[keep], tail[keep]
    if tail.size < MIN_TAIL:
        raise InvalidInputError(
            f"Need at least {MIN_TAIL} post-burn-in residuals above {NOISE_FLOOR:g}, got {tail.size}"
        )

    logs = np.log(tail)
    if np.ptp(logs) == 0.0:
        return LinearRateFit(rate=1.0, slope=0.0, intercept=float(logs[0]), r_squared=0.0, points=int(tail.size))
    fit = linregress(iterations, logs)
    return LinearRateFit(
        rate=float(np.exp(fit.slope)),
        slope=float(fit.slope),
        intercept=float(fit.intercept),
        r_squared=float(fit.rvalue**2),
        points=int(tail.size),
    )


def check_linear_rate(trace: Sequence, burn_in: float = 0.1) -> tuple[float, bool]:
    """Returns (per-iteration contraction estimate, is_linear)."""
    fit = fit_linear_rate(trace, burn_in=burn_in)
    return fit.rate, fit.is_linear
