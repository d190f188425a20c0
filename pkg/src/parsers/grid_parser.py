"""
Parser for the `start:stop:count` grid syntax used by --lambda-grid and --gamma-grid.
"""
import numpy as np

from src.models import InvalidConfigError


def _fields(text: str) -> tuple[float, float, int] | float:
    parts = [part.strip() for part in str(text).split(":")]
    try:
        if len(parts) == 1:
            return float(parts[0])
        if len(parts) == 3:
            return float(parts[0]), float(parts[1]), int(parts[2])
    except ValueError:
        pass
    raise InvalidConfigError(f"Grid '{text}' is not of the form start:stop:count")


def parse_grid(text: str, log: bool = False) -> tuple[float, ...]:
    """
    Inclusive grid from `start:stop:count`, linear or (with `log`) geometric.
    A bare number is a one-point grid.
    """
    fields = _fields(text)
    if isinstance(fields, float):
        values = [fields]
    else:
        start, stop, count = fields
        if count < 1:
            raise InvalidConfigError(f"Grid '{text}' needs a positive count")
        if log:
            if start <= 0 or stop <= 0:
                raise InvalidConfigError(f"Log grid '{text}' needs positive endpoints")
            values = np.geomspace(start, stop, count).tolist()
        else:
            values = np.linspace(start, stop, count).tolist()

    if any(not np.isfinite(v) or v < 0 for v in values):
        raise InvalidConfigError(f"Grid '{text}' must contain finite nonnegative values")
    return tuple(float(v) for v in values)
