"""
Parsers for signal-matrix and label CSV files.
"""
import io
from pathlib import Path

import numpy as np

from src.models import InvalidInputError


def _read_text(path: Path | str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except FileNotFoundError:
        raise InvalidInputError(f"Input not found: {path}") from None
    except (OSError, UnicodeDecodeError) as e:
        raise InvalidInputError(f"Cannot read {path}: {e}") from e


def parse_matrix(text: str, header: bool = False, source: str = "<string>") -> np.ndarray:
    """
    Parses comma-separated rows of numbers into an n x T matrix.
    Blank lines are ignored; every row must have the same number of fields.
    """
    lines = [line for line in text.splitlines() if line.strip()]
    if header:
        lines = lines[1:]
    if not lines:
        raise InvalidInputError(f"{source}: no data rows")

    widths = {len(line.split(",")) for line in lines}
    if len(widths) != 1:
        raise InvalidInputError(f"{source}: rows have differing field counts {sorted(widths)}")
    try:
        matrix = np.loadtxt(io.StringIO("\n".join(lines)), delimiter=",", dtype=float, ndmin=2)
    except ValueError as e:
        raise InvalidInputError(f"{source}: malformed number ({e})") from e
    if not np.all(np.isfinite(matrix)):
        raise InvalidInputError(f"{source}: non-finite values")
    return matrix


def read_matrix(path: Path | str, header: bool = False) -> np.ndarray:
    return parse_matrix(_read_text(path), header=header, source=str(path))


def read_labels(path: Path | str, header: bool = False) -> np.ndarray:
    """Reads one integer label per line (a single-column CSV)."""
    matrix = read_matrix(path, header=header)
    if matrix.shape[1] != 1 and matrix.shape[0] != 1:
        raise InvalidInputError(f"{path}: labels must form a single column")
    values = matrix.reshape(-1)
    if np.any(values != np.round(values)):
        raise InvalidInputError(f"{path}: labels must be integers")
    return values.astype(np.int64)
