"""
Output-directory repository for run artefacts.
Abstracts file-system writes and reads of matrices, labels, traces and JSON.
"""

import json
import math
from pathlib import Path
from typing import Any, Iterable

import numpy as np

from src.models import InvalidInputError, ResidualRecord
from src.parsers import read_labels, read_matrix

MATRIX_FORMAT = "%.17g"
BENCH_TRACE_HEADER = "iter,objective_gap,wall_seconds"
RESIDUAL_TRACE_HEADER = "iteration,primal_residual,dual_residual,objective,elapsed_seconds"


def to_jsonable(value: Any) -> Any:
    """numpy scalars/arrays to Python types; non-finite floats to null."""
    if isinstance(value, dict):
        return {str(k): to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_jsonable(v) for v in value]
    if isinstance(value, np.ndarray):
        return to_jsonable(value.tolist())
    if isinstance(value, np.generic):
        return to_jsonable(value.item())
    if isinstance(value, Path):
        return str(value)
    if isinstance(value, float) and not math.isfinite(value):
        return None
    return value


class RunRepository:
    """
    Repository for one output directory.
    Handles every file a subcommand reads or writes.
    """

    def __init__(self, output_dir: Path | str):
        """
        Initialize the repository.

        Args:
            output_dir: Directory receiving the run's files
        """
        self.output_dir = Path(output_dir)
        self.written: list[Path] = []

    def _path(self, name: str) -> Path:
        self.output_dir.mkdir(parents=True, exist_ok=True)
        path = self.output_dir / name
        self.written.append(path)
        return path

    def write_matrix(self, name: str, matrix: np.ndarray) -> Path:
        """Write a matrix as headerless CSV at 17 significant digits."""
        path = self._path(name)
        np.savetxt(path, np.atleast_2d(np.asarray(matrix, dtype=float)), fmt=MATRIX_FORMAT, delimiter=",")
        return path

    def write_labels(self, name: str, labels: np.ndarray) -> Path:
        path = self._path(name)
        np.savetxt(path, np.asarray(labels, dtype=np.int64).reshape(-1, 1), fmt="%d")
        return path

    def write_json(self, name: str, data: dict) -> Path:
        path = self._path(name)
        path.write_text(json.dumps(to_jsonable(data), sort_keys=True, indent=2) + "\n", encoding="utf-8")
        return path

    def write_rows(self, name: str, header: str, rows: Iterable[Iterable[float]]) -> Path:
        path = self._path(name)
        lines = [header]
        for row in rows:
            lines.append(",".join(repr(float(v)) if not isinstance(v, (int, np.integer)) else str(v) for v in row))
        path.write_text("\n".join(lines) + "\n", encoding="utf-8")
        return path

    def write_residual_trace(self, name: str, trace: list[ResidualRecord]) -> Path:
        return self.write_rows(
            name,
            RESIDUAL_TRACE_HEADER,
            ((r.iteration, r.primal, r.dual, r.objective, r.elapsed) for r in trace),
        )

    def write_bench_trace(self, name: str, trace: list[ResidualRecord], reference: float) -> Path:
        """Per-iteration relative objective gap against the reference optimum."""
        scale = max(abs(reference), np.finfo(float).tiny)
        return self.write_rows(
            name,
            BENCH_TRACE_HEADER,
            ((r.iteration, (r.objective - reference) / scale, r.elapsed) for r in trace),
        )

    # Reads

    def read_json(self, name: str) -> dict:
        return load_json(self.output_dir / name)

    def read_matrix(self, name: str) -> np.ndarray:
        return read_matrix(self.output_dir / name)

    def read_labels(self, name: str) -> np.ndarray:
        return read_labels(self.output_dir / name)


def load_json(path: Path | str) -> dict:
    try:
        return json.loads(Path(path).read_text(encoding="utf-8"))
    except FileNotFoundError:
        raise InvalidInputError(f"Input not found: {path}") from None
    except (OSError, json.JSONDecodeError) as e:
        raise InvalidInputError(f"Cannot read JSON from {path}: {e}") from e
