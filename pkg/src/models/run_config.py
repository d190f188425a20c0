"""Run configuration model for the command-line surface"""

import math
from dataclasses import asdict, dataclass
from pathlib import Path
from typing import Optional

from .errors import InvalidConfigError, InvalidInputError
from .wavelet import FAMILIES

TUNE_MODES = ("none", "oracle")
SOLVER_NAMES = ("cb_admm", "s_admm", "s_ama", "pg_admm")


@dataclass
class RunConfig:
    """
    Merged command-line and environment settings for one subcommand.

    Only `input_path` lacks a default, and only the commands that read a
    signal matrix (cluster, denoise) require it.
    """

    command: str = "cluster"
    input_path: Optional[Path] = None
    output_dir: Path = Path("waveclust_out")
    basis: str = "db4"
    levels: Optional[int] = None
    lambdas: tuple[float, ...] = (1.0,)
    gammas: tuple[float, ...] = (1.0,)
    knn: Optional[int] = None
    phi: Optional[float] = None
    solver: str = "cb_admm"
    rho: Optional[float] = None
    tol: float = 1e-6
    max_iters: int = 100_000
    seed: int = 0
    jobs: int = 1
    labels_path: Optional[Path] = None
    tune: str = "none"
    header: bool = False
    fixed_sigma: Optional[float] = None
    padding_mode: str = "zero"
    normalize_power: Optional[float] = None
    rank_reduce: bool = False
    refit: bool = False
    trace: bool = False
    # synth
    classes: int = 3
    reps: int = 5
    length: int = 1024
    sparsity: int = 8
    snr_db: Optional[float] = -7.7
    # metrics
    truth_path: Optional[Path] = None
    result_dir: Optional[Path] = None
    # bench
    bench_n: int = 240
    bench_t: int = 1000
    informative: int = 6
    solvers: tuple[str, ...] = SOLVER_NAMES[:3]
    objective_tol: float = 1e-6

    def validate(self) -> None:
        """Check configuration values, then the input paths the command reads."""
        if self.basis not in FAMILIES:
            raise InvalidConfigError(f"Unknown basis '{self.basis}'")
        # bench resolves empty penalties itself
        if self.command != "bench" and (not self.lambdas or not self.gammas):
            raise InvalidConfigError("lambda and gamma grids must be nonempty")
        if any(not math.isfinite(v) or v < 0 for v in self.lambdas + self.gammas):
            raise InvalidConfigError("lambda and gamma must be finite and nonnegative")
        for name, value in (
            ("tol", self.tol),
            ("rho", self.rho),
            ("phi", self.phi),
            ("normalize-power", self.normalize_power),
            ("fixed-sigma", self.fixed_sigma),
            ("objective-tol", self.objective_tol),
        ):
            if value is not None and not math.isfinite(value):
                raise InvalidConfigError(f"{name} must be finite, got {value}")
        if self.solver not in SOLVER_NAMES or any(s not in SOLVER_NAMES for s in self.solvers):
            raise InvalidConfigError(f"Solvers must be among {', '.join(SOLVER_NAMES)}")
        if self.tune not in TUNE_MODES:
            raise InvalidConfigError(f"--tune must be one of {', '.join(TUNE_MODES)}")
        if self.tune == "oracle" and self.labels_path is None:
            raise InvalidConfigError("Oracle tuning needs --labels")
        if self.tol <= 0 or self.max_iters < 1 or self.jobs < 1:
            raise InvalidConfigError("tol, max-iters and jobs must be positive")
        if self.rho is not None and self.rho <= 0:
            raise InvalidConfigError("rho must be positive")
        if self.phi is not None and self.phi <= 0:
            raise InvalidConfigError("phi must be positive")
        if self.objective_tol <= 0:
            raise InvalidConfigError("objective-tol must be positive")
        if self.normalize_power is not None and self.normalize_power < 0:
            raise InvalidConfigError("normalize-power target must be nonnegative")

        required: list[Optional[Path]] = []
        if self.command in ("cluster", "denoise"):
            if self.input_path is None:
                raise InvalidInputError("--input is required")
            required.append(self.input_path)
        if self.command == "cluster" and self.labels_path is not None:
            required.append(self.labels_path)
        if self.command == "metrics":
            if self.truth_path is None or self.result_dir is None:
                raise InvalidInputError("metrics needs --truth and --result-dir")
            required += [self.truth_path, self.result_dir]
        for path in required:
            if not Path(path).exists():
                raise InvalidInputError(f"Input not found: {path}")

    def to_dict(self) -> dict:
        data = asdict(self)
        for key, value in data.items():
            if isinstance(value, Path):
                data[key] = str(value)
            elif isinstance(value, tuple):
                data[key] = list(value)
        return data
