"""Problem, configuration and report models for the clustering solvers"""

import dataclasses
from dataclasses import dataclass, field
from enum import Enum
from typing import Optional

import numpy as np

from .errors import InvalidConfigError, InvalidInputError
from .graph import DifferenceMatrix, FusionGraph, SparsityWeights


@dataclass(frozen=True)
class PenaltySpec:
    """Group-penalty scale (lambda/rho or gamma/rho) and per-group weights."""

    scale: float
    weights: np.ndarray

    def __post_init__(self):
        weights = np.asarray(self.weights, dtype=float).reshape(-1)
        if not np.isfinite(self.scale) or self.scale < 0:
            raise InvalidInputError(f"Penalty scale must be finite and >= 0, got {self.scale}")
        if np.any(~np.isfinite(weights)) or np.any(weights < 0):
            raise InvalidInputError("Penalty weights must be finite and nonnegative")
        object.__setattr__(self, "scale", float(self.scale))
        object.__setattr__(self, "weights", weights)

    @property
    def thresholds(self) -> np.ndarray:
        return self.scale * self.weights


@dataclass(frozen=True)
class ProblemSpec:
    """
    Sparse convex clustering instance in solver coordinates:

        1/2 ||U - X||_F^2 + lam * sum_r w_r ||(DU)_r||_2 + gamma * sum_j omega_j ||U_.j||_2
    """

    X: np.ndarray
    D: DifferenceMatrix
    lam: float
    gamma: float
    fusion_weights: np.ndarray
    sparsity_weights: np.ndarray

    def __post_init__(self):
        X = np.asarray(self.X, dtype=float)
        if X.ndim != 2:
            raise InvalidInputError("X must be a two-dimensional matrix")
        if np.any(~np.isfinite(X)):
            raise InvalidInputError("X contains non-finite values")
        w = np.asarray(self.fusion_weights, dtype=float).reshape(-1)
        omega = np.asarray(self.sparsity_weights, dtype=float).reshape(-1)
        n, t = X.shape
        if self.D.n != n:
            raise InvalidInputError(f"D has {self.D.n} columns but X has {n} rows")
        if w.size != self.D.m:
            raise InvalidInputError(f"Expected {self.D.m} fusion weights, got {w.size}")
        if omega.size != t:
            raise InvalidInputError(f"Expected {t} sparsity weights, got {omega.size}")
        for name, value in (("lambda", self.lam), ("gamma", self.gamma)):
            if not np.isfinite(value) or value < 0:
                raise InvalidInputError(f"{name} must be finite and >= 0, got {value}")
        object.__setattr__(self, "X", X)
        object.__setattr__(self, "fusion_weights", w)
        object.__setattr__(self, "sparsity_weights", omega)
        object.__setattr__(self, "lam", float(self.lam))
        object.__setattr__(self, "gamma", float(self.gamma))

    @classmethod
    def from_graph(
        cls,
        X: np.ndarray,
        graph: FusionGraph,
        lam: float,
        gamma: float,
        sparsity: Optional[SparsityWeights] = None,
    ) -> "ProblemSpec":
        from src.graph import difference_matrix

        X = np.asarray(X, dtype=float)
        if graph.n != X.shape[0]:
            raise InvalidInputError(f"Graph is over {graph.n} observations, X has {X.shape[0]} rows")
        omega = sparsity.omega if sparsity is not None else np.ones(X.shape[1])
        return cls(
            X=X,
            D=difference_matrix(graph),
            lam=lam,
            gamma=gamma,
            fusion_weights=graph.weights,
            sparsity_weights=omega,
        )

    @property
    def n(self) -> int:
        return int(self.X.shape[0])

    @property
    def t(self) -> int:
        return int(self.X.shape[1])

    def with_penalties(self, lam: float, gamma: float) -> "ProblemSpec":
        return ProblemSpec(self.X, self.D, lam, gamma, self.fusion_weights, self.sparsity_weights)


class SolverKind(str, Enum):
    CB_ADMM = "cb_admm"
    S_ADMM = "s_admm"
    S_AMA = "s_ama"
    PG_ADMM = "pg_admm"

    @classmethod
    def parse(cls, value) -> "SolverKind":
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).lower())
        except ValueError:
            names = ", ".join(kind.value for kind in cls)
            raise InvalidConfigError(f"Unknown solver '{value}'. Choose one of {names}") from None


@dataclass(frozen=True)
class SolverConfig:
    """
    Solver settings. `rho=None` selects the per-solver default: 1.0 for the
    ADMM variants, 0.99 * 2 / lambda_max(D^T D) for S-AMA.
    """

    solver: SolverKind = SolverKind.CB_ADMM
    rho: Optional[float] = None
    max_iters: int = 100_000
    tol_primal: float = 1e-6
    tol_dual: float = 1e-6
    inner_max_iters: int = 500
    inner_tol: float = 1e-8
    record_trace: bool = False
    target_objective: Optional[float] = None
    objective_tol: float = 1e-6
    log_every: int = 1000
    q: int = 2

    def __post_init__(self):
        object.__setattr__(self, "solver", SolverKind.parse(self.solver))
        if self.rho is not None and (not np.isfinite(self.rho) or self.rho <= 0):
            raise InvalidConfigError(f"rho must be positive, got {self.rho}")
        if self.max_iters < 1 or self.inner_max_iters < 1:
            raise InvalidConfigError("Iteration limits must be positive")
        for name in ("tol_primal", "tol_dual", "inner_tol", "objective_tol"):
            if getattr(self, name) <= 0:
                raise InvalidConfigError(f"{name} must be positive")
        if self.q != 2:
            raise InvalidConfigError("Only the l2 fusion norm (q = 2) is supported")

    def replace(self, **changes) -> "SolverConfig":
        return dataclasses.replace(self, **changes)


@dataclass(frozen=True)
class ResidualRecord:
    iteration: int
    primal: float
    dual: float
    objective: float
    elapsed: float

    @property
    def combined(self) -> float:
        return float(np.hypot(self.primal, self.dual))


@dataclass
class SolverState:
    """
    Iterates of a splitting solver. V1/Z1 live on edges (m x T); V2/Z2 on
    observations (n x T). Single-copy solvers leave V2/Z2 equal to U/zero.
    """

    U: np.ndarray
    V1: np.ndarray
    V2: np.ndarray
    Z1: np.ndarray
    Z2: np.ndarray
    iteration: int = 0
    residuals: list[ResidualRecord] = field(default_factory=list)

    @classmethod
    def initial(cls, spec: ProblemSpec) -> "SolverState":
        X = spec.X
        return cls(
            U=X.copy(),
            V1=np.asarray(spec.D @ X),
            V2=X.copy(),
            Z1=np.zeros((spec.D.m, spec.t)),
            Z2=np.zeros_like(X),
        )

    def record(self, entry: ResidualRecord) -> None:
        if self.residuals and entry.iteration <= self.residuals[-1].iteration:
            raise ValueError("Residual history must be recorded in iteration order")
        self.residuals.append(entry)


@dataclass
class SolveReport:
    solver: SolverKind
    U_hat: np.ndarray
    V1: np.ndarray
    V2: np.ndarray
    converged: bool
    iterations: int
    wall_time: float
    primal_residual: float
    dual_residual: float
    objective: float
    rho: float
    trace: list[ResidualRecord] = field(default_factory=list)
    warnings: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "solver": self.solver.value,
            "converged": bool(self.converged),
            "iterations": int(self.iterations),
            "wall_time": float(self.wall_time),
            "primal_residual": float(self.primal_residual),
            "dual_residual": float(self.dual_residual),
            "objective": float(self.objective),
            "rho": float(self.rho),
            "warnings": list(self.warnings),
        }
