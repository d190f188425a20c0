"""Splitting solvers for sparse convex clustering"""

from typing import Optional

from src.models import ProblemSpec, SolveReport, SolverConfig, SolverKind

from .base import SplittingSolver, StepResiduals
from .cb_admm import CartesianBlockADMM
from .convergence import LinearRateFit, check_linear_rate, fit_linear_rate
from .factorization import FactorizationCache, factorization_cache
from .objective import objective
from .pg_admm import ProximalGradientADMM
from .s_admm import SplitADMM
from .s_ama import SplitAMA
from .spectral import augmented_lambda_max, gram_lambda_max, power_iteration

SOLVERS: dict[SolverKind, type[SplittingSolver]] = {
    SolverKind.CB_ADMM: CartesianBlockADMM,
    SolverKind.S_ADMM: SplitADMM,
    SolverKind.S_AMA: SplitAMA,
    SolverKind.PG_ADMM: ProximalGradientADMM,
}


def build_solver(spec: ProblemSpec, config: SolverConfig) -> SplittingSolver:
    return SOLVERS[config.solver](spec, config)


def solve(spec: ProblemSpec, config: Optional[SolverConfig] = None) -> SolveReport:
    """Run the solver named by `config.solver` (CB-ADMM by default)."""
    return build_solver(spec, config or SolverConfig()).solve()


def _solve_as(kind: SolverKind, spec: ProblemSpec, config: Optional[SolverConfig]) -> SolveReport:
    config = config or SolverConfig(solver=kind)
    return SOLVERS[kind](spec, config).solve()


def cb_admm_solve(spec: ProblemSpec, config: Optional[SolverConfig] = None) -> SolveReport:
    return _solve_as(SolverKind.CB_ADMM, spec, config)


def s_admm_solve(spec: ProblemSpec, config: Optional[SolverConfig] = None) -> SolveReport:
    return _solve_as(SolverKind.S_ADMM, spec, config)


def s_ama_solve(spec: ProblemSpec, config: Optional[SolverConfig] = None) -> SolveReport:
    return _solve_as(SolverKind.S_AMA, spec, config)


def pg_admm_solve(spec: ProblemSpec, config: Optional[SolverConfig] = None) -> SolveReport:
    return _solve_as(SolverKind.PG_ADMM, spec, config)


__all__ = [
    "SOLVERS",
    "SplittingSolver",
    "StepResiduals",
    "CartesianBlockADMM",
    "SplitADMM",
    "SplitAMA",
    "ProximalGradientADMM",
    "LinearRateFit",
    "check_linear_rate",
    "fit_linear_rate",
    "FactorizationCache",
    "factorization_cache",
    "objective",
    "power_iteration",
    "gram_lambda_max",
    "augmented_lambda_max",
    "build_solver",
    "solve",
    "cb_admm_solve",
    "s_admm_solve",
    "s_ama_solve",
    "pg_admm_solve",
]
