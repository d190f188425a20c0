"""Iteration loop shared by the splitting solvers."""

import logging
import time
from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Optional

import numpy as np

from src.models import (
    InvalidConfigError,
    NumericalFailureError,
    PenaltySpec,
    ProblemSpec,
    ResidualRecord,
    SolveReport,
    SolverConfig,
    SolverKind,
    SolverState,
)

from .objective import objective

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class StepResiduals:
    """Absolute residual norms of one iteration and the scales they are compared to."""

    primal: float
    dual: float
    primal_scale: float
    dual_scale: float


def frobenius(*blocks: np.ndarray) -> float:
    return float(np.sqrt(sum(float(np.sum(block * block)) for block in blocks)))


class SplittingSolver(ABC):
    """
    Base class: subclasses implement `step`, which advances the state by one
    iteration in place and returns its residuals.
    """

    kind: SolverKind
    default_rho: float = 1.0

    def __init__(self, spec: ProblemSpec, config: Optional[SolverConfig] = None):
        config = config or SolverConfig(solver=self.kind)
        if config.solver is not self.kind:
            raise InvalidConfigError(
                f"{type(self).__name__} cannot run a config for solver '{config.solver.value}'"
            )
        self.spec = spec
        self.config = config
        self.rho = self.resolve_rho()
        self.D = spec.D.matrix
        self.Dt = spec.D.T
        self.fusion_penalty = PenaltySpec(spec.lam / self.rho, spec.fusion_weights)

    def resolve_rho(self) -> float:
        return float(self.config.rho) if self.config.rho is not None else self.default_rho

    def initial_state(self) -> SolverState:
        return SolverState.initial(self.spec)

    @abstractmethod
    def step(self, state: SolverState) -> StepResiduals:
        ...

    def _check_finite(self, state: SolverState) -> None:
        if not (np.all(np.isfinite(state.U)) and np.all(np.isfinite(state.Z1))):
            raise NumericalFailureError(
                f"{self.kind.value}: non-finite iterate at iteration {state.iteration}"
            )

    def solve(self, state: Optional[SolverState] = None) -> SolveReport:
        config = self.config
        state = state or self.initial_state()
        track_objective = config.record_trace or config.target_objective is not None
        target = config.target_objective
        target_scale = max(abs(target), np.finfo(float).tiny) if target is not None else 1.0

        # Solver time only; objective monitoring and trace records are not timed.
        elapsed = 0.0
        converged = False
        residuals = StepResiduals(np.inf, np.inf, 1.0, 1.0)
        for k in range(state.iteration + 1, state.iteration + config.max_iters + 1):
            tick = time.perf_counter()
            residuals = self.step(state)
            state.iteration = k
            self._check_finite(state)
            elapsed += time.perf_counter() - tick

            value = objective(self.spec, state.U) if track_objective else float("nan")
            if config.record_trace:
                state.record(
                    ResidualRecord(k, residuals.primal, residuals.dual, value, elapsed)
                )

            if target is not None:
                converged = (value - target) / target_scale <= config.objective_tol
            else:
                converged = (
                    residuals.primal <= config.tol_primal * residuals.primal_scale
                    and residuals.dual <= config.tol_dual * residuals.dual_scale
                )
            if converged:
                break
            if k % config.log_every == 0:
                logger.debug(
                    "%s iter %d: primal=%.3e dual=%.3e", self.kind.value, k, residuals.primal, residuals.dual
                )

        wall_time = elapsed
        final_objective = objective(self.spec, state.U)
        warnings = self.warnings()
        if not converged:
            warnings.append(f"stopped at max_iters={config.max_iters} before convergence")
        logger.info(
            "%s %s after %d iterations (%.3fs), objective=%.10g",
            self.kind.value,
            "converged" if converged else "did not converge",
            state.iteration,
            wall_time,
            final_objective,
        )
        return SolveReport(
            solver=self.kind,
            U_hat=state.U,
            V1=state.V1,
            V2=state.V2,
            converged=converged,
            iterations=state.iteration,
            wall_time=wall_time,
            primal_residual=residuals.primal,
            dual_residual=residuals.dual,
            objective=final_objective,
            rho=self.rho,
            trace=list(state.residuals),
            warnings=warnings,
        )

    def warnings(self) -> list[str]:
        return []
