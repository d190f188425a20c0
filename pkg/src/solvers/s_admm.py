"""ADMM with a group-lasso primal update solved by an inner accelerated loop."""

import logging

import numpy as np

from src.models import PenaltySpec, SolverKind, SolverState
from src.prox import prox_group_cols, prox_group_rows

from .base import SplittingSolver, StepResiduals, frobenius
from .spectral import gram_lambda_max

logger = logging.getLogger(__name__)


class SplitADMM(SplittingSolver):
    """
    U  <- argmin 1/2 ||U - X||^2 + rho/2 ||DU - V + Z||^2 + gamma sum_j omega_j ||U_.j||
    V  <- prox_{lam/rho P_F}(DU + Z)
    Z  <- Z + DU - V

    The U-subproblem is a multi-task group lasso, solved to `inner_tol` by
    FISTA warm-started at the previous U.
    """

    kind = SolverKind.S_ADMM

    def __init__(self, spec, config=None):
        super().__init__(spec, config)
        self.lipschitz = 1.0 + self.rho * gram_lambda_max(spec.D)
        self.inner_penalty = PenaltySpec(spec.gamma / self.lipschitz, spec.sparsity_weights)
        self.inner_failures = 0
        self.inner_iterations = 0

    def group_lasso(self, U0: np.ndarray, target: np.ndarray) -> tuple[np.ndarray, int, bool]:
        """FISTA on the U-subproblem with DU pulled towards `target` = V - Z."""
        X, rho, L = self.spec.X, self.rho, self.lipschitz
        U_prev = U0
        Y = U0
        t = 1.0
        for it in range(1, self.config.inner_max_iters + 1):
            gradient = (Y - X) + rho * (self.Dt @ (self.D @ Y - target))
            U = prox_group_cols(Y - gradient / L, self.inner_penalty)
            change = frobenius(U - U_prev)
            if change <= self.config.inner_tol * max(1.0, frobenius(U)):
                return U, it, True
            t_next = 0.5 * (1.0 + np.sqrt(1.0 + 4.0 * t * t))
            Y = U + ((t - 1.0) / t_next) * (U - U_prev)
            U_prev, t = U, t_next
        return U_prev, self.config.inner_max_iters, False

    def step(self, state: SolverState) -> StepResiduals:
        U, inner_iters, ok = self.group_lasso(state.U, state.V1 - state.Z1)
        self.inner_iterations += inner_iters
        if not ok:
            self.inner_failures += 1
            logger.debug("Inner group lasso hit %d iterations at outer %d", inner_iters, state.iteration + 1)
        state.U = U
        state.V2 = U
        DU = self.D @ U

        V1_prev = state.V1
        state.V1 = prox_group_rows(DU + state.Z1, self.fusion_penalty)
        r1 = DU - state.V1
        state.Z1 = state.Z1 + r1

        return StepResiduals(
            primal=frobenius(r1),
            dual=self.rho * frobenius(self.Dt @ (state.V1 - V1_prev)),
            primal_scale=max(frobenius(DU), frobenius(state.V1), 1.0),
            dual_scale=max(self.rho * frobenius(self.Dt @ state.Z1), 1.0),
        )

    def warnings(self) -> list[str]:
        if not self.inner_failures:
            return []
        message = (
            f"inner group-lasso solver reached {self.config.inner_max_iters} iterations "
            f"in {self.inner_failures} outer iterations"
        )
        logger.warning(message)
        return [message]
