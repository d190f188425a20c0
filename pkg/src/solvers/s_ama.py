"""Alternating minimization with the copy variable removed by Moreau's identity."""

import numpy as np

from src.models import InvalidConfigError, PenaltySpec, SolverKind, SolverState
from src.prox import project_dual_ball_rows, prox_group_cols, prox_group_rows

from .base import SplittingSolver, StepResiduals, frobenius
from .spectral import gram_lambda_max

STEP_BOUND_FRACTION = 0.99


class SplitAMA(SplittingSolver):
    """
    U <- prox_{gamma P_S}(X - D^T Z)
    Z <- rho * Pi_{lam/rho B*}(DU + Z / rho)

    Z is the unscaled dual. Convergence needs rho < 2 / lambda_max(D^T D).
    """

    kind = SolverKind.S_AMA

    def __init__(self, spec, config=None):
        self.gram_max = gram_lambda_max(spec.D)
        self.rho_bound = 2.0 / self.gram_max if self.gram_max > 0 else np.inf
        super().__init__(spec, config)
        self.sparsity_penalty = PenaltySpec(spec.gamma, spec.sparsity_weights)

    def resolve_rho(self) -> float:
        if self.config.rho is None:
            return STEP_BOUND_FRACTION * self.rho_bound if np.isfinite(self.rho_bound) else 1.0
        rho = float(self.config.rho)
        if rho >= self.rho_bound:
            raise InvalidConfigError(
                f"S-AMA needs rho < 2 / lambda_max(D^T D) = {self.rho_bound:.6g}, got {rho}"
            )
        return rho

    def step(self, state: SolverState) -> StepResiduals:
        U_prev = state.U
        state.U = prox_group_cols(self.spec.X - self.Dt @ state.Z1, self.sparsity_penalty)
        state.V2 = state.U
        DU = self.D @ state.U

        shifted = DU + state.Z1 / self.rho
        state.V1 = prox_group_rows(shifted, self.fusion_penalty)
        state.Z1 = self.rho * project_dual_ball_rows(shifted, self.fusion_penalty)

        return StepResiduals(
            primal=frobenius(DU - state.V1),
            dual=frobenius(state.U - U_prev),
            primal_scale=max(frobenius(DU), frobenius(state.V1), 1.0),
            dual_scale=max(frobenius(state.U), 1.0),
        )
