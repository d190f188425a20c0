"""Cartesian-Block ADMM: closed-form updates for the pair (DU, U)."""

import numpy as np

from src.models import PenaltySpec, SolverKind, SolverState
from src.prox import prox_group_cols, prox_group_rows

from .base import SplittingSolver, StepResiduals, frobenius
from .factorization import factorization_cache


class CartesianBlockADMM(SplittingSolver):
    """
    U  <- [(1 + rho) I + rho D^T D]^{-1} [X + rho D^T (V1 - Z1) + rho (V2 - Z2)]
    V1 <- prox_{lam/rho P_F}(DU + Z1)
    V2 <- prox_{gamma/rho P_S}(U + Z2)
    Z1 <- Z1 + DU - V1,  Z2 <- Z2 + U - V2
    """

    kind = SolverKind.CB_ADMM

    def __init__(self, spec, config=None):
        super().__init__(spec, config)
        self.sparsity_penalty = PenaltySpec(spec.gamma / self.rho, spec.sparsity_weights)
        self.factorization = factorization_cache.get(spec.D, self.rho)

    def u_update(self, state: SolverState) -> tuple[np.ndarray, np.ndarray]:
        """Solve the U stationarity system; returns (U, right-hand side)."""
        rhs = (
            self.spec.X
            + self.rho * (self.Dt @ (state.V1 - state.Z1))
            + self.rho * (state.V2 - state.Z2)
        )
        return self.factorization.solve(rhs), rhs

    def step(self, state: SolverState) -> StepResiduals:
        state.U, _ = self.u_update(state)
        DU = self.D @ state.U

        V1_prev, V2_prev = state.V1, state.V2
        state.V1 = prox_group_rows(DU + state.Z1, self.fusion_penalty)
        state.V2 = prox_group_cols(state.U + state.Z2, self.sparsity_penalty)

        r1 = DU - state.V1
        r2 = state.U - state.V2
        state.Z1 = state.Z1 + r1
        state.Z2 = state.Z2 + r2

        dual_change = self.Dt @ (state.V1 - V1_prev) + (state.V2 - V2_prev)
        return StepResiduals(
            primal=frobenius(r1, r2),
            dual=self.rho * frobenius(dual_change),
            primal_scale=max(frobenius(DU, state.U), frobenius(state.V1, state.V2), 1.0),
            dual_scale=max(self.rho * frobenius(self.Dt @ state.Z1 + state.Z2), 1.0),
        )
