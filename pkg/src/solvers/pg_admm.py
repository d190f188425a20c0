"""Multi-block ADMM taking a single proximal-gradient step for U."""

from src.models import PenaltySpec, SolverKind, SolverState
from src.prox import prox_group_cols, prox_group_rows

from .base import SplittingSolver, StepResiduals, frobenius
from .spectral import augmented_lambda_max


class ProximalGradientADMM(SplittingSolver):
    """
    U <- prox_{s gamma P_S}((1 - s) U + s X - s rho D^T (DU - V + Z)),  s = 1 / lambda_max(I + rho D^T D)
    V <- prox_{lam/rho P_F}(DU + Z)
    Z <- Z + DU - V
    """

    kind = SolverKind.PG_ADMM

    def __init__(self, spec, config=None):
        super().__init__(spec, config)
        self.step_size = 1.0 / augmented_lambda_max(spec.D, self.rho)
        self.sparsity_penalty = PenaltySpec(self.step_size * spec.gamma, spec.sparsity_weights)

    def step(self, state: SolverState) -> StepResiduals:
        s, rho, X = self.step_size, self.rho, self.spec.X
        U_prev = state.U
        smooth = (1.0 - s) * U_prev + s * X - s * rho * (self.Dt @ (self.D @ U_prev - state.V1 + state.Z1))
        state.U = prox_group_cols(smooth, self.sparsity_penalty)
        state.V2 = state.U
        DU = self.D @ state.U

        V1_prev = state.V1
        state.V1 = prox_group_rows(DU + state.Z1, self.fusion_penalty)
        r1 = DU - state.V1
        state.Z1 = state.Z1 + r1

        dual = frobenius(rho * (self.Dt @ (state.V1 - V1_prev)), (state.U - U_prev) / s)
        return StepResiduals(
            primal=frobenius(r1),
            dual=dual,
            primal_scale=max(frobenius(DU), frobenius(state.V1), 1.0),
            dual_scale=max(rho * frobenius(self.Dt @ state.Z1), 1.0),
        )
