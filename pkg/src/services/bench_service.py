"""
Service for the `bench` command: wall-clock comparison of the solvers on a
shared Gaussian-mixture instance.
"""
import logging

import numpy as np
from threadpoolctl import threadpool_limits

from src.config import Settings
from src.evaluation import generate_bench_instance
from src.graph import gaussian_knn_weights, variance_sparsity_weights
from src.models import FusionGraph, ProblemSpec, RunConfig, SolverConfig, SolverKind
from src.pipeline import map_in_pool
from src.repositories import RunRepository
from src.solvers import solve

logger = logging.getLogger(__name__)

REFERENCE_TOL = 1e-10
# Shared rho of the ADMM variants when --rho is not given.
BENCH_RHO = 3.0
FUSION_MARGIN = 2.0
# Noise columns of a fused fit survive only past 5 standard errors of their mean.
BENCH_GAMMA = 5.0


def fusion_scale(X: np.ndarray, graph: FusionGraph) -> float:
    """Smallest lambda with ||X_i - X_j|| <= lambda * w_ij on every edge."""
    diffs = np.linalg.norm(X[graph.pairs[:, 0]] - X[graph.pairs[:, 1]], axis=1)
    return float(np.max(diffs / graph.weights)) if diffs.size else 0.0


def bench_penalties(X: np.ndarray, graph: FusionGraph, config: RunConfig) -> tuple[float, float, float]:
    """
    Resolve (lambda, gamma, rho) for the bench.

    Unset penalties default to the fusion-dominated end of the path: every
    edge stays inside its ADMM fusion threshold lambda * w / rho with a
    factor-two margin, so the fit is fully fused, and gamma zeroes the pure
    noise columns. Explicit --lambda, --gamma and --rho always win.
    """
    rho = config.rho if config.rho is not None else BENCH_RHO
    lam = config.lambdas[0] if config.lambdas else FUSION_MARGIN * rho * fusion_scale(X, graph)
    gamma = config.gammas[0] if config.gammas else BENCH_GAMMA
    return lam, gamma, rho


def _timed_solve(payload: tuple):
    spec, solver_config = payload
    with threadpool_limits(limits=1):
        return solve(spec, solver_config)


class BenchService:
    """
    Runs every selected solver to the same relative objective gap against a
    tightly converged reference and writes one trace per solver.
    """

    def __init__(self, repository: RunRepository, settings: Settings):
        self.repository = repository
        self.settings = settings

    def reference_objective(self, spec: ProblemSpec, config: RunConfig) -> float:
        reference = SolverConfig(
            solver=SolverKind.CB_ADMM,
            max_iters=max(config.max_iters, 100_000),
            tol_primal=REFERENCE_TOL,
            tol_dual=REFERENCE_TOL,
        )
        return solve(spec, reference).objective

    def run(self, config: RunConfig) -> dict:
        X, _ = generate_bench_instance(
            n=config.bench_n,
            t=config.bench_t,
            clusters=config.classes,
            informative=config.informative,
            seed=config.seed,
        )
        graph = gaussian_knn_weights(X, k=config.knn, phi=config.phi if config.phi is not None else "auto")
        lam, gamma, rho = bench_penalties(X, graph, config)
        spec = ProblemSpec.from_graph(X, graph, lam, gamma, variance_sparsity_weights(X))
        logger.info("Bench penalties lambda=%.6g gamma=%.6g rho=%.6g", lam, gamma, rho)
        target = self.reference_objective(spec, config)
        logger.info("Reference objective %.12g", target)

        payloads = []
        for name in config.solvers:
            kind = SolverKind.parse(name)
            solver_config = SolverConfig(
                solver=kind,
                # The AMA step bound depends on D; it always uses its own default.
                rho=None if kind is SolverKind.S_AMA else rho,
                max_iters=config.max_iters,
                record_trace=True,
                target_objective=target,
                objective_tol=config.objective_tol,
            )
            payloads.append((spec, solver_config))

        reports = map_in_pool(_timed_solve, payloads, config.jobs)

        summary = {
            "instance": {
                "n": config.bench_n,
                "t": config.bench_t,
                "clusters": config.classes,
                "informative": config.informative,
                "seed": config.seed,
                "lambda": lam,
                "gamma": gamma,
                "rho": rho,
                "edges": graph.m,
            },
            "reference_objective": target,
            "objective_tol": config.objective_tol,
            "solvers": {},
        }
        print(f"  lambda={lam:.6g}  gamma={gamma:.6g}  rho={rho:.6g}")
        for report in reports:
            name = report.solver.value
            self.repository.write_bench_trace(f"trace_{name}.csv", report.trace, target)
            gap = (report.objective - target) / max(abs(target), 1e-300)
            summary["solvers"][name] = {
                "wall_seconds": report.wall_time,
                "iterations": report.iterations,
                "converged": report.converged,
                "final_gap": gap,
                "rho": report.rho,
            }
            print(f"  {name:8s} {report.iterations:7d} iterations  {report.wall_time:9.3f}s  gap={gap:.2e}")
        self.repository.write_json("summary.json", summary)
        return summary
