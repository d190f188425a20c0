"""
Service running wavelet sparse convex clustering over a (lambda, gamma) grid.
"""
import logging

import numpy as np

from src import __version__
from src.config import Settings
from src.models import InvalidInputError, RunConfig, SolverConfig, WaveletBasis
from src.parsers import read_labels, read_matrix
from src.pipeline import BaselineParams, TuningOutcome, last_point, normalize_total_power, oracle_select, run_grid
from src.repositories import RunRepository

logger = logging.getLogger(__name__)


def solver_config_from(config: RunConfig, record_trace: bool = False) -> SolverConfig:
    return SolverConfig(
        solver=config.solver,
        rho=config.rho,
        max_iters=config.max_iters,
        tol_primal=config.tol,
        tol_dual=config.tol,
        record_trace=record_trace,
    )


class ClusteringService:
    """
    Service for the `cluster` command: reads a signal matrix, solves every
    grid point, picks one, and writes centroids, labels and result.json.
    """

    def __init__(self, repository: RunRepository, settings: Settings):
        self.repository = repository
        self.settings = settings

    def run(self, config: RunConfig) -> dict:
        X = read_matrix(config.input_path, header=config.header)
        true_labels = None
        if config.labels_path is not None:
            true_labels = read_labels(config.labels_path, header=config.header)
            if true_labels.size != X.shape[0]:
                raise InvalidInputError(f"Got {true_labels.size} labels for {X.shape[0]} signals")
        if config.normalize_power is not None:
            X = normalize_total_power(X, config.normalize_power)

        basis = WaveletBasis(config.basis, config.levels)
        params = BaselineParams(
            knn=config.knn,
            phi=config.phi if config.phi is not None else "auto",
            config=solver_config_from(config, record_trace=config.trace),
            padding_mode=config.padding_mode,
            refit=config.refit,
            rank_reduce=config.rank_reduce,
            seed=config.seed,
        )
        logger.info("Clustering %d x %d signals on a %d-point grid", X.shape[0], X.shape[1],
                    len(config.lambdas) * len(config.gammas))

        entries = run_grid(X, basis, config.lambdas, config.gammas, params, jobs=config.jobs)
        if config.tune == "oracle":
            outcome = TuningOutcome(entries=entries, selected=oracle_select(entries, true_labels))
        else:
            if true_labels is not None:
                oracle_select(entries, true_labels)
            outcome = last_point(entries)

        chosen = outcome.best
        result = chosen.result
        report = result.report

        self.repository.write_matrix("centroids.csv", result.centroids)
        self.repository.write_matrix("centroids_wavelet.csv", result.centroids_wavelet)
        self.repository.write_labels("labels.csv", result.labels)
        if config.trace and report is not None:
            self.repository.write_residual_trace("trace.csv", report.trace)

        document = {
            "tool": "waveclust",
            "version": __version__,
            "command": "cluster",
            "objective": result.objective,
            "lambda": chosen.lam,
            "gamma": chosen.gamma,
            "n_clusters": result.n_clusters,
            "sparsity": {
                "compression": result.compression,
                "support_size": int(result.support_mask.sum()),
                "support": np.flatnonzero(result.support_mask),
            },
            "solver": report.to_dict(),
            "padding": result.layout.to_dict(),
            "tuning": outcome.to_dict(),
            "grid": [entry.to_dict() for entry in outcome.entries],
            "config": config.to_dict(),
        }
        self.repository.write_json("result.json", document)
        print(
            f"Clustered {X.shape[0]} signals into {result.n_clusters} clusters "
            f"(lambda={chosen.lam:g}, gamma={chosen.gamma:g}, compression={result.compression:.4f})"
        )
        return {
            "n_clusters": result.n_clusters,
            "lambda": chosen.lam,
            "gamma": chosen.gamma,
            "converged": bool(report.converged),
            "files": [str(p) for p in self.repository.written],
        }
