"""
Command-line entry point for wavelet sparse convex clustering.

Subcommands: cluster, denoise, synth, metrics, bench.

Exit codes: 0 success, 2 invalid or missing input, 3 numerical failure,
4 invalid configuration. Exit 1 is left to unexpected crashes.
"""

import argparse
import json
import math
import os
import sys
from pathlib import Path

# Allow running as `python main.py` from a checkout.
sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from dotenv import load_dotenv

from src.config import Settings, configure_logging
from src.factory import ServiceFactory
from src.models import (
    InvalidConfigError,
    InvalidInputError,
    NumericalFailureError,
    RunConfig,
)
from src.models.run_config import SOLVER_NAMES, TUNE_MODES
from src.models.wavelet import FAMILIES
from src.parsers import parse_grid
from src.wavelet.padding import PAD_MODES

EXIT_OK = 0
EXIT_INVALID_INPUT = 2
EXIT_NUMERICAL_FAILURE = 3
EXIT_INVALID_CONFIG = 4


class CliArgumentParser(argparse.ArgumentParser):
    """Usage errors become configuration errors instead of exiting with 2."""

    def error(self, message):
        raise InvalidConfigError(f"{self.prog}: {message}")


def _common_parser(settings: Settings) -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--output-dir", type=Path, default=settings.output_dir)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--jobs", type=int, default=settings.jobs)
    common.add_argument("--basis", choices=FAMILIES, default="db4")
    common.add_argument("--levels", type=int, default=None)
    common.add_argument("--header", action="store_true", help="skip one header line in input CSVs")
    common.add_argument("--padding", choices=tuple(PAD_MODES), default="zero")
    return common


def _solver_arguments(parser: argparse.ArgumentParser, settings: Settings, penalty: float | None = 1.0) -> None:
    parser.add_argument("--lambda", dest="lam", type=float, default=penalty)
    parser.add_argument("--gamma", type=float, default=penalty)
    parser.add_argument("--knn", type=int, default=None)
    parser.add_argument("--phi", type=float, default=None)
    parser.add_argument("--rho", type=float, default=None)
    parser.add_argument("--tol", type=float, default=settings.tol)
    parser.add_argument("--max-iters", type=int, default=settings.max_iters)


def build_parser(settings: Settings) -> CliArgumentParser:
    parser = CliArgumentParser(prog="waveclust", description="Sparse convex wavelet clustering")
    common = _common_parser(settings)
    commands = parser.add_subparsers(dest="command", required=True)

    cluster = commands.add_parser("cluster", parents=[common], help="cluster signals")
    cluster.add_argument("--input", type=Path, required=False)
    _solver_arguments(cluster, settings)
    cluster.add_argument("--lambda-grid", default=None, metavar="START:STOP:COUNT")
    cluster.add_argument("--gamma-grid", default=None, metavar="START:STOP:COUNT")
    cluster.add_argument("--log-grid", action="store_true", help="geometric instead of linear grids")
    cluster.add_argument("--solver", choices=SOLVER_NAMES, default="cb_admm")
    cluster.add_argument("--labels", type=Path, default=None)
    cluster.add_argument("--tune", choices=TUNE_MODES, default="none")
    cluster.add_argument("--normalize-power", type=float, default=None, metavar="TARGET")
    cluster.add_argument("--rank-reduce", action="store_true")
    cluster.add_argument("--refit", action="store_true")
    cluster.add_argument("--trace", action="store_true", help="write the per-iteration residual trace")

    denoise = commands.add_parser("denoise", parents=[common], help="universal-threshold denoising")
    denoise.add_argument("--input", type=Path, required=False)
    denoise.add_argument("--fixed-sigma", type=float, default=None)

    synth = commands.add_parser("synth", parents=[common], help="generate the synthetic study data")
    synth.add_argument("--classes", type=int, default=3)
    synth.add_argument("--reps", type=int, default=5)
    synth.add_argument("--length", type=int, default=1024)
    synth.add_argument("--sparsity", type=int, default=8)
    synth.add_argument("--snr", type=float, default=-7.7, help="dB; 'inf' for noiseless signals")

    metrics = commands.add_parser("metrics", parents=[common], help="score a cluster run against truth")
    metrics.add_argument("--truth", type=Path, required=False)
    metrics.add_argument("--result-dir", type=Path, required=False)

    bench = commands.add_parser("bench", parents=[common], help="solver timing comparison")
    # Unset penalties resolve to the fusion-dominated bench setting.
    _solver_arguments(bench, settings, penalty=None)
    bench.add_argument("--n", type=int, default=240)
    bench.add_argument("--t", type=int, default=1000)
    bench.add_argument("--clusters", type=int, default=3)
    bench.add_argument("--informative", type=int, default=6)
    bench.add_argument("--solvers", nargs="+", choices=SOLVER_NAMES, default=list(SOLVER_NAMES[:3]))
    bench.add_argument("--objective-tol", type=float, default=1e-6)
    return parser


def build_run_config(args: argparse.Namespace) -> RunConfig:
    """Merge parsed arguments into a RunConfig."""
    config = RunConfig(
        command=args.command,
        output_dir=args.output_dir,
        basis=args.basis,
        levels=args.levels,
        seed=args.seed,
        jobs=args.jobs,
        header=args.header,
        padding_mode=args.padding,
    )
    if args.command in ("cluster", "bench"):
        config.lambdas = () if args.lam is None else (args.lam,)
        config.gammas = () if args.gamma is None else (args.gamma,)
        config.knn = args.knn
        config.phi = args.phi
        config.rho = args.rho
        config.tol = args.tol
        config.max_iters = args.max_iters
    if args.command == "cluster":
        config.input_path = args.input
        if args.lambda_grid is not None:
            config.lambdas = parse_grid(args.lambda_grid, log=args.log_grid)
        if args.gamma_grid is not None:
            config.gammas = parse_grid(args.gamma_grid, log=args.log_grid)
        config.solver = args.solver
        config.labels_path = args.labels
        config.tune = args.tune
        config.normalize_power = args.normalize_power
        config.rank_reduce = args.rank_reduce
        config.refit = args.refit
        config.trace = args.trace
    elif args.command == "denoise":
        config.input_path = args.input
        config.fixed_sigma = args.fixed_sigma
    elif args.command == "synth":
        config.classes = args.classes
        config.reps = args.reps
        config.length = args.length
        config.sparsity = args.sparsity
        config.snr_db = None if math.isinf(args.snr) and args.snr > 0 else args.snr
    elif args.command == "metrics":
        config.truth_path = args.truth
        config.result_dir = args.result_dir
    elif args.command == "bench":
        config.bench_n = args.n
        config.bench_t = args.t
        config.classes = args.clusters
        config.informative = args.informative
        config.solvers = tuple(args.solvers)
        config.objective_tol = args.objective_tol
    return config


def main(argv=None) -> int:
    load_dotenv()
    Settings.reset()
    settings = Settings()
    configure_logging(settings.log_level)

    try:
        factory = ServiceFactory()
        factory.validate_configuration()
        args = build_parser(settings).parse_args(argv)
        config = build_run_config(args)
        config.validate()

        service = factory.get_service(config.command, config.output_dir)
        result = service.run(config)
        print(f"Result: {json.dumps(result, default=str)}")
        return EXIT_OK

    except InvalidInputError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INVALID_INPUT
    except NumericalFailureError as e:
        print(f"numerical failure: {e}", file=sys.stderr)
        return EXIT_NUMERICAL_FAILURE
    except InvalidConfigError as e:
        print(f"invalid configuration: {e}", file=sys.stderr)
        return EXIT_INVALID_CONFIG


if __name__ == "__main__":
    sys.exit(main())
