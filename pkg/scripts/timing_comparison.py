"""
Script to compare solver wall-clock time on the benchmark mixture.
Wraps the `bench` service and prints a short ranking.
"""

import argparse
import os
import sys
from pathlib import Path

# Add project root to path
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from dotenv import load_dotenv

from src.config import Settings, configure_logging
from src.factory import ServiceFactory
from src.models import RunConfig, WaveClustError
from src.models.run_config import SOLVER_NAMES
from src.services.bench_service import BENCH_GAMMA, BENCH_RHO


def main():
    parser = argparse.ArgumentParser(description=__doc__.strip().splitlines()[0])
    parser.add_argument("--lambda", dest="lam", type=float, default=None, help="default: fusion-dominated scale")
    parser.add_argument("--gamma", type=float, default=None, help=f"default: {BENCH_GAMMA}")
    parser.add_argument("--rho", type=float, default=None, help=f"ADMM rho, default: {BENCH_RHO}")
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--solvers", nargs="+", choices=SOLVER_NAMES, default=list(SOLVER_NAMES))
    parser.add_argument("--output-dir", type=Path, default=Path("bench_out"))
    args = parser.parse_args()

    load_dotenv()
    Settings.reset()
    configure_logging(Settings().log_level)
    print("\n⏱️  Solver timing comparison (240 x 1000, 3 clusters, 6 informative features)")
    print("-------------------------------------------------------------------------------")

    config = RunConfig(
        command="bench",
        output_dir=args.output_dir,
        lambdas=() if args.lam is None else (args.lam,),
        gammas=() if args.gamma is None else (args.gamma,),
        rho=args.rho,
        seed=args.seed,
        jobs=1,
        solvers=tuple(args.solvers),
    )
    try:
        config.validate()
        summary = ServiceFactory().get_service("bench", args.output_dir).run(config)
    except WaveClustError as e:
        print(f"❌ Benchmark failed: {e}")
        return 1

    setting = summary["instance"]
    print(f"\n⚙️  lambda={setting['lambda']:.6g}  gamma={setting['gamma']:.6g}  rho={setting['rho']:.6g}")
    ranking = sorted(summary["solvers"].items(), key=lambda item: item[1]["wall_seconds"])
    print("\n🏁 Ranking by wall time:")
    for place, (name, stats) in enumerate(ranking, start=1):
        status = "✅" if stats["converged"] else "⚠️ "
        print(f"   {place}. {status} {name:8s} {stats['wall_seconds']:9.3f}s  {stats['iterations']} iterations")
    print(f"\n📁 Traces written to {args.output_dir}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
