"""
Script to rerun the synthetic comparison study.
Every method is oracle-tuned against the true labels on each seed and basis,
then scored on ARI, centroid correlation, compression and support F1.
"""

import argparse
import os
import sys
from pathlib import Path

import numpy as np

# Add project root to path
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from dotenv import load_dotenv

from src.config import Settings, configure_logging
from src.evaluation import evaluate_result, generate_synthetic
from src.models import FAMILIES, WaveletBasis, WaveClustError
from src.pipeline import BaselineMethod, BaselineParams, baseline_pipeline, oracle_tune
from src.repositories import RunRepository

METHODS = ("KM", "CC", "D_KM", "D_CC", "KM_D", "CC_D", "CWC")
LAMBDAS = tuple(np.geomspace(0.5, 20.0, 6))
GAMMAS = tuple(np.linspace(0.5, 3.0, 6))


def run_method(data, basis: WaveletBasis, method: BaselineMethod, seed: int, jobs: int):
    """Oracle-tuned run of one method on one dataset."""
    if method.uses_kmeans:
        return baseline_pipeline(data.X, basis, method, BaselineParams(k=data.true_centroids.shape[0], seed=seed))
    gammas = GAMMAS if method is BaselineMethod.CWC else (0.0,)
    outcome = oracle_tune(data.X, basis, LAMBDAS, gammas, data.true_labels, method=method, jobs=jobs)
    return outcome.best.result


def study(seeds: int, jobs: int) -> dict:
    rows = {}
    for family in FAMILIES:
        basis = WaveletBasis(family)
        print(f"\n🔬 Basis {family}")
        scores = {name: [] for name in METHODS}
        for seed in range(seeds):
            data = generate_synthetic(basis, seed=seed)
            for name in METHODS:
                result = run_method(data, basis, BaselineMethod.parse(name), seed, jobs)
                scores[name].append(evaluate_result(result, data))
            print(f"   - seed {seed} done")
        rows[family] = {
            name: {metric: float(np.nanmean([s[metric] for s in runs])) for metric in runs[0]}
            for name, runs in scores.items()
        }
    return rows


def print_table(rows: dict) -> None:
    print(f"\n{'basis':6s} {'method':6s} {'ARI':>7s} {'corr':>7s} {'compr':>7s} {'F1':>7s}")
    print("-" * 44)
    for family, methods in rows.items():
        for name, m in methods.items():
            print(f"{family:6s} {name:6s} {m['ari']:7.3f} {m['correlation']:7.3f} "
                  f"{m['compression']:7.3f} {m['f1']:7.3f}")


def main():
    parser = argparse.ArgumentParser(description=__doc__.strip().splitlines()[0])
    parser.add_argument("--seeds", type=int, default=5)
    parser.add_argument("--jobs", type=int, default=None)
    parser.add_argument("--output-dir", type=Path, default=Path("study_out"))
    args = parser.parse_args()

    load_dotenv()
    Settings.reset()
    configure_logging(Settings().log_level)
    print("\n🚀 Synthetic study")
    print("------------------")
    try:
        rows = study(args.seeds, args.jobs)
    except WaveClustError as e:
        print(f"❌ Study failed: {e}")
        return 1

    print_table(rows)
    path = RunRepository(args.output_dir).write_json("study.json", {"seeds": args.seeds, "methods": rows})
    print(f"\n✅ Wrote {path}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
