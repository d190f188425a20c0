"""
Service for the `synth` command.
"""
from src.config import Settings
from src.evaluation import generate_synthetic
from src.models import RunConfig, WaveletBasis
from src.repositories import RunRepository


class SynthService:
    """Writes a seeded synthetic study dataset: X.csv, labels.csv and truth.json."""

    def __init__(self, repository: RunRepository, settings: Settings):
        self.repository = repository
        self.settings = settings

    def run(self, config: RunConfig) -> dict:
        basis = WaveletBasis(config.basis, config.levels)
        dataset = generate_synthetic(
            basis,
            classes=config.classes,
            reps=config.reps,
            T=config.length,
            sparsity_per_class=config.sparsity,
            snr_db=config.snr_db,
            seed=config.seed,
        )
        self.repository.write_matrix("X.csv", dataset.X)
        self.repository.write_labels("labels.csv", dataset.true_labels)
        self.repository.write_json("truth.json", dataset.to_truth_dict())
        print(f"Generated {dataset.n} x {config.length} signals ({config.classes} classes, seed {config.seed})")
        return {"n": dataset.n, "files": [str(p) for p in self.repository.written]}
