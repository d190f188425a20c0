"""
Service factory wiring subcommands to their services.
Each service receives the shared Settings and a RunRepository for its output directory.
"""

from pathlib import Path

from src.config import Settings
from src.models import InvalidConfigError
from src.repositories import RunRepository
from src.services import BenchService, ClusteringService, DenoiseService, MetricsService, SynthService

SERVICES = {
    "cluster": ClusteringService,
    "denoise": DenoiseService,
    "synth": SynthService,
    "metrics": MetricsService,
    "bench": BenchService,
}


class ServiceFactory:
    """
    Builds the service for a subcommand.
    Repositories are cached per output directory.
    """

    _settings = None

    def __init__(self):
        self._repositories: dict[Path, RunRepository] = {}

    @property
    def settings(self) -> Settings:
        """Get or create Settings singleton"""
        if self._settings is None:
            self._settings = Settings()
        return self._settings

    def get_run_repository(self, output_dir: Path | str | None = None) -> RunRepository:
        """
        Get or create the repository for an output directory.

        Returns:
            RunRepository instance
        """
        path = Path(output_dir) if output_dir is not None else self.settings.output_dir
        if path not in self._repositories:
            self._repositories[path] = RunRepository(path)
        return self._repositories[path]

    def get_service(self, command: str, output_dir: Path | str | None = None):
        """
        Get a service instance for a subcommand.

        Returns:
            Service with repository and settings injected
        """
        try:
            service_class = SERVICES[command]
        except KeyError:
            raise InvalidConfigError(f"Unknown command '{command}'") from None
        return service_class(repository=self.get_run_repository(output_dir), settings=self.settings)

    def validate_configuration(self) -> bool:
        """
        Validate the environment configuration.

        Returns:
            True if valid, raises InvalidConfigError if invalid
        """
        is_valid, invalid = self.settings.validate()
        if not is_valid:
            raise InvalidConfigError(f"Invalid configuration: {', '.join(invalid)}")
        return True
