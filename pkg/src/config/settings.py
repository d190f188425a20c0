"""
Configuration settings using Singleton pattern.
Reads the WAVECLUST_* environment variables once per process.
"""

import os
from pathlib import Path
from typing import Optional

LOG_LEVELS = ("off", "info", "debug")


class Settings:
    """
    Singleton configuration class.
    Provides centralized access to environment variables and defaults.
    """

    _instance: Optional['Settings'] = None

    def __new__(cls):
        """Ensure only one instance exists (Singleton pattern)"""
        if cls._instance is None:
            cls._instance = super(Settings, cls).__new__(cls)
            cls._instance._initialized = False
        return cls._instance

    def __init__(self):
        """Initialize settings from environment variables"""
        if self._initialized:
            return

        self._invalid: list[str] = []

        self.log_level = os.environ.get('WAVECLUST_LOG', 'off').strip().lower() or 'off'
        if self.log_level not in LOG_LEVELS:
            self._invalid.append('WAVECLUST_LOG')

        self.jobs = self._int_env('WAVECLUST_JOBS', os.cpu_count() or 1)
        self.output_dir = Path(os.environ.get('WAVECLUST_OUTPUT_DIR', 'waveclust_out'))

        # Solver defaults, overridable per run from the command line
        self.max_iters = self._int_env('WAVECLUST_MAX_ITERS', 100_000)
        self.tol = self._float_env('WAVECLUST_TOL', 1e-6)

        self._initialized = True

    def _int_env(self, name: str, default: int) -> int:
        raw = os.environ.get(name, '').strip()
        if not raw:
            return default
        try:
            value = int(raw)
        except ValueError:
            self._invalid.append(name)
            return default
        if value < 1:
            self._invalid.append(name)
            return default
        return value

    def _float_env(self, name: str, default: float) -> float:
        raw = os.environ.get(name, '').strip()
        if not raw:
            return default
        try:
            value = float(raw)
        except ValueError:
            self._invalid.append(name)
            return default
        if not value > 0:
            self._invalid.append(name)
            return default
        return value

    def validate(self) -> tuple[bool, list[str]]:
        """Validate that every recognised variable parsed"""
        invalid = list(self._invalid)
        return len(invalid) == 0, invalid

    @classmethod
    def reset(cls) -> None:
        """Forget the cached instance so the environment is read again"""
        cls._instance = None
