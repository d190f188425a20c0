"""Cached Cholesky factorizations of (1 + rho) I + rho D^T D."""

import hashlib
import logging
import threading
from collections import OrderedDict

import numpy as np
import scipy.linalg

from src.models import DifferenceMatrix, NumericalFailureError

logger = logging.getLogger(__name__)


class CachedFactorization:
    def __init__(self, system: np.ndarray):
        try:
            self._cho = scipy.linalg.cho_factor(system, lower=False, check_finite=False)
        except np.linalg.LinAlgError as e:
            raise NumericalFailureError(f"Cholesky factorization failed: {e}") from e
        self.system = system

    def solve(self, rhs: np.ndarray) -> np.ndarray:
        return scipy.linalg.cho_solve(self._cho, rhs, check_finite=False)


class FactorizationCache:
    """
    Keyed on (D, rho). Concurrent lookups are safe; inserts take the lock.
    """

    def __init__(self, maxsize: int = 32):
        self.maxsize = maxsize
        self._entries: OrderedDict[tuple[str, float], CachedFactorization] = OrderedDict()
        self._lock = threading.Lock()
        self.hits = 0
        self.misses = 0

    @staticmethod
    def _key(D: DifferenceMatrix, rho: float) -> tuple[str, float]:
        return hashlib.sha1(D.fingerprint()).hexdigest(), float(rho)

    @staticmethod
    def system_matrix(D: DifferenceMatrix, rho: float) -> np.ndarray:
        return (1.0 + rho) * np.eye(D.n) + rho * D.gram()

    def get(self, D: DifferenceMatrix, rho: float) -> CachedFactorization:
        key = self._key(D, rho)
        entry = self._entries.get(key)
        if entry is not None:
            self.hits += 1
            return entry
        with self._lock:
            entry = self._entries.get(key)
            if entry is None:
                self.misses += 1
                logger.debug("Factorizing %d x %d system for rho=%g", D.n, D.n, rho)
                entry = CachedFactorization(self.system_matrix(D, rho))
                self._entries[key] = entry
                while len(self._entries) > self.maxsize:
                    self._entries.popitem(last=False)
            return entry

    def clear(self) -> None:
        with self._lock:
            self._entries.clear()
            self.hits = 0
            self.misses = 0


factorization_cache = FactorizationCache()
