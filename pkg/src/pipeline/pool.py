"""Order-preserving worker pool for independent solves."""

import logging
import os
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable, Optional, TypeVar

T = TypeVar("T")
R = TypeVar("R")

logger = logging.getLogger(__name__)


def default_jobs() -> int:
    return os.cpu_count() or 1


def map_in_pool(fn: Callable[[T], R], payloads: Iterable[T], jobs: Optional[int] = 1) -> list[R]:
    """Apply `fn` to every payload; results come back in submission order."""
    payloads = list(payloads)
    jobs = default_jobs() if jobs is None else int(jobs)
    workers = min(max(jobs, 1), len(payloads))
    if workers <= 1:
        return [fn(payload) for payload in payloads]
    logger.debug("Dispatching %d tasks to %d worker processes", len(payloads), workers)
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, payloads))
