"""Process-wide knobs: internal parallelism cap via HOMBRAX_THREADS."""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Sequence, TypeVar

T = TypeVar("T")
R = TypeVar("R")


def worker_count() -> int:
    """Thread cap for the exhaustive scans; defaults to 1 (serial)."""
    raw = os.environ.get("HOMBRAX_THREADS", "1")
    try:
        n = int(raw)
    except ValueError:
        return 1
    return max(1, n)


def map_chunks(fn: Callable[[T], R], items: Sequence[T]) -> list[R]:
    """Apply fn to every item, threaded when HOMBRAX_THREADS > 1.

    The scan chunks are numpy-heavy, so threads genuinely overlap; results
    come back in input order either way.
    """
    workers = worker_count()
    if workers <= 1 or len(items) <= 1:
        return [fn(it) for it in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))
