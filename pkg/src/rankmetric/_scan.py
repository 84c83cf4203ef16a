"""Deterministic range-partitioned scans, optionally over worker processes.

A scan is a function ``fn(*args, start, stop)`` over a global index range.
Ranges are split into contiguous chunks and results come back in range
order, so any reduction that breaks ties by smallest index is independent
of the worker count.
"""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor

from .linalg import split_range

log = logging.getLogger("rankmetric")


def run_ranges(fn, args: tuple, total: int, workers: int = 1, chunks_per_worker: int = 4) -> list:
    if total == 0:
        return []
    if workers <= 1:
        return [fn(*args, 0, total)]
    ranges = split_range(total, workers * chunks_per_worker)
    with ProcessPoolExecutor(max_workers=workers) as pool:
        futs = [pool.submit(fn, *args, lo, hi) for lo, hi in ranges]
        out = []
        for i, f in enumerate(futs):
            out.append(f.result())
            log.debug("chunk %d/%d done", i + 1, len(futs))
        return out


def reduce_max(parts: list) -> tuple[int, int]:
    """Combine ``(value, index)`` pairs: largest value, then smallest index."""
    best = (-1, -1)
    for v, i in parts:
        if v > best[0]:
            best = (v, i)
    return best


def reduce_first(parts: list) -> int:
    """Smallest non-negative index among ``parts`` or -1."""
    hits = [i for i in parts if i >= 0]
    return min(hits) if hits else -1
