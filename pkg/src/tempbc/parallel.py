"""Deterministic chunked fan-out.

Work is split into fixed-size chunks by item index, independent of the worker
count, and partial results are folded in chunk order. A run with 1, 4, or 8
workers therefore produces bit-identical output.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterator, TypeVar

__all__ = ["CHUNK_SIZE", "chunk_ranges", "run_chunks", "default_threads"]

CHUNK_SIZE = 256

T = TypeVar("T")


def default_threads() -> int:
    return os.cpu_count() or 1


def chunk_ranges(total: int, chunk: int = CHUNK_SIZE) -> list[tuple[int, int]]:
    return [(lo, min(lo + chunk, total)) for lo in range(0, total, chunk)]


def run_chunks(
    worker: Callable[[int, int], T], total: int, threads: int, chunk: int = CHUNK_SIZE
) -> Iterator[T]:
    """Yield worker(lo, hi) per chunk, in chunk order.

    ``worker`` must be picklable (a module-level function or functools.partial
    over one) when threads > 1.
    """
    ranges = chunk_ranges(total, chunk)
    if threads <= 1 or len(ranges) <= 1:
        for lo, hi in ranges:
            yield worker(lo, hi)
        return
    with ProcessPoolExecutor(max_workers=threads) as pool:
        yield from pool.map(worker, *zip(*ranges))
