"""Small shared helpers."""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, Sequence, TypeVar

T = TypeVar("T")
R = TypeVar("R")

#: Environment variable consulted for the default worker count.
THREADS_ENV = "CUBESTABLE_THREADS"


def default_threads() -> int:
    raw = os.environ.get(THREADS_ENV, "")
    try:
        value = int(raw)
    except ValueError:
        return 1
    return max(1, value)


def parallel_map(fn: Callable[[T], R], items: Sequence[T], threads: int) -> list[R]:
    """map(fn, items) with results in input order.

    With threads <= 1 this is a plain loop; otherwise a thread pool is used.
    Results are collected in order either way, so callers stay deterministic
    whatever the worker count.
    """
    if threads <= 1 or len(items) <= 1:
        return [fn(item) for item in items]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, items))


def chunk_ranges(total: int, pieces: int) -> list[tuple[int, int]]:
    """Split range(total) into at most `pieces` contiguous (start, stop) runs."""
    pieces = max(1, min(pieces, total)) if total else 1
    step = -(-total // pieces)
    return [(lo, min(lo + step, total)) for lo in range(0, total, step)] or [(0, 0)]


def indices_from_mask(mask: int) -> list[int]:
    """1-based variable indices present in a bit mask, ascending."""
    return [j + 1 for j in range(mask.bit_length()) if (mask >> j) & 1]


def mask_from_indices(indices: Iterable[int]) -> int:
    mask = 0
    for i in indices:
        mask |= 1 << (i - 1)
    return mask
