"""Order-preserving process pool sized by ``OPNLAB_THREADS``."""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable, Iterator, TypeVar

T = TypeVar("T")
R = TypeVar("R")


def worker_count(requested: int | None = None) -> int:
    available = os.cpu_count() or 1
    env = os.environ.get("OPNLAB_THREADS")
    cap = int(env) if env else available
    n = cap if requested is None else min(requested, cap)
    return max(1, n)


def ordered_map(fn: Callable[[T], R], items: Iterable[T], workers: int = 1) -> Iterator[R]:
    """``map`` that fans out over processes but yields results in input order."""
    if workers <= 1:
        yield from map(fn, items)
        return
    with ProcessPoolExecutor(max_workers=workers) as pool:
        yield from pool.map(fn, items)
