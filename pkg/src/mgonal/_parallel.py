from __future__ import annotations

import os
from collections.abc import Callable, Iterable, Sequence
from concurrent.futures import ProcessPoolExecutor
from typing import TypeVar

T = TypeVar("T")
R = TypeVar("R")


def default_workers() -> int:
    try:
        n = int(os.environ.get("MGONAL_WORKERS", "1"))
    except ValueError:
        raise ValueError("MGONAL_WORKERS must be an integer") from None
    if n < 1:
        raise ValueError("MGONAL_WORKERS must be >= 1")
    return n


def ordered_map(fn: Callable[[T], R], items: Iterable[T], workers: int | None = None) -> list[R]:
    """Map ``fn`` over ``items``, results in input order whatever the pool size."""
    if workers is None:
        workers = default_workers()
    if workers < 1:
        raise ValueError("workers must be >= 1")
    items = list(items)
    if workers == 1 or len(items) <= 1:
        return [fn(it) for it in items]
    chunk = max(1, len(items) // (4 * workers))
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items, chunksize=chunk))


def stripes(lo: int, hi: int, parts: int) -> list[tuple[int, int]]:
    """Split the inclusive range [lo, hi] into at most ``parts`` contiguous stripes."""
    if hi < lo:
        return []
    parts = max(1, min(parts, hi - lo + 1))
    size, extra = divmod(hi - lo + 1, parts)
    out = []
    start = lo
    for k in range(parts):
        end = start + size + (1 if k < extra else 0) - 1
        out.append((start, end))
        start = end + 1
    return out


def flatten(chunks: Sequence[Sequence[R]]) -> list[R]:
    return [x for c in chunks for x in c]
