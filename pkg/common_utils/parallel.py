"""
Thread pool helpers.

The heavy per-syndrome and per-vertex scans are numpy kernels that release
the GIL, so a plain ThreadPoolExecutor gives real parallelism for them.
CRCLAB_THREADS caps the worker count.
"""

import os
import sys
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, List, Optional, Sequence, TypeVar

T = TypeVar('T')
R = TypeVar('R')

THREADS_ENV_VAR = 'CRCLAB_THREADS'


def get_thread_count(configured: Optional[int] = None) -> int:
    """
    Resolve the worker count.

    Order: CRCLAB_THREADS env var, then the configured value, then os.cpu_count().
    Invalid env values are ignored with a warning on stderr.
    """
    env_value = os.getenv(THREADS_ENV_VAR)
    if env_value:
        try:
            threads = int(env_value)
            if threads >= 1:
                return threads
        except ValueError:
            pass
        print(f"⚠️  Ignoring invalid {THREADS_ENV_VAR}={env_value!r}", file=sys.stderr)
    if configured is not None and configured >= 1:
        return int(configured)
    return os.cpu_count() or 1


def split_range(total: int, parts: int) -> List[range]:
    """Split 0..total-1 into at most `parts` contiguous non-empty ranges."""
    parts = max(1, min(parts, total))
    step, extra = divmod(total, parts)
    ranges = []
    start = 0
    for i in range(parts):
        stop = start + step + (1 if i < extra else 0)
        if stop > start:
            ranges.append(range(start, stop))
        start = stop
    return ranges


def parallel_map(func: Callable[[T], R], items: Sequence[T], threads: Optional[int] = None) -> List[R]:
    """
    Map `func` over `items`, preserving order.

    Runs inline when a single worker is requested or there is only one item.
    """
    threads = get_thread_count(threads)
    if threads <= 1 or len(items) <= 1:
        return [func(item) for item in items]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(func, items))
