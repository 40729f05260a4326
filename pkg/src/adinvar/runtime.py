"""Optional thread fan-out for independent sweeps.

ADINVAR_THREADS caps the pool; the default of 1 keeps everything serial.
Results always come back in input order, so reports stay deterministic.
"""

import os
from concurrent.futures import ThreadPoolExecutor


def thread_count():
    raw = os.environ.get("ADINVAR_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def pmap(fn, items):
    items = list(items)
    workers = min(thread_count(), len(items) or 1)
    if workers <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))
