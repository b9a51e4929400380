import os
from concurrent.futures import ThreadPoolExecutor


def worker_count() -> int:
    """Thread cap from GAPWAVE_THREADS; unset or 0 means one per CPU."""
    raw = os.environ.get("GAPWAVE_THREADS", "0").strip() or "0"
    try:
        n = int(raw)
    except ValueError:
        raise ValueError(f"GAPWAVE_THREADS must be an integer, got {raw!r}") from None
    if n < 0:
        raise ValueError("GAPWAVE_THREADS must be >= 0")
    return n or (os.cpu_count() or 1)


def pmap(func, items):
    """Ordered map; entries are independent so results match a serial loop exactly."""
    items = list(items)
    n = min(worker_count(), len(items))
    if n <= 1:
        return [func(item) for item in items]
    with ThreadPoolExecutor(max_workers=n) as pool:
        return list(pool.map(func, items))
