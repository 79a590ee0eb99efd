"""eulerian util: worker pool registry, chunking, logging"""

import atexit
import logging
import multiprocessing
from multiprocessing.pool import Pool
import time
from typing import Any, Callable, Iterable

logger = logging.getLogger(__name__)


class WorkerPool:
    """process pool shared by every enumeration with the same worker count"""

    def __init__(self, workers: int):
        self.workers = workers
        self.pool: Pool | None = None
        if workers > 1:
            self.pool = multiprocessing.Pool(processes=workers)

        logger.info("%s %s workers=%d", self.__class__.__name__, "init", workers)

    def __enter__(self):
        return self

    def __exit__(self, exc_type, exc_value, traceback):
        self.close()

    def close(self):
        """terminate the processes"""
        if self.pool:
            self.pool.close()
            self.pool.join()
            self.pool = None

            logger.info("%s %s workers=%d", self.__class__.__name__, "close", self.workers)

    def starmap(self, fn: Callable[..., Any], tasks: Iterable[tuple]) -> list[Any]:
        """fn(*task) for every task, results in task order"""
        tasks = list(tasks)
        if self.pool is None or len(tasks) < 2:
            return [fn(*task) for task in tasks]
        return self.pool.starmap(fn, tasks)


worker_pools: dict[int, WorkerPool] = {}


def get_worker_pool(workers: int) -> WorkerPool:
    """return the pool for this worker count, creating it once"""

    # pylint:disable=global-variable-not-assigned
    global worker_pools

    if workers < 1:
        raise ValueError(f"workers must be >= 1, got {workers}")
    if workers not in worker_pools:
        worker_pools[workers] = WorkerPool(workers)
    return worker_pools[workers]


@atexit.register
def close_all_pools():
    """call when python exits"""

    # pylint:disable=global-statement
    global worker_pools

    for v in worker_pools.values():
        v.close()
    worker_pools = {}


def chunk_ranges(total: int, parts: int) -> list[tuple[int, int]]:
    """
    split [0, total) into at most `parts` contiguous ranges, in order.

    ex: chunk_ranges(10, 3) -> [(0, 4), (4, 7), (7, 10)]
    """
    parts = max(1, min(parts, total))
    size, extra = divmod(total, parts)
    ranges = []
    lo = 0
    for k in range(parts):
        hi = lo + size + (1 if k < extra else 0)
        ranges.append((lo, hi))
        lo = hi
    return [r for r in ranges if r[0] < r[1]]


def elapsed_ms(start: float) -> int:
    """milliseconds since start (time.perf_counter)"""
    return int(round((time.perf_counter() - start) * 1000))


def configure_logging(level: str = "WARNING"):
    """basicConfig on stderr with the project format"""
    logging.basicConfig(
        level=getattr(logging, level.upper(), logging.WARNING),
        format="%(asctime)s [%(levelname)7s] %(name)s %(message)s",
    )
