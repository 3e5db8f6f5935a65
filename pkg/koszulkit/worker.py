import logging
import multiprocessing
from typing import Any, Callable, List, Optional, Sequence, TypeVar

logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")

# per-process copy of the object every task reads
_shared: Any = None


def _install(shared: Any) -> None:
    global _shared
    _shared = shared


def _call(job: Any) -> Any:
    func, task = job
    return func(_shared, task)


def parallel_map(
    func: Callable[[Any, T], R],
    tasks: Sequence[T],
    jobs: int = 1,
    shared: Optional[Any] = None,
) -> List[R]:
    """
    Evaluate func(shared, task) for every task, in task order.

    With jobs > 1 the tasks run on a process pool; shared is shipped once
    per worker through the pool initializer.
    """
    if jobs <= 1 or len(tasks) <= 1:
        return [func(shared, task) for task in tasks]
    processes = min(jobs, len(tasks))
    logger.info(f"Running {len(tasks)} tasks on {processes} worker processes")
    try:
        with multiprocessing.Pool(processes, initializer=_install, initargs=(shared,)) as pool:
            return pool.map(_call, [(func, task) for task in tasks])
    except Exception as e:
        logger.error(f"Worker pool failed: {e}")
        raise
