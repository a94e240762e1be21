# -*- coding: utf-8 -*-
"""Parallel Map.

Sweep points are independent; results are returned in input order so
that outputs do not depend on the thread count.

"""

# Standard Library Imports
import concurrent.futures
import logging
from typing import Callable
from typing import Iterable
from typing import List
from typing import Optional
from typing import TypeVar

# Local Imports
from ..progress import AbstractProgressBar
from ..progress import NullProgressBar

__all__ = ["parallel_map"]


# Initialize logger.
log = logging.getLogger("gyroqfi")

T = TypeVar("T")
R = TypeVar("R")


def parallel_map(
    function: Callable[[T], R],
    items: Iterable[T],
    threads: int = 1,
    progress_bar: Optional[AbstractProgressBar] = None,
) -> List[R]:
    """Apply `function` to every item.

    Args:
        function: Function of one item.
        items: Items.
        threads (optional): Worker threads; ``1`` runs in the calling
            thread. Default ``1``.
        progress_bar (optional): Progress bar advanced per item. Default
            silent.

    Returns:
        Results in the order of `items`.

    Raises:
        ValueError: when `threads` is not positive.

    """
    if not isinstance(threads, int) or threads < 1:
        raise ValueError(f"threads must be a positive integer, got {threads}")

    items = list(items)
    progress_bar = progress_bar or NullProgressBar(len(items))
    if threads == 1:
        results = []
        for item in items:
            results.append(function(item))
            progress_bar.update()
        progress_bar.close()
        return results

    log.debug("mapping %d items over %d threads", len(items), threads)
    results: List[Optional[R]] = [None] * len(items)
    with concurrent.futures.ThreadPoolExecutor(max_workers=threads) as pool:
        futures = {
            pool.submit(function, item): index
            for index, item in enumerate(items)
        }
        for future in concurrent.futures.as_completed(futures):
            results[futures[future]] = future.result()
            progress_bar.update()

    progress_bar.close()
    return results
