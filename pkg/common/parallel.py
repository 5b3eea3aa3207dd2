"""
Deterministic parallel map
"""
import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, List, TypeVar

T = TypeVar('T')
R = TypeVar('R')

logger = logging.getLogger(__name__)


def ordered_map(func: Callable[[T], R], items: Iterable[T], threads: int = 1) -> List[R]:
    """
    Apply func to every item, optionally on a thread pool

    Results are always returned in input order, so reductions over the
    result list do not depend on the thread count.

    Args:
        func: Function to apply
        items: Input items
        threads: Worker count (1 runs inline)

    Returns:
        List of results in input order
    """
    items = list(items)
    if threads <= 1 or len(items) <= 1:
        return [func(item) for item in items]

    logger.debug(f"Mapping {len(items)} items on {threads} threads")
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(func, items))
