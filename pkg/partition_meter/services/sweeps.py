"""Deterministic sweep runner."""

import logging
from collections.abc import Callable, Iterator, Sequence
from concurrent.futures import ThreadPoolExecutor
from typing import Optional, TypeVar

from ..schemas.composition import SacParams
from ..schemas.report import VerificationReport, VerificationRow

logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")


def pairs(max_n: int) -> Iterator[SacParams]:
    """Every (n, m) with 1 <= m <= n <= max_n, ordered by n then m."""
    for n in range(1, max_n + 1):
        for m in range(1, n + 1):
            yield SacParams(n=n, m=m)


def singles(max_n: int) -> Iterator[SacParams]:
    """(n, 1) for 1 <= n <= max_n."""
    for n in range(1, max_n + 1):
        yield SacParams(n=n, m=1)


def run_sweep(tasks: Sequence[T], worker: Callable[[T], R], jobs: int = 1) -> list[R]:
    """Apply ``worker`` to every task; results keep the order of ``tasks``."""
    if jobs <= 1 or len(tasks) <= 1:
        return [worker(task) for task in tasks]
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(worker, tasks))


def build_report(
    name: str,
    tasks: Sequence[SacParams],
    worker: Callable[[SacParams], VerificationRow],
    jobs: int = 1,
    note: Optional[str] = None,
) -> VerificationReport:
    """Run a sweep and collect its rows into a report."""
    logger.info("%s: checking %d pairs with %d job(s)", name, len(tasks), jobs)
    report = VerificationReport(name=name, rows=tuple(run_sweep(tasks, worker, jobs)), note=note)
    if report.all_pass:
        logger.info("%s: all %d rows pass", name, len(report.rows))
    else:
        for row in report.failures:
            logger.warning("%s: n=%d m=%d lhs=%d rhs=%d", name, row.n, row.m, row.lhs, row.rhs)
    return report
