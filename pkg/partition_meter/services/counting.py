"""Counting service for ascending compositions."""

import logging
from typing import Optional

from ..core.arithmetic import CountGuard, CountValue
from ..core.config import Settings, get_settings
from ..repositories.memo import MemoTable
from ..schemas.composition import SacParams
from ..schemas.report import VerificationReport, VerificationRow
from .sweeps import build_report, singles

logger = logging.getLogger(__name__)


class CountingService:
    """Exact nac(n, m) and sfl(n, m) from their recurrences.

    Both tables are filled together, bottom-up, one row of n at a time:

        nac(n, m) = nac(n, m + 1) + nac(n - m, m)
        sfl(n, m) = sfl(n, m + 1) + sfl(n - m, m) + 1

    starting from the value 1 at m = n // 2 + 1.
    A fixed count width is enforced on nac values as rows are filled and on
    sfl values as they are read.
    """

    def __init__(self, settings: Optional[Settings] = None) -> None:
        """Initialize counting service."""
        self.settings = settings or get_settings()
        self.guard = CountGuard(self.settings.count_bits)
        self.nac_table = MemoTable("nac", self.settings.memo_limit)
        self.sfl_table = MemoTable("sfl", self.settings.memo_limit)
        self._filled_to = 0

    @property
    def filled_to(self) -> int:
        """Largest n whose row is complete."""
        return self._filled_to

    def fill(self, max_n: int) -> None:
        """Complete every row up to ``max_n``."""
        with self.nac_table.lock:
            if max_n <= self._filled_to:
                return
            self.nac_table.reserve(max_n)
            self.sfl_table.reserve(max_n)
            logger.debug("filling nac/sfl rows %d..%d", self._filled_to + 1, max_n)
            for n in range(self._filled_to + 1, max_n + 1):
                self._fill_row(n)
                self._filled_to = n

    def _fill_row(self, n: int) -> None:
        half = n // 2
        nac_value: CountValue = 1
        sfl_value: CountValue = 1
        self.nac_table.put(n, half + 1, nac_value)
        self.sfl_table.put(n, half + 1, sfl_value)
        for x in range(half, 0, -1):
            below_nac = self.nac_table.get(n - x, x)
            below_sfl = self.sfl_table.get(n - x, x)
            assert below_nac is not None and below_sfl is not None
            nac_value = self.guard.add(nac_value, below_nac, f"nac({n}, {x})")
            sfl_value = sfl_value + below_sfl + 1
            self.nac_table.put(n, x, nac_value)
            self.sfl_table.put(n, x, sfl_value)

    def nac(self, params: SacParams) -> CountValue:
        """Number of ascending compositions of n with smallest part at least m."""
        self.fill(params.n)
        value = self.nac_table.get(params.n, params.m)
        assert value is not None
        return value

    def partition_count(self, n: int) -> CountValue:
        """p(n) = nac(n, 1)."""
        return self.nac(SacParams(n=n, m=1))

    def sfl(self, params: SacParams) -> CountValue:
        """Suffix length of sac(n, m) from its recurrence."""
        self.fill(params.n)
        value = self.sfl_table.get(params.n, params.m)
        assert value is not None
        return self.guard.check(value, f"sfl({params.n}, {params.m})")

    def pentagonal_oracle(self, n: int) -> CountValue:
        """p(n) from the pentagonal number recurrence."""
        return pentagonal_table(n, self.guard)[n]

    def verify_oracle(self, max_n: int, jobs: int = 1) -> VerificationReport:
        """nac(n, 1) against the pentagonal recurrence for every n <= max_n."""
        self.fill(max_n)
        oracle = pentagonal_table(max_n, self.guard)

        def row(params: SacParams) -> VerificationRow:
            recurrence = self.nac(params)
            return VerificationRow(
                n=params.n,
                m=params.m,
                lhs=recurrence,
                rhs=oracle[params.n],
                passed=recurrence == oracle[params.n],
            )

        return build_report("oracle", list(singles(max_n)), row, jobs)


def pentagonal_table(max_n: int, guard: Optional[CountGuard] = None) -> list[CountValue]:
    """p(0..max_n) by Euler's recurrence over generalized pentagonal numbers.

    Shares nothing with the memo tables above; used as an independent check.
    """
    if max_n < 0:
        raise ValueError(f"n must be nonnegative: {max_n}")
    guard = guard or CountGuard()
    table: list[CountValue] = [1] + [0] * max_n
    for i in range(1, max_n + 1):
        total = 0
        j = 1
        while True:
            first = j * (3 * j - 1) // 2
            if first > i:
                break
            second = first + j
            term = table[i - first]
            if second <= i:
                term += table[i - second]
            total += term if j % 2 else -term
            j += 1
        table[i] = guard.check(total, f"p({i})")
    return table
