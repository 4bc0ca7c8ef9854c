"""Suffix length measured three ways."""

from fractions import Fraction
from typing import Optional

from ..core.config import Settings
from ..schemas.composition import SacParams
from ..schemas.metrics import AmortizedCost, WriteTrace
from ..schemas.report import VerificationReport, VerificationRow
from .compositions import common_prefix_length, transition_term, walk
from .counting import CountingService
from .sweeps import build_report, pairs, singles


class SuffixMetricsService:
    """Suffix length of sac(n, m) by recurrence, by measurement and by writes."""

    def __init__(
        self,
        counting: Optional[CountingService] = None,
        settings: Optional[Settings] = None,
    ) -> None:
        """Initialize suffix metrics service."""
        self.counting = counting or CountingService(settings)
        self.settings = self.counting.settings
        self.guard = self.counting.guard

    def sfl_recurrence(self, params: SacParams) -> int:
        """sfl(n, m) from its recurrence."""
        return self.counting.sfl(params)

    def sfl_measured(self, params: SacParams) -> WriteTrace:
        """Count the differing suffixes between adjacent compositions.

        Each composition is compared with its predecessor; the parts after
        their common prefix are the ones that had to be written.
        """
        cap = self.settings.trace_cap
        transitions: list[int] = []
        previous: tuple[int, ...] = ()
        initial = 0
        total = 0
        visited = 0
        for buffer, k, _ in walk(params):
            current = tuple(buffer[:k])
            if visited == 0:
                initial = k
                total = k
            else:
                writes = k - common_prefix_length(previous, current)
                total += writes
                if len(transitions) < cap:
                    transitions.append(writes)
            previous = current
            visited += 1
        return WriteTrace(
            n=params.n,
            m=params.m,
            initial_writes=initial,
            transition_writes=tuple(transitions),
            compositions_visited=self.guard.check(visited, "compositions visited"),
            total=self.guard.check(total, f"measured sfl({params.n}, {params.m})"),
            truncated=len(transitions) < visited - 1,
        )

    def sfl_via_writes(self, params: SacParams) -> int:
        """floor(n/m) plus the large-parts term of every non-final composition."""
        total = params.n // params.m
        for buffer, k, _ in walk(params):
            if k > 1:
                total += transition_term(buffer[k - 2], buffer[k - 1])
        return self.guard.check(total, f"sfl via writes({params.n}, {params.m})")

    def amortized_cost(self, params: SacParams) -> AmortizedCost:
        """Exact writes per composition next to 2 - 1/nac(n, m)."""
        trace = self.sfl_measured(params)
        return AmortizedCost(
            writes=trace.total,
            compositions=trace.compositions_visited,
            ratio=Fraction(trace.total, trace.compositions_visited),
            closed_form=2 - Fraction(1, self.counting.nac(params)),
        )

    def _theorem1_row(self, params: SacParams) -> VerificationRow:
        nac = self.counting.nac(params)
        expected = self.guard.double_minus_one(nac)
        recurrence = self.sfl_recurrence(params)
        measured = self.sfl_measured(params).total
        via_writes = self.sfl_via_writes(params)
        return VerificationRow(
            n=params.n,
            m=params.m,
            lhs=recurrence,
            rhs=expected,
            passed=recurrence == measured == via_writes == expected,
            extras={"nac": nac, "measured": measured, "via_writes": via_writes},
        )

    def check_theorem1(self, max_n: int, jobs: int = 1) -> VerificationReport:
        """sfl by recurrence, measurement and writes all equal 2 nac(n, m) - 1."""
        self.counting.fill(max_n)
        return build_report("theorem1", list(pairs(max_n)), self._theorem1_row, jobs)

    def _transitions_row(self, params: SacParams) -> VerificationRow:
        measured_total = 0
        predicted_total = 0
        transitions = 0
        mismatches = 0
        previous: tuple[int, ...] = ()
        for buffer, k, _ in walk(params):
            current = tuple(buffer[:k])
            if previous:
                measured = k - common_prefix_length(previous, current)
                second = previous[-2] if len(previous) > 1 else 0
                predicted = transition_term(second, previous[-1])
                measured_total += measured
                predicted_total += predicted
                transitions += 1
                if measured != predicted:
                    mismatches += 1
            previous = current
        return VerificationRow(
            n=params.n,
            m=params.m,
            lhs=measured_total,
            rhs=predicted_total,
            passed=mismatches == 0,
            extras={"transitions": transitions, "mismatches": mismatches},
        )

    def verify_transitions(self, max_n: int, jobs: int = 1) -> VerificationReport:
        """Every transition writes exactly the large-parts term of its predecessor."""
        return build_report("transitions", list(pairs(max_n)), self._transitions_row, jobs)

    def _amortized_row(self, params: SacParams) -> VerificationRow:
        cost = self.amortized_cost(params)
        return VerificationRow(
            n=params.n,
            m=params.m,
            lhs=cost.writes,
            rhs=self.guard.double_minus_one(cost.compositions),
            passed=cost.matches_closed_form,
            extras={"compositions": cost.compositions},
        )

    def verify_amortized(self, max_n: int, jobs: int = 1) -> VerificationReport:
        """Writes per partition of n equal 2 - 1/p(n) exactly."""
        self.counting.fill(max_n)
        return build_report("amortized", list(singles(max_n)), self._amortized_row, jobs)
