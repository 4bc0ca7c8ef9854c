"""partition-meter: instrumented generation of ascending compositions."""

from .schemas import AscendingComposition, SacParams, SuccessorPlan, VerificationReport
from .services import (
    CountingService,
    IdentityService,
    SuffixMetricsService,
    apply_successor,
    iterate,
    large_parts_term,
    lexmin,
    new_composition,
    successor_plan,
)

__version__ = "0.1.0"

__all__ = [
    "AscendingComposition", "SacParams", "SuccessorPlan", "VerificationReport",
    "CountingService", "IdentityService", "SuffixMetricsService",
    "apply_successor", "iterate", "large_parts_term", "lexmin",
    "new_composition", "successor_plan",
]
