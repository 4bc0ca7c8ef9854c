"""Pydantic schemas package."""

from .composition import AscendingComposition, SacParams, SuccessorPlan
from .metrics import AmortizedCost, WriteTrace
from .report import VerificationReport, VerificationRow

__all__ = [
    "AscendingComposition", "SacParams", "SuccessorPlan",
    "AmortizedCost", "WriteTrace",
    "VerificationReport", "VerificationRow",
]
