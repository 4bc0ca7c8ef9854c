"""Core package: configuration, errors, arithmetic."""

from .arithmetic import CountGuard, CountValue
from .config import Settings, get_settings
from .exceptions import (
    CompositionError,
    CountOverflowError,
    DescentError,
    EmptyCompositionError,
    MemoLimitExceededError,
    NonPositivePartError,
    NoSuccessorError,
    PartitionMeterError,
)

__all__ = [
    "CountGuard", "CountValue", "Settings", "get_settings",
    "PartitionMeterError", "CompositionError", "EmptyCompositionError",
    "NonPositivePartError", "DescentError", "NoSuccessorError",
    "CountOverflowError", "MemoLimitExceededError",
]
