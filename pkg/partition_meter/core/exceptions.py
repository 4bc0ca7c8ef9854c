"""Domain errors.

Everything derives from ``ValueError`` so callers that only care about bad
input can catch one type; the CLI maps these to exit codes.
"""


class PartitionMeterError(ValueError):
    """Base class for all partition meter errors."""


class CompositionError(PartitionMeterError):
    """A sequence is not an ascending composition."""


class EmptyCompositionError(CompositionError):
    """The part list is empty."""

    def __init__(self) -> None:
        """Initialize error."""
        super().__init__("composition must have at least one part")


class NonPositivePartError(CompositionError):
    """A part is zero or negative."""

    def __init__(self, index: int, value: int) -> None:
        """Initialize error with the offending position."""
        self.index = index
        self.value = value
        super().__init__(f"part at index {index} is not positive: {value}")


class DescentError(CompositionError):
    """Parts are not in non-decreasing order."""

    def __init__(self, index: int, previous: int, value: int) -> None:
        """Initialize error with the position of the descent."""
        self.index = index
        self.previous = previous
        self.value = value
        super().__init__(f"descent at index {index}: {previous} > {value}")


class NoSuccessorError(PartitionMeterError):
    """The singleton composition [n] is the lexicographic maximum."""

    def __init__(self, n: int) -> None:
        """Initialize error."""
        self.n = n
        super().__init__(f"no successor: [{n}] is the lexicographic maximum")


class CountOverflowError(PartitionMeterError):
    """A count exceeded the configured integer width."""

    def __init__(self, bits: int, what: str) -> None:
        """Initialize error."""
        self.bits = bits
        super().__init__(f"{what} does not fit in {bits} bits")


class MemoLimitExceededError(PartitionMeterError):
    """A memo table would grow beyond the configured entry limit."""

    def __init__(self, limit: int, needed: int) -> None:
        """Initialize error."""
        self.limit = limit
        self.needed = needed
        super().__init__(f"memo table needs {needed} entries, limit is {limit}")
