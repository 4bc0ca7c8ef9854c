"""Checked arithmetic for counts."""

from typing import Optional

from .exceptions import CountOverflowError

CountValue = int


class CountGuard:
    """Rejects counts that would not fit in a fixed unsigned width.

    With ``bits=None`` counts are Python integers and never wrap, so every
    check passes.
    """

    def __init__(self, bits: Optional[int] = None) -> None:
        """Initialize guard."""
        self.bits = bits
        self.ceiling = None if bits is None else 1 << bits

    def check(self, value: CountValue, what: str = "count") -> CountValue:
        """Return ``value`` unchanged if it fits, raise otherwise."""
        if value < 0:
            raise ValueError(f"{what} is negative: {value}")
        if self.ceiling is not None and value >= self.ceiling:
            raise CountOverflowError(self.bits or 0, what)
        return value

    def add(self, left: CountValue, right: CountValue, what: str = "count") -> CountValue:
        """Checked addition."""
        return self.check(left + right, what)

    def double_minus_one(self, value: CountValue, what: str = "count") -> CountValue:
        """Checked ``2 * value - 1``."""
        return self.check(2 * value - 1, what)
