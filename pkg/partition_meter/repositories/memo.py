"""Memo table repository for the (n, m) recurrences."""

import logging
import threading
from typing import Optional

from ..core.arithmetic import CountValue
from ..core.exceptions import MemoLimitExceededError

logger = logging.getLogger(__name__)


def clamp_m(n: int, m: int) -> int:
    """Collapse the constant tail: every m > n // 2 behaves like n // 2 + 1."""
    return min(m, n // 2 + 1)


def entries_up_to(n: int) -> int:
    """Number of clamped keys with first coordinate in 1..n."""
    return sum(j // 2 + 1 for j in range(1, n + 1))


class MemoTable:
    """Write-once map from clamped (n, m) keys to counts."""

    def __init__(self, name: str, limit: Optional[int] = None) -> None:
        """Initialize an empty table."""
        self.name = name
        self.limit = limit
        self.lock = threading.Lock()
        self._values: dict[tuple[int, int], CountValue] = {}

    def __len__(self) -> int:
        return len(self._values)

    def __contains__(self, key: tuple[int, int]) -> bool:
        n, m = key
        return (n, clamp_m(n, m)) in self._values

    def get(self, n: int, m: int) -> Optional[CountValue]:
        """Get the stored value for (n, m), or None."""
        return self._values.get((n, clamp_m(n, m)))

    def put(self, n: int, m: int, value: CountValue) -> None:
        """Store a final value.

        Storing a different value for a key that is already present is a bug
        in the caller.
        """
        key = (n, clamp_m(n, m))
        existing = self._values.get(key)
        if existing is not None:
            if existing != value:
                raise RuntimeError(
                    f"{self.name}: key {key} already holds {existing}, refusing {value}"
                )
            return
        self._values[key] = value

    def reserve(self, max_n: int) -> None:
        """Fail early if filling rows 1..max_n would break the entry limit."""
        needed = entries_up_to(max_n)
        if self.limit is not None and needed > self.limit:
            raise MemoLimitExceededError(self.limit, needed)
        logger.debug("%s: reserving %d entries for n <= %d", self.name, needed, max_n)
