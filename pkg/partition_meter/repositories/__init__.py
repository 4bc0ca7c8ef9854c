"""Repositories package for memoized counts."""

from .memo import MemoTable, clamp_m, entries_up_to

__all__ = ["MemoTable", "clamp_m", "entries_up_to"]
