"""Services package for generation, counting and verification."""

from .boxes import box_layout, render_ascii, render_svg
from .compositions import (
    apply_successor,
    iterate,
    large_parts_term,
    lexmin,
    new_composition,
    successor_plan,
    visit,
    walk,
)
from .counting import CountingService, pentagonal_table
from .identity import IdentityService, floor_div
from .suffix_metrics import SuffixMetricsService

__all__ = [
    "box_layout", "render_ascii", "render_svg",
    "new_composition", "lexmin", "successor_plan", "apply_successor",
    "iterate", "visit", "walk", "large_parts_term",
    "CountingService", "pentagonal_table",
    "IdentityService", "floor_div",
    "SuffixMetricsService",
]
