"""Ascending composition generation in lexicographic order."""

from collections.abc import Callable, Iterator, Sequence

from ..core.exceptions import (
    DescentError,
    EmptyCompositionError,
    NonPositivePartError,
    NoSuccessorError,
)
from ..schemas.composition import AscendingComposition, SacParams, SuccessorPlan

# (buffer, length, writes): buffer[:length] is the current composition and
# ``writes`` is the number of parts assigned to reach it.
Visitor = Callable[[list[int], int, int], None]


def new_composition(parts: Sequence[int]) -> AscendingComposition:
    """Validate ``parts`` and wrap them as an ascending composition."""
    if not parts:
        raise EmptyCompositionError()
    previous = 0
    for index, part in enumerate(parts):
        if part < 1:
            raise NonPositivePartError(index, part)
        if part < previous:
            raise DescentError(index, previous, part)
        previous = part
    return AscendingComposition.trusted(parts)


def lexmin_parts(n: int, m: int) -> list[int]:
    """The least element of sac(n, m): a maximal run of m, then the rest."""
    mu = n // m - 1
    return [m] * mu + [n - mu * m]


def lexmin(params: SacParams) -> AscendingComposition:
    """Lexicographically least element of sac(n, m)."""
    return AscendingComposition.trusted(lexmin_parts(params.n, params.m))


def large_parts_term(c: AscendingComposition) -> int:
    """floor((a_{k-1} + a_k) / (a_{k-1} + 1)) with a_0 = 0."""
    return transition_term(c.second_largest, c.largest)


def transition_term(second_largest: int, largest: int) -> int:
    """Large-parts term from the two largest parts."""
    return (second_largest + largest) // (second_largest + 1)


def rewrite_tail(second_largest: int, largest: int) -> tuple[int, int, int]:
    """(fill_part, fill_count, remainder) that replace the last two parts."""
    fill_part = second_largest + 1
    fill_count = (second_largest + largest) // fill_part - 1
    return fill_part, fill_count, second_largest + largest - fill_count * fill_part


def successor_plan(c: AscendingComposition) -> SuccessorPlan:
    """Describe how the last two parts of ``c`` are rewritten."""
    if c.is_singleton():
        raise NoSuccessorError(c.n)
    fill_part, fill_count, remainder = rewrite_tail(c.second_largest, c.largest)
    return SuccessorPlan(
        prefix_len=c.k - 2,
        fill_part=fill_part,
        fill_count=fill_count,
        remainder=remainder,
        transition_sum=c.second_largest + c.largest,
    )


def apply_successor(c: AscendingComposition) -> AscendingComposition:
    """Lexicographic successor of ``c``."""
    plan = successor_plan(c)
    parts = (
        c.parts[: plan.prefix_len]
        + (plan.fill_part,) * plan.fill_count
        + (plan.remainder,)
    )
    return AscendingComposition.trusted(parts)


def walk(params: SacParams) -> Iterator[tuple[list[int], int, int]]:
    """Generate sac(n, m) in place.

    Yields the same buffer every time, so callers must copy what they keep.
    The third item is the number of parts written for that step.
    """
    # No composition in sac(n, m) is longer than the least one.
    buffer = lexmin_parts(params.n, params.m)
    k = len(buffer)
    yield buffer, k, k

    while k > 1:
        j = k - 2
        fill_part, fill_count, remainder = rewrite_tail(buffer[j], buffer[k - 1])
        end = j + fill_count
        while j < end:
            buffer[j] = fill_part
            j += 1
        buffer[j] = remainder
        k = j + 1
        yield buffer, k, fill_count + 1


def visit(params: SacParams, visitor: Visitor) -> int:
    """Call ``visitor`` on every element of sac(n, m); return how many."""
    visited = 0
    for buffer, k, writes in walk(params):
        visitor(buffer, k, writes)
        visited += 1
    return visited


def iterate(params: SacParams) -> Iterator[AscendingComposition]:
    """Every element of sac(n, m) in increasing lexicographic order."""
    for buffer, k, _ in walk(params):
        yield AscendingComposition.trusted(buffer[:k])


def common_prefix_length(left: Sequence[int], right: Sequence[int]) -> int:
    """Length of the longest common prefix."""
    length = 0
    for a, b in zip(left, right, strict=False):
        if a != b:
            break
        length += 1
    return length
