"""Composition schemas."""

from collections.abc import Sequence

from pydantic import Field, computed_field, model_validator
from pydantic_core import PydanticCustomError

from shared.models.base import BaseModel


class SacParams(BaseModel):
    """The pair (n, m) naming the set sac(n, m)."""

    n: int = Field(ge=1)
    m: int = Field(default=1, ge=1)

    @model_validator(mode="after")
    def check_m_within_n(self) -> "SacParams":
        """Reject m larger than n."""
        if self.m > self.n:
            raise PydanticCustomError("sac_params", "m must satisfy 1 ≤ m ≤ n")
        return self


class AscendingComposition(BaseModel):
    """Non-decreasing positive parts summing to ``n``.

    The implicit a_0 = 0 is not stored; ``second_largest`` reports it for
    singletons.
    """

    parts: tuple[int, ...]
    n: int

    @model_validator(mode="after")
    def check_invariants(self) -> "AscendingComposition":
        """Parts are positive, non-decreasing and sum to n."""
        if not self.parts:
            raise PydanticCustomError("empty", "composition must have at least one part")
        previous = 0
        for index, part in enumerate(self.parts):
            if part < 1:
                raise PydanticCustomError(
                    "non_positive", "part at index {index} is not positive", {"index": index}
                )
            if part < previous:
                raise PydanticCustomError(
                    "descent", "descent at index {index}", {"index": index}
                )
            previous = part
        if sum(self.parts) != self.n:
            raise PydanticCustomError("sum", "parts do not sum to n")
        return self

    @classmethod
    def trusted(cls, parts: Sequence[int]) -> "AscendingComposition":
        """Build from parts already known to be valid, skipping validation."""
        snapshot = tuple(parts)
        return cls.model_construct(parts=snapshot, n=sum(snapshot))

    @property
    def k(self) -> int:
        """Number of parts."""
        return len(self.parts)

    @property
    def largest(self) -> int:
        """a_k."""
        return self.parts[-1]

    @property
    def second_largest(self) -> int:
        """a_{k-1}, which is 0 for a singleton."""
        return self.parts[-2] if len(self.parts) > 1 else 0

    def is_singleton(self) -> bool:
        """True for [n], the lexicographic maximum."""
        return len(self.parts) == 1

    def __lt__(self, other: "AscendingComposition") -> bool:
        return self.parts < other.parts

    def __str__(self) -> str:
        return "+".join(str(part) for part in self.parts)


class SuccessorPlan(BaseModel):
    """How one successor step rewrites the last two parts.

    The retained prefix is followed by ``fill_count`` copies of ``fill_part``
    and then ``remainder``.
    """

    prefix_len: int = Field(ge=0)
    fill_part: int = Field(ge=1)
    fill_count: int = Field(ge=0)
    remainder: int = Field(ge=1)
    transition_sum: int = Field(ge=1)

    @model_validator(mode="after")
    def check_consistency(self) -> "SuccessorPlan":
        """Fill and remainder add back up to the transition sum."""
        if self.remainder < self.fill_part:
            raise PydanticCustomError("remainder", "remainder is smaller than fill part")
        if self.fill_count * self.fill_part + self.remainder != self.transition_sum:
            raise PydanticCustomError("sum", "fill and remainder do not add up")
        return self

    @computed_field  # type: ignore[prop-decorator]
    @property
    def writes(self) -> int:
        """Parts written by this transition."""
        return self.fill_count + 1
