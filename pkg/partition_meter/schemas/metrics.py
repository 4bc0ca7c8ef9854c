"""Metering schemas."""

from fractions import Fraction

from pydantic import Field, computed_field

from shared.models.base import BaseModel


class WriteTrace(BaseModel):
    """Write operations spent generating one set sac(n, m).

    ``transition_writes`` keeps at most ``trace_cap`` entries; ``total`` is
    always exact.
    """

    n: int = Field(ge=1)
    m: int = Field(ge=1)
    initial_writes: int = Field(ge=0)
    transition_writes: tuple[int, ...] = ()
    compositions_visited: int = Field(ge=0)
    total: int = Field(ge=0)
    truncated: bool = False


class AmortizedCost(BaseModel):
    """Writes per generated composition."""

    writes: int
    compositions: int
    ratio: Fraction
    closed_form: Fraction

    @computed_field  # type: ignore[prop-decorator]
    @property
    def matches_closed_form(self) -> bool:
        """Whether the ratio equals 2 - 1/nac."""
        return self.ratio == self.closed_form

    @property
    def decimal(self) -> float:
        """Float rendering of the ratio."""
        return float(self.ratio)
