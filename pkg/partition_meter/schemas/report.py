"""Verification report schemas."""

from typing import Optional

from pydantic import Field, computed_field

from shared.models.base import BaseModel


class VerificationRow(BaseModel):
    """One checked (n, m) pair."""

    n: int
    m: int
    lhs: int
    rhs: int
    passed: bool
    extras: dict[str, int] = Field(default_factory=dict)


class VerificationReport(BaseModel):
    """Result of an identity sweep.

    Both sides are recorded for every row, including failing ones.
    """

    name: str
    rows: tuple[VerificationRow, ...] = ()
    note: Optional[str] = None

    @computed_field  # type: ignore[prop-decorator]
    @property
    def all_pass(self) -> bool:
        """True when every row passes."""
        return all(row.passed for row in self.rows)

    @property
    def failures(self) -> list[VerificationRow]:
        """Rows that did not pass."""
        return [row for row in self.rows if not row.passed]

    def summary(self) -> str:
        """One-line summary."""
        passed = sum(1 for row in self.rows if row.passed)
        verdict = "PASS" if self.all_pass else "FAIL"
        return f"{self.name}: {passed}/{len(self.rows)} rows pass {verdict}"
