"""Hypothesis strategies."""

from hypothesis import strategies as st

from partition_meter.schemas.composition import SacParams


@st.composite
def sac_params(draw: st.DrawFn, max_n: int = 25) -> SacParams:
    """A valid (n, m) pair."""
    n = draw(st.integers(min_value=1, max_value=max_n))
    m = draw(st.integers(min_value=1, max_value=n))
    return SacParams(n=n, m=m)
