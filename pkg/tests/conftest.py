"""Pytest configuration and fixtures."""

from collections.abc import Callable

import pytest

from partition_meter.core.config import Settings
from partition_meter.services.counting import CountingService
from partition_meter.services.identity import IdentityService
from partition_meter.services.suffix_metrics import SuffixMetricsService

from .oracles import naive_sac

Enumerator = Callable[[int, int], list[tuple[int, ...]]]


@pytest.fixture
def test_settings() -> Settings:
    """Default settings, ignoring the environment and any .env file."""
    return Settings(_env_file=None, memo_limit=None, count_bits=None)


@pytest.fixture
def counting(test_settings: Settings) -> CountingService:
    """Fresh counting service."""
    return CountingService(test_settings)


@pytest.fixture
def metrics(counting: CountingService) -> SuffixMetricsService:
    """Suffix metrics sharing the counting service."""
    return SuffixMetricsService(counting)


@pytest.fixture
def identity(counting: CountingService) -> IdentityService:
    """Identity service sharing the counting service."""
    return IdentityService(counting)


@pytest.fixture
def brute_force() -> Enumerator:
    """Naive recursive enumerator used as an oracle."""
    return naive_sac
