"""Configuration settings for the partition meter."""

from functools import lru_cache
from typing import Optional

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Application settings."""

    model_config = SettingsConfigDict(
        env_prefix="PARTITION_METER_",
        env_file=".env",
        case_sensitive=False,
        extra="ignore",
    )

    # Counting
    memo_limit: Optional[int] = Field(default=None, ge=1)
    count_bits: Optional[int] = Field(default=None, ge=8)

    # Metering
    trace_cap: int = Field(default=1_000_000, ge=0)

    # Rendering
    boxes_max_n: int = Field(default=30, ge=1)

    # Sweeps
    jobs: int = Field(default=1, ge=1)

    # Logging
    log_level: str = "WARNING"


@lru_cache
def get_settings() -> Settings:
    """Settings read from the environment on first use."""
    return Settings()
