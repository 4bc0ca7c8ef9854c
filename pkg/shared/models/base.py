"""Base model for shared value types."""

from pydantic import BaseModel as PydanticBaseModel, ConfigDict


class BaseModel(PydanticBaseModel):
    """Base model with common configuration.

    Every value type in the package is immutable so it can be handed between
    threads without copying.
    """

    model_config = ConfigDict(frozen=True, from_attributes=True, extra="forbid")
