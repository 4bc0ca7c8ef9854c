"""Shared models package."""

from .base import BaseModel
from .enums import DiagramFormat, IdentityName, OutputFormat, SummationDomain

__all__ = ["BaseModel", "DiagramFormat", "IdentityName", "OutputFormat", "SummationDomain"]
