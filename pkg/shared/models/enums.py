"""Enums for the partition meter."""

from enum import Enum


class OutputFormat(str, Enum):
    """Output formats for data commands."""

    LINES = "lines"
    JSON = "json"
    CSV = "csv"


class DiagramFormat(str, Enum):
    """Output formats for the adjacency-box diagram."""

    ASCII = "ascii"
    SVG = "svg"


class IdentityName(str, Enum):
    """Verification sweeps exposed by the CLI."""

    EQ1 = "eq1"
    THEOREM1 = "theorem1"
    EQ6 = "eq6"
    EQ6_LITERAL = "eq6-literal"
    TRANSITIONS = "transitions"
    ORACLE = "oracle"
    AMORTIZED = "amortized"


class SummationDomain(str, Enum):
    """Which set the large-parts sum of the general-m identity ranges over."""

    RESTRICTED = "sac(n,m)"
    LITERAL = "sac(n)"
