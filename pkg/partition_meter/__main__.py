"""Allow ``python -m partition_meter``."""

from .cli import cli

cli()
