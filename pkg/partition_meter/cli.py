"""
Command-line interface for partition-meter.

Usage:
    partition-meter enumerate --n 5 --m 2      # list sac(5, 2)
    partition-meter count --n 10 --oracle      # p(10), checked against the oracle
    partition-meter verify eq1 --max-n 60      # large-parts identity sweep
    partition-meter boxes --n 5                # adjacency-box diagram
    partition-meter meter --n 10               # writes per composition
"""

from __future__ import annotations

import csv
import io
import sys
from collections.abc import Iterable, Sequence
from typing import NoReturn, Optional

import click
from pydantic import TypeAdapter, ValidationError

from shared.models.enums import DiagramFormat, IdentityName, OutputFormat, SummationDomain

from .core.config import Settings
from .core.exceptions import PartitionMeterError
from .core.logging import configure_logging
from .schemas.composition import SacParams
from .schemas.report import VerificationReport
from .services.boxes import box_layout, render_ascii, render_svg
from .services.compositions import iterate
from .services.counting import CountingService
from .services.identity import IdentityService
from .services.suffix_metrics import SuffixMetricsService

__all__ = [
    "cli",
]

EXIT_FAILURE = 1

_PARTS = TypeAdapter(list[list[int]])


def _params(n: int, m: int) -> SacParams:
    """Validate (n, m) or fail with a usage error."""
    try:
        return SacParams(n=n, m=m)
    except ValidationError as e:
        messages = "; ".join(error["msg"] for error in e.errors())
        raise click.UsageError(messages) from e


def _fail(message: str) -> NoReturn:
    click.echo(f"Error: {message}", err=True)
    sys.exit(EXIT_FAILURE)


def _csv(header: Sequence[str], rows: Iterable[Sequence[object]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue()


def _settings(ctx: click.Context) -> Settings:
    settings = ctx.obj
    assert isinstance(settings, Settings)
    return settings


n_option = click.option("--n", "n", type=int, required=True, help="The integer being partitioned")
m_option = click.option("--m", "m", type=int, default=1, show_default=True,
                        help="Smallest allowed part")
format_option = click.option(
    "--format", "fmt",
    type=click.Choice([f.value for f in OutputFormat]),
    default=OutputFormat.LINES.value, show_default=True, help="Output format",
)


@click.group()
@click.version_option(version="0.1.0", prog_name="partition-meter")
@click.option("--log-level", default=None, help="Logging level for stderr diagnostics")
@click.pass_context
def cli(ctx: click.Context, log_level: Optional[str]) -> None:
    """
    Generate, count and meter ascending compositions.

    Examples:

        partition-meter enumerate --n 5

        partition-meter verify theorem1 --max-n 40 --jobs 4

        partition-meter boxes --n 5 --format svg > sac5.svg
    """
    try:
        settings = Settings()
    except ValidationError as e:
        raise click.UsageError(f"invalid PARTITION_METER_* environment: {e}") from e
    configure_logging(log_level or settings.log_level)
    ctx.obj = settings


@cli.command(name="enumerate")
@n_option
@m_option
@format_option
def enumerate_compositions(n: int, m: int, fmt: str) -> None:
    """
    List sac(n, m) in lexicographic order.

    Examples:

        partition-meter enumerate --n 5 --m 2          # 2+3, 5

        partition-meter enumerate --n 6 --format json
    """
    params = _params(n, m)
    compositions = [list(c.parts) for c in iterate(params)]
    if fmt == OutputFormat.JSON.value:
        click.echo(_PARTS.dump_json(compositions).decode())
    elif fmt == OutputFormat.CSV.value:
        width = params.n // params.m
        header = [f"part_{i}" for i in range(1, width + 1)]
        click.echo(_csv(header, compositions), nl=False)
    else:
        for parts in compositions:
            click.echo("+".join(str(part) for part in parts))


@cli.command()
@n_option
@m_option
@click.option("--oracle", is_flag=True, help="Cross-check p(n) with the pentagonal recurrence")
@click.pass_context
def count(ctx: click.Context, n: int, m: int, oracle: bool) -> None:
    """
    Print nac(n, m), the number of partitions of n with smallest part >= m.

    Examples:

        partition-meter count --n 5               # 7

        partition-meter count --n 10 --oracle     # 42 42 MATCH
    """
    params = _params(n, m)
    if oracle and params.m != 1:
        raise click.UsageError("--oracle requires m = 1")
    counting = CountingService(_settings(ctx))
    try:
        value = counting.nac(params)
        if not oracle:
            click.echo(str(value))
            return
        expected = counting.pentagonal_oracle(params.n)
    except PartitionMeterError as e:
        _fail(str(e))
    verdict = "MATCH" if value == expected else "MISMATCH"
    click.echo(f"{value} {expected} {verdict}")
    if value != expected:
        sys.exit(EXIT_FAILURE)


def _run_verification(
    which: IdentityName, max_n: int, jobs: int, settings: Settings
) -> VerificationReport:
    counting = CountingService(settings)
    identity = IdentityService(counting)
    metrics = identity.metrics
    if which is IdentityName.EQ1:
        return identity.verify_eq1(max_n, jobs)
    if which is IdentityName.THEOREM1:
        return metrics.check_theorem1(max_n, jobs)
    if which is IdentityName.EQ6:
        return identity.verify_eq6(max_n, jobs)
    if which is IdentityName.EQ6_LITERAL:
        return identity.verify_eq6(max_n, jobs, SummationDomain.LITERAL)
    if which is IdentityName.TRANSITIONS:
        return metrics.verify_transitions(max_n, jobs)
    if which is IdentityName.ORACLE:
        return counting.verify_oracle(max_n, jobs)
    return metrics.verify_amortized(max_n, jobs)


@cli.command()
@click.argument("which", type=click.Choice([i.value for i in IdentityName]))
@click.option("--max-n", "max_n", type=click.IntRange(min=1), required=True,
              help="Largest n in the sweep")
@format_option
@click.option("--jobs", type=click.IntRange(min=1), default=None,
              help="Worker threads (default from settings)")
@click.pass_context
def verify(ctx: click.Context, which: str, max_n: int, fmt: str, jobs: Optional[int]) -> None:
    """
    Sweep an identity over all (n, m) up to --max-n.

    Exits 0 when every row passes and 1 otherwise.

    Examples:

        partition-meter verify eq1 --max-n 60

        partition-meter verify eq6 --max-n 30 --format csv
    """
    settings = _settings(ctx)
    try:
        report = _run_verification(IdentityName(which), max_n, jobs or settings.jobs, settings)
    except PartitionMeterError as e:
        _fail(str(e))

    extras = sorted({key for row in report.rows for key in row.extras})
    if fmt == OutputFormat.JSON.value:
        click.echo(report.model_dump_json(indent=2))
    elif fmt == OutputFormat.CSV.value:
        header = ["n", "m", "lhs", "rhs", "pass", *extras]
        body = (
            [row.n, row.m, row.lhs, row.rhs, str(row.passed).lower(),
             *(row.extras.get(key, "") for key in extras)]
            for row in report.rows
        )
        click.echo(_csv(header, body), nl=False)
    else:
        for row in report.rows:
            details = "".join(f" {key}={row.extras[key]}" for key in extras if key in row.extras)
            verdict = "PASS" if row.passed else "FAIL"
            click.echo(f"n={row.n:<4} m={row.m:<4} lhs={row.lhs} rhs={row.rhs}{details} {verdict}")

    if fmt == OutputFormat.LINES.value:
        click.echo(report.summary())
    else:
        click.echo(report.summary(), err=True)
    if report.note:
        click.echo(f"note: {report.note}", err=True)
    if not report.all_pass:
        sys.exit(EXIT_FAILURE)


@cli.command()
@n_option
@m_option
@click.option(
    "--format", "fmt",
    type=click.Choice([f.value for f in DiagramFormat]),
    default=DiagramFormat.ASCII.value, show_default=True, help="Diagram format",
)
@click.option("--max-render-n", type=click.IntRange(min=1), default=None,
              help="Largest n allowed to render (default from settings)")
@click.pass_context
def boxes(ctx: click.Context, n: int, m: int, fmt: str, max_render_n: Optional[int]) -> None:
    """
    Draw the adjacency boxes of sac(n, m).

    Compositions are rows with the greatest on top; each box is one write.

    Examples:

        partition-meter boxes --n 5                 # 13 boxes

        partition-meter boxes --n 8 --format svg
    """
    settings = _settings(ctx)
    params = _params(n, m)
    cap = max_render_n or settings.boxes_max_n
    if params.n > cap:
        raise click.UsageError(f"n={params.n} is above the render cap {cap} (see --max-render-n)")
    try:
        nac = CountingService(settings).nac(params)
    except PartitionMeterError as e:
        _fail(str(e))

    layout = box_layout(params)
    footer = f"boxes={layout.count} = 2*{nac}-1"
    if fmt == DiagramFormat.SVG.value:
        click.echo(render_svg(layout, footer), nl=False)
    else:
        click.echo(render_ascii(layout), nl=False)
        click.echo(footer)
    if layout.count != 2 * nac - 1:
        _fail(f"rendered {layout.count} boxes but 2*nac-1 = {2 * nac - 1}")


@cli.command()
@n_option
@m_option
@format_option
@click.pass_context
def meter(ctx: click.Context, n: int, m: int, fmt: str) -> None:
    """
    Count the writes needed to generate sac(n, m).

    Examples:

        partition-meter meter --n 5      # writes=13 compositions=7 amortized=13/7
    """
    params = _params(n, m)
    metrics = SuffixMetricsService(settings=_settings(ctx))
    try:
        cost = metrics.amortized_cost(params)
    except PartitionMeterError as e:
        _fail(str(e))

    ratio = f"{cost.ratio.numerator}/{cost.ratio.denominator}"
    closed_form = f"2 - 1/{cost.compositions}"
    if fmt == OutputFormat.JSON.value:
        click.echo(cost.model_dump_json(indent=2))
    elif fmt == OutputFormat.CSV.value:
        header = ["writes", "compositions", "amortized", "closed_form", "decimal"]
        row = [cost.writes, cost.compositions, ratio, closed_form, f"{cost.decimal:.6f}"]
        click.echo(_csv(header, [row]), nl=False)
    else:
        click.echo(f"writes={cost.writes} compositions={cost.compositions} amortized={ratio}")
        click.echo(f"closed_form={closed_form} decimal={cost.decimal:.6f}")


if __name__ == "__main__":
    cli()
