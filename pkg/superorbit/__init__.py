import os


def update_env_variables():
    """
    Mirror every SUPERORBIT_<NAME> variable into <NAME>, so a project can scope settings like
    LOG_LEVEL to this tool.
    """
    prefix = "SUPERORBIT_"
    # copy the keys, os.environ changes while we iterate
    for key in list(os.environ.keys()):
        if key.startswith(prefix):
            base_key = key[len(prefix) :]
            # prefixed variables take precedence over existing variables
            os.environ[base_key] = os.environ[key]


update_env_variables()

from pathlib import Path  # noqa: E402

import click  # noqa: E402

from .analysis import analyze_partition, analyze_representative  # noqa: E402
from .errors import SuperorbitError  # noqa: E402
from .exceptional import EXCEPTIONAL, build_exceptional  # noqa: E402
from .field import parse_alpha  # noqa: E402
from .log import log  # noqa: E402
from .matrixalg import FAMILIES, SuperPartition  # noqa: E402
from .report import (  # noqa: E402
    FORMATS,
    render_enumeration,
    render_orbit,
    render_tables,
    render_verification,
    write_tables,
)
from .timing import log_execution_time  # noqa: E402
from .verify import enumerate_partitions, verify_theorem  # noqa: E402
from .version import __version__  # noqa: E402

ALGEBRAS = (*FAMILIES, *EXCEPTIONAL)


def default_alpha() -> str:
    return os.environ.get("SUPERORBIT_ALPHA", "2")


def default_jobs() -> int:
    return int(os.environ.get("SUPERORBIT_JOBS", "1"))


class UserFacingError(click.ClickException):
    """Usage error shown as a single red line (no traceback)."""

    exit_code = 2

    def show(self, file=None):
        click.secho(self.format_message(), fg="red", err=True)


def _field(alpha: str):
    try:
        return parse_alpha(alpha)
    except ValueError as e:
        raise UserFacingError(str(e)) from None


def echo_cli_version(ctx: click.Context, param: click.Parameter, value: bool) -> None:
    if not value or ctx.resilient_parsing:
        return

    prog_name = ctx.find_root().info_name or "superorbit"
    click.echo(f"{prog_name}, version {__version__}")
    ctx.exit()


@click.group()
@click.option(
    "--version",
    is_flag=True,
    expose_value=False,
    is_eager=True,
    callback=echo_cli_version,
    help="Show the version and exit.",
)
def main():
    """
    Reachable, strongly reachable and Panyushev nilpotent elements of basic classical Lie
    superalgebras, computed in exact arithmetic.
    """


def format_option(default: str = "json"):
    return click.option(
        "--format",
        "output_format",
        type=click.Choice(FORMATS),
        default=default,
        show_default=True,
        help="output format",
    )

jobs_option = click.option(
    "--jobs",
    type=click.IntRange(min=1),
    default=default_jobs,
    help="worker processes for sweeps (SUPERORBIT_JOBS)",
)


@main.command()
@click.option(
    "--algebra",
    type=click.Choice(ALGEBRAS),
    required=True,
    help="matrix family (with --partition) or exceptional algebra (with --orbit)",
)
@click.option("--partition", help='super-partition, e.g. "3,2,1|3,2,1"')
@click.option("--orbit", help='orbit label of an exceptional algebra, e.g. "E+x2"')
@click.option(
    "--alpha",
    default=default_alpha,
    help="D(2,1;a) parameter: 'symbolic' or a rational sample (SUPERORBIT_ALPHA)",
)
@format_option()
def analyze(algebra, partition, orbit, alpha, output_format):
    """
    Analyse a single nilpotent orbit.
    """
    try:
        if algebra in EXCEPTIONAL:
            if orbit is None:
                raise UserFacingError(f"--orbit is required for {algebra}")
            A = build_exceptional(algebra, _field(alpha))
            report = analyze_representative(A, orbit)
            parsed = None
        else:
            if partition is None:
                raise UserFacingError(f"--partition is required for {algebra}")
            parsed = SuperPartition.parse(partition)
            report = analyze_partition(algebra, parsed)
    except SuperorbitError as e:
        raise UserFacingError(str(e)) from None

    click.echo(render_orbit(report, output_format, parsed), nl=False)


@main.command(name="enumerate")
@click.option(
    "--family",
    type=click.Choice(FAMILIES),
    required=True,
    help="matrix family to sweep",
)
@click.option("--max", "max_size", type=click.IntRange(min=1), help="size bound of the sweep")
@format_option()
@jobs_option
def enumerate_command(family, max_size, output_format, jobs):
    """
    Analyse every partition of a family in a range, with the partition criterion.
    """
    try:
        reports = enumerate_partitions(family, max_size, jobs)
    except (SuperorbitError, ValueError) as e:
        raise UserFacingError(str(e)) from None

    click.echo(render_enumeration(reports, output_format), nl=False)


@main.command()
@click.option(
    "--algebra",
    type=click.Choice(EXCEPTIONAL),
    help="only this table; all three by default",
)
@click.option("--alpha", default="symbolic", show_default=True, help="D(2,1;a) parameter")
@click.option(
    "--output-dir",
    type=click.Path(file_okay=False, path_type=Path),
    help="write one markdown file per table instead of printing",
)
@format_option("md")
def tables(algebra, alpha, output_dir, output_format):
    """
    Regenerate the reachable / strongly reachable / Panyushev tables of D(2,1;a), G(3) and F(4).
    """
    field = _field(alpha)
    keys = (algebra,) if algebra else EXCEPTIONAL

    with log_execution_time("tables"):
        if output_dir is not None:
            for path in write_tables(output_dir, field, keys):
                click.echo(str(path))
            return

        click.echo(render_tables(keys, output_format, field), nl=False)


@main.command()
@click.argument("theorem")
@click.option(
    "--family",
    "--algebra",
    "family",
    type=click.Choice(ALGEBRAS),
    help="family or exceptional algebra; the theorem's default families otherwise",
)
@click.option(
    "--max",
    "--max-n",
    "max_size",
    type=click.IntRange(min=1),
    help="size bound: m+n for gl/sl, n for psl(n|n), m+2n for osp(m|2n)",
)
@click.option("--alpha", default="symbolic", show_default=True, help="D(2,1;a) parameter")
@format_option("md")
@jobs_option
def verify(theorem, family, max_size, alpha, output_format, jobs):
    """
    Check a theorem by brute force over a range; exits 1 when a counterexample turns up.

    THEOREM is one of theorem1, theorem2, three-conditions, dim-gl, dim-psl, centre, psl-diagram,
    two-free-core, osp-derived, jacobi, anchors, tables.
    """
    try:
        report = verify_theorem(theorem, family, max_size, jobs, _field(alpha))
    except (SuperorbitError, ValueError) as e:
        raise UserFacingError(str(e)) from None

    click.echo(render_verification(report, output_format), nl=False)
    if report.counterexamples:
        log.warning(f"{theorem}: {len(report.counterexamples)} counterexamples")
        click.get_current_context().exit(1)

