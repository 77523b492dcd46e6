import logging
import sys

import click

from .cli import init
from .core.tools.formats import KINDS
from .runner import DELTA_POLYNOMIALS, METHODS, SUITES, RunConfig, run

INPUT_OPTIONS = [
    click.option(
        "--input",
        "-i",
        "input_path",
        required=True,
        type=click.Path(exists=True, dir_okay=False),
        help="Input file (graph, digraph4, graph4, plane or setsystem format)",
    ),
    click.option(
        "--format",
        "-f",
        "input_format",
        default=None,
        type=click.Choice(KINDS),
        help="Input format, Default : read from the header line",
    ),
    click.option(
        "--method",
        "-m",
        default="statesum",
        type=click.Choice(METHODS),
        help="Pipeline to use; both prints MATCH or MISMATCH",
    ),
]

COMMON_OPTIONS = [
    click.option("--config", "-c", "config_file", default=None, help="Suite configuration file path"),
    click.option("--log-file", "-lf", "log_file", default=None, help="Write logs to this file instead of stderr"),
    click.option("--verbose", "-v", is_flag=True, default=False, help="Log at DEBUG level"),
]


def input_options(function):
    for option in reversed(INPUT_OPTIONS + COMMON_OPTIONS):
        function = option(function)
    return function


def configure_logging(log_file=None, verbose=False):
    """Logs never go to stdout, which only carries the report."""
    level = logging.DEBUG if verbose else logging.WARNING
    if log_file:
        logging.basicConfig(level=level, filename=log_file)
    else:
        logging.basicConfig(level=level, stream=sys.stderr)


def execute(command, config_file=None, log_file=None, verbose=False, **options):
    configure_logging(log_file, verbose)
    result = run(RunConfig.from_options(command, config_file=config_file, **options))
    for line in result.lines:
        click.echo(line)
    for line in result.errors:
        click.echo(line, err=True)
    sys.exit(result.status)


@click.group()
def cli():
    pass


@click.command("q")
@input_options
def nullity_polynomial(**options):
    """Vertex-nullity interlace polynomial q_N(G; x)."""
    execute("q", **options)


@click.command("q2")
@input_options
def two_variable_polynomial(**options):
    """Two-variable interlace polynomial q(G; x, y)."""
    execute("q2", **options)


@click.command("Q")
@input_options
def global_polynomial(**options):
    """Global interlace polynomial Q(G; x) of a simple graph."""
    execute("Q", **options)


@click.command("qm")
@input_options
def matrix_polynomial(**options):
    """Interlace polynomial q_m of the adjacency matrix, loops on the diagonal."""
    execute("qm", **options)


@click.command("martin")
@input_options
def martin_polynomial(**options):
    """Martin polynomial m(D; x) of a digraph4 or M(G; x) of a graph4 input."""
    execute("martin", **options)


@click.command("euler-count")
@input_options
def euler_count(**options):
    """Number of Eulerian circuits (Eulerian systems when disconnected)."""
    execute("euler-count", **options)


@click.command("tutte-diag")
@input_options
def tutte_diagonal(**options):
    """Tutte polynomial t(G; x, x) of a plane graph."""
    execute("tutte-diag", **options)


@click.command("tm")
@input_options
@click.option(
    "--global",
    "-g",
    "global_polynomial",
    is_flag=True,
    default=False,
    help="Global Tutte-Martin polynomial TM (graph input only)",
)
def tutte_martin(**options):
    """Tutte-Martin polynomial of the isotropic system of a graph (graphic
    presentation x, y) or of a digraph4 input (restricted to the
    inconsistent transitions)."""
    execute("tm", **options)


@click.command("delta")
@click.argument("target", type=click.Choice(DELTA_POLYNOMIALS))
@input_options
def delta(**options):
    """Delta-matroid polynomials of a setsystem input, or of the adjacency
    delta-matroid of a graph input; tutte needs a matroid."""
    execute("delta", **options)


@click.command("check")
@click.argument("target", type=click.Choice(SUITES))
@click.option("--seed", "-s", default=None, type=int, help="Random seed, Default : from the config file")
@click.option("--trials", "-t", default=None, type=int, help="Random trials per suite")
@click.option("--max-n", "-n", "max_n", default=None, type=int, help="Largest random instance")
@COMMON_OPTIONS[0]
@COMMON_OPTIONS[1]
@COMMON_OPTIONS[2]
def check(**options):
    """Run the identity batteries and print per-identity pass counts."""
    execute("check", **options)


cli.add_command(init)
cli.add_command(nullity_polynomial)
cli.add_command(two_variable_polynomial)
cli.add_command(global_polynomial)
cli.add_command(matrix_polynomial)
cli.add_command(martin_polynomial)
cli.add_command(euler_count)
cli.add_command(tutte_diagonal)
cli.add_command(tutte_martin)
cli.add_command(delta)
cli.add_command(check)

if __name__ == "__main__":
    cli()
