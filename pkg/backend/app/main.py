import logging

from app.config import settings

logging.basicConfig(level=settings.LOG_LEVEL, format="%(name)s - %(message)s")

import typer

from app import __version__
from app.commands import (
    basins_command,
    bench_command,
    problems_command,
    solve_command,
    weights_command,
)

# Initialize CLI
cli = typer.Typer(
    name="octasolve",
    help="Derivative-free eighth-order root finding in arbitrary precision",
    add_completion=False,
    no_args_is_help=True,
)

# Register commands
cli.command("solve")(solve_command)
cli.command("bench")(bench_command)
cli.command("basins")(basins_command)
cli.command("weights")(weights_command)
cli.command("problems")(problems_command)


@cli.command("version")
def version():
    """Print the package version"""
    typer.echo(f"octasolve {__version__}")


def main():
    cli()


if __name__ == "__main__":
    main()
