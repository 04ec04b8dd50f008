# app/commands/problems.py
import typer
from rich.table import Table

from app.commands.options import EXIT_OK, console
from app.config import settings
from app.numerics.problems.suite import load_entries


def problems_command(
    literal_f7: bool = typer.Option(False, "--literal-f7", help="Show f7 as printed, with cos(pi/2)"),
):
    """List the test-function suite."""
    literal = literal_f7 or settings.F7_LITERAL
    table = Table(title="Test functions")
    for column in ("name", "f(x)", "domain", "root"):
        table.add_column(column, overflow="fold")
    for item in load_entries():
        expression = item.literal_expression if literal and item.literal_expression else item.expression
        root = item.exact_root or item.listed_root or ""
        if literal and item.literal_expression:
            root = "none (no real root)"
        table.add_row(item.name, expression, item.domain.describe(), root)
    console.print(table)
    raise typer.Exit(EXIT_OK)
