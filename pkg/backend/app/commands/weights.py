# app/commands/weights.py
"""
`weights`: check every registered weight function and list efficiency indices.
"""
import logging

import typer
from rich.table import Table

from app.commands.options import EXIT_NOT_CONVERGED, EXIT_OK, console
from app.numerics.analysis.conditions import MIN_CHECK_DIGITS, conditions_hold
from app.numerics.analysis.convergence import efficiency_table
from app.numerics.exceptions import EvaluationFailure
from app.numerics.service import get_numerics_service

logger = logging.getLogger(__name__)


def weights_command(
    digits: int = typer.Option(256, "--digits", help="Precision of the finite-difference check"),
):
    """Measure derivatives 0..4 of each weight at its expansion point. Exit 0 iff all conditions hold."""
    if digits < MIN_CHECK_DIGITS:
        raise typer.BadParameter(f"at least {MIN_CHECK_DIGITS} digits are needed", param_hint="--digits")

    try:
        results = get_numerics_service().check_weights(digits)
    except EvaluationFailure as e:
        console.print(f"[red]{e}[/red]")
        raise typer.Exit(EXIT_NOT_CONVERGED)

    table = Table(title=f"Weight conditions ({digits} digits)")
    for column in ("weight", "order", "expected", "measured", "pass"):
        table.add_column(column)
    all_pass = True
    for name, checks in results:
        all_pass = all_pass and conditions_hold(checks)
        for c in checks:
            expected = f"{c.expected:g}" if c.expected is not None else "finite"
            table.add_row(name, c.label, expected, f"{c.measured:.6g}", "yes" if c.passed else "[red]no[/red]")
    console.print(table)

    efficiency = Table(title="Efficiency index p^(1/n)")
    for column in ("method", "order p", "evaluations n", "index"):
        efficiency.add_column(column)
    for row in efficiency_table():
        efficiency.add_row(row.method, f"{row.order:g}", str(row.evaluations), f"{row.index:.3f}")
    console.print(efficiency)

    raise typer.Exit(EXIT_OK if all_pass else EXIT_NOT_CONVERGED)
