# app/commands/solve.py
"""
`solve`: run one method on one problem from one starting point.
"""
import logging
from pathlib import Path
from typing import Optional

import mpmath
import typer
from rich.table import Table

from app.commands.options import (
    EXIT_NOT_CONVERGED,
    EXIT_OK,
    WeightPair,
    build_run_config,
    console,
)
from app.numerics.exceptions import ExpressionError
from app.numerics.precision import format_scientific, short_style, to_scalar, working_precision
from app.numerics.service import get_numerics_service
from app.schemas.solver import IterationTrace, SolveReport, StepKind

logger = logging.getLogger(__name__)


def _print_report(report: SolveReport) -> None:
    table = Table(title=f"{report.problem}  x0 = {report.x0}  ({report.method.value}, {report.precision_digits} digits)")
    table.add_column("field")
    table.add_column("value", overflow="fold")
    table.add_row("status", report.status.value)
    table.add_row("IT", str(report.iterations))
    table.add_row("TNE", str(report.evaluations))
    if not mpmath.isnan(report.residual):
        table.add_row("|f|", f"{short_style(report.residual)}   ({format_scientific(report.residual, 20)})")
    table.add_row("x", mpmath.nstr(report.x, 40))
    if report.coc is not None:
        kind = "successive differences" if report.coc.residual_based else "reference root"
        table.add_row("COC", f"{report.coc.rho:.4f} ({kind})")
    if report.note:
        table.add_row("note", report.note)
    console.print(table)


def _print_trace(trace: IterationTrace) -> None:
    table = Table(title="iterates")
    table.add_column("n", justify="right")
    table.add_column("x_n", overflow="fold")
    table.add_column("|f(x_n)|")
    table.add_column("evals", justify="right")
    for record in trace.records:
        residual = short_style(record.residual) if record.residual is not None else ""
        table.add_row(str(record.iteration), mpmath.nstr(record.x, 30), residual, str(record.evaluations))
    console.print(table)


def solve_command(
    problem: Optional[str] = typer.Option(None, "--problem", help="Suite function name (f1..f7)"),
    expr: Optional[str] = typer.Option(None, "--expr", help="Function of x, e.g. 'x^3 - 2'"),
    x0: Optional[str] = typer.Option(None, "--x0", help="Initial guess (decimal string)"),
    method: Optional[StepKind] = typer.Option(None, "--method", help="Iteration method"),
    digits: Optional[int] = typer.Option(None, "--digits", help="Working precision in decimal digits"),
    tol: Optional[str] = typer.Option(None, "--tol", help="Stop when |f(x_n+1)| < tol"),
    max_iter: Optional[int] = typer.Option(None, "--max-iter", help="Iteration cap"),
    alpha: Optional[str] = typer.Option(None, "--alpha", help="Scale in z = x + alpha f(x)^m"),
    m: Optional[int] = typer.Option(None, "--m", help="Exponent in z = x + alpha f(x)^m"),
    weights: Optional[WeightPair] = typer.Option(None, "--weights", help="Weight pair for om8"),
    coc: bool = typer.Option(False, "--coc", help="Append the computational order of convergence"),
    trace: bool = typer.Option(False, "--trace", help="Print every iterate"),
    config: Optional[Path] = typer.Option(None, "--config", help="key=value config file"),
):
    """Solve f(x) = 0 and print the report. Exit 0 on Converged, 1 otherwise."""
    cfg = build_run_config(
        config,
        problem=problem,
        expr=expr,
        x0=x0,
        method=method,
        digits=digits,
        tol=tol,
        max_iter=max_iter,
        alpha=alpha,
        m=m,
        weights=weights,
        coc=coc,
        trace=trace,
    )
    if (cfg.problem is None) == (cfg.expr is None):
        raise typer.BadParameter("give exactly one of --problem or --expr")
    if cfg.x0 is None:
        raise typer.BadParameter("an initial guess is required", param_hint="--x0")

    with working_precision(cfg.precision_digits):
        for value, hint in ((cfg.x0, "--x0"), (cfg.tolerance, "--tol"), (cfg.alpha, "--alpha")):
            try:
                to_scalar(value)
            except ValueError as e:
                raise typer.BadParameter(str(e), param_hint=hint) from e

    service = get_numerics_service(cfg.precision_digits)
    try:
        report, iterates = service.solve(
            cfg.x0,
            problem=cfg.problem,
            expression=cfg.expr,
            method=cfg.method,
            tol=cfg.tolerance,
            max_iter=cfg.max_iter,
            alpha=cfg.alpha,
            m=cfg.m,
            weights=cfg.weights,
            with_coc=cfg.coc,
        )
    except KeyError as e:
        raise typer.BadParameter(str(e.args[0]), param_hint="--problem") from e
    except ExpressionError as e:
        raise typer.BadParameter(str(e), param_hint="--expr") from e
    except ValueError as e:
        raise typer.BadParameter(str(e)) from e

    _print_report(report)
    if cfg.trace:
        _print_trace(iterates)
    raise typer.Exit(EXIT_OK if report.converged else EXIT_NOT_CONVERGED)
