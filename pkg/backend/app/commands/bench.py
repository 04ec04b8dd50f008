# app/commands/bench.py
"""
`bench`: the 21-row OM8 comparison.
"""
import logging
from pathlib import Path
from typing import Optional

import typer
from rich.table import Table

from app.commands.options import (
    EXIT_IO,
    EXIT_NOT_CONVERGED,
    EXIT_OK,
    TableFormat,
    build_run_config,
    console,
    output_path,
)
from app.config import settings
from app.numerics.precision import short_style
from app.services.bench_service import emit_table, run_bench, summarize

logger = logging.getLogger(__name__)

EXTENSIONS = {"csv": "csv", "markdown": "md"}


def bench_command(
    digits: Optional[int] = typer.Option(None, "--digits", help="Working precision in decimal digits"),
    tol: Optional[str] = typer.Option(None, "--tol", help="Stopping tolerance"),
    max_iter: Optional[int] = typer.Option(None, "--max-iter", help="Iteration cap (defines NC)"),
    format: Optional[TableFormat] = typer.Option(None, "--format", help="Table format"),
    out: Optional[str] = typer.Option(None, "--out", help="Table file (default OUTPUT_DIR/om8_bench.<ext>)"),
    workers: Optional[int] = typer.Option(None, "--workers", help="Parallel cases"),
    config: Optional[Path] = typer.Option(None, "--config", help="key=value config file"),
):
    """Run every benchmark case and write the comparison table. Exit 0 iff >= 19 of 21 IT values match."""
    cfg = build_run_config(
        config, digits=digits, tol=tol, max_iter=max_iter, format=format, out=out, workers=workers
    )
    n_jobs = cfg.workers or settings.BENCH_WORKERS
    results = run_bench(precision=cfg.precision_digits, tol=cfg.tolerance, max_iter=cfg.max_iter, n_jobs=n_jobs)
    text = emit_table(results, cfg.format)

    path = output_path(cfg.out, f"om8_bench.{EXTENSIONS[cfg.format]}")
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text, encoding="utf-8")
    except OSError as e:
        console.print(f"[red]cannot write {path}: {e}[/red]")
        raise typer.Exit(EXIT_IO)

    table = Table(title=f"OM8, {cfg.precision_digits} digits, tol {cfg.tolerance}")
    for column in ("function", "x0", "status", "IT", "expected IT", "|f|", "expected |f|", "match"):
        table.add_column(column)
    for r in results:
        table.add_row(
            r.case.problem,
            r.case.x0,
            r.report.status.value,
            str(r.report.iterations),
            str(r.case.expected_it),
            text_residual(r),
            r.case.expected_residual or "",
            "yes" if r.it_match else "[red]no[/red]",
        )
    console.print(table)

    summary = summarize(results, cfg.precision_digits, cfg.tolerance)
    console.print(
        f"IT matches: {summary['it_matches']}/{summary['total']}   "
        f"TNE matches: {summary['tne_matches']}   residual exponents within 10: {summary['residual_matches']}"
    )
    console.print(f"table written to {path}")
    if not summary["comparable"]:
        console.print("[yellow]non-comparable: the published column uses 1000 digits and tol 1e-50[/yellow]")
        raise typer.Exit(EXIT_OK)
    raise typer.Exit(EXIT_OK if summary["passed"] else EXIT_NOT_CONVERGED)


def text_residual(result) -> str:
    return short_style(result.report.residual) if result.report.converged else result.report.status.short_label
