# app/commands/basins.py
"""
`basins`: one PPM image per (method, polynomial) pair.
"""
import logging
from pathlib import Path
from typing import List, Optional

import typer
from pydantic import ValidationError

from app.commands.options import EXIT_IO, EXIT_OK, WeightPair, build_run_config, console
from app.config import settings
from app.schemas.basins import BasinConfig
from app.schemas.solver import StepKind
from app.services.basin_service import parse_polynomial, render, write_image

logger = logging.getLogger(__name__)

DEFAULT_POLYS = ["z3-1", "z4-1"]


def _parse_region(text: str):
    try:
        parts = tuple(float(v) for v in text.split(","))
    except ValueError as e:
        raise typer.BadParameter(f"region must be re_min,re_max,im_min,im_max: {text}", param_hint="--region") from e
    if len(parts) != 4:
        raise typer.BadParameter(f"region needs four numbers, got {len(parts)}", param_hint="--region")
    return parts


def basins_command(
    poly: Optional[List[str]] = typer.Option(None, "--poly", help="zK-1 or comma-separated coefficients; repeatable"),
    method: Optional[List[StepKind]] = typer.Option(None, "--method", help="Iteration method; repeatable"),
    grid: Optional[int] = typer.Option(None, "--grid", help="Image width and height in pixels"),
    region: Optional[str] = typer.Option(None, "--region", help="re_min,re_max,im_min,im_max"),
    max_iter_basin: Optional[int] = typer.Option(None, "--max-iter-basin", help="Iterations per pixel"),
    capture_tol: Optional[float] = typer.Option(None, "--capture-tol", help="Root capture radius"),
    alpha: Optional[str] = typer.Option(None, "--alpha", help="Scale in z = x + alpha f(x)^m"),
    m: Optional[int] = typer.Option(None, "--m", help="Exponent in z = x + alpha f(x)^m"),
    weights: Optional[WeightPair] = typer.Option(None, "--weights", help="Weight pair for om8"),
    out: Optional[str] = typer.Option(None, "--out", help="Output directory (default OUTPUT_DIR)"),
    workers: Optional[int] = typer.Option(None, "--workers", help="Parallel row bands"),
    config: Optional[Path] = typer.Option(None, "--config", help="key=value config file"),
):
    """Render basins of attraction as binary PPM files."""
    cfg = build_run_config(
        config,
        poly=poly,
        methods=method,
        grid=grid,
        region=region,
        max_iter_basin=max_iter_basin,
        capture_tol=capture_tol,
        alpha=alpha,
        m=m,
        weights=weights,
        out=out,
        workers=workers,
    )
    bounds = _parse_region(cfg.region)
    try:
        alpha_value = complex(cfg.alpha)
    except ValueError as e:
        raise typer.BadParameter(f"invalid alpha '{cfg.alpha}'", param_hint="--alpha") from e

    polys = []
    for token in cfg.poly or DEFAULT_POLYS:
        try:
            polys.append(parse_polynomial(token))
        except ValueError as e:
            raise typer.BadParameter(str(e), param_hint="--poly") from e

    jobs = []
    for kind in cfg.methods or [StepKind.OM8]:
        for coeffs, label in polys:
            try:
                jobs.append(
                    BasinConfig(
                        polynomial=coeffs,
                        region=bounds,
                        width=cfg.grid,
                        height=cfg.grid,
                        max_iter=cfg.max_iter_basin,
                        capture_tol=cfg.capture_tol,
                        method=kind,
                        alpha=alpha_value,
                        m=cfg.m if cfg.m is not None else settings.EXPONENT_M,
                        weights=cfg.weights,
                        label=label,
                    )
                )
            except ValidationError as e:
                raise typer.BadParameter(e.errors()[0].get("msg", str(e))) from e

    out_dir = Path(cfg.out or settings.OUTPUT_DIR)
    workers = cfg.workers or settings.BASIN_WORKERS
    for job in jobs:
        image = render(job, workers=workers)
        path = out_dir / f"basins_{job.label}_{job.method.value}.ppm"
        try:
            write_image(image, path)
        except OSError as e:
            console.print(f"[red]cannot write {path}: {e}[/red]")
            raise typer.Exit(EXIT_IO)
        counts = image.class_counts()
        console.print(f"{path}  ({job.width}x{job.height}, unassigned pixels: {counts.get(-1, 0)})")
    raise typer.Exit(EXIT_OK)
