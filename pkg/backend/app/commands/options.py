# app/commands/options.py
"""
Shared CLI plumbing: choice enums, config-file loading and RunConfig merging.

Precedence is explicit flag > config file > settings (.env / environment).
The config file is a flat key=value document whose keys are the flag names
(`max-iter=100`, `tol=1e-50`); it is read with python-dotenv.
"""
import logging
from enum import Enum
from pathlib import Path
from typing import Any, Dict, Optional

import typer
from dotenv import dotenv_values
from pydantic import ValidationError
from rich.console import Console

from app.config import settings
from app.schemas.run import RunConfig

logger = logging.getLogger(__name__)

console = Console()

EXIT_OK = 0
EXIT_NOT_CONVERGED = 1
EXIT_USAGE = 2
EXIT_IO = 3


class WeightPair(str, Enum):
    particular = "particular"
    alternate = "alternate"


class TableFormat(str, Enum):
    csv = "csv"
    markdown = "markdown"


# flag name -> RunConfig field, where they differ
FLAG_FIELDS = {
    "digits": "precision_digits",
    "tol": "tolerance",
}
LIST_FIELDS = {"poly", "methods"}


def _field_for(key: str) -> str:
    key = key.strip().lower().lstrip("-").replace("-", "_")
    return FLAG_FIELDS.get(key, key)


def load_config_file(path: Optional[Path]) -> Dict[str, Any]:
    """Read a key=value config file into RunConfig field names."""
    if path is None:
        return {}
    if not Path(path).is_file():
        raise typer.BadParameter(f"config file not found: {path}", param_hint="--config")
    values: Dict[str, Any] = {}
    for key, value in dotenv_values(path).items():
        field = _field_for(key)
        if field not in RunConfig.model_fields:
            raise typer.BadParameter(f"unknown key '{key}' in {path}", param_hint="--config")
        if value is None:
            continue
        if field in LIST_FIELDS:
            values[field] = [v.strip() for v in value.split(";") if v.strip()]
        else:
            values[field] = value
    logger.debug(f"[CLI] Loaded {len(values)} settings from {path}")
    return values


def build_run_config(config: Optional[Path] = None, **flags: Any) -> RunConfig:
    """
    Merge settings defaults, the config file and explicit flags.

    A flag counts as given when it is not None; boolean switches only
    override when set. Validation failures become usage errors.
    """
    merged: Dict[str, Any] = {
        "precision_digits": settings.PRECISION_DIGITS,
        "tolerance": settings.TOLERANCE,
        "max_iter": settings.MAX_ITER,
        "alpha": settings.ALPHA,
        "grid": settings.BASIN_GRID,
        "region": settings.BASIN_REGION,
        "max_iter_basin": settings.BASIN_MAX_ITER,
        "capture_tol": settings.BASIN_CAPTURE_TOL,
    }
    merged.update(load_config_file(config))
    for key, value in flags.items():
        field = _field_for(key)
        if value is None or value is False:
            continue
        if field in LIST_FIELDS and not value:
            continue
        if isinstance(value, Enum):
            value = value.value
        if field in LIST_FIELDS:
            value = [v.value if isinstance(v, Enum) else v for v in value]
        merged[field] = value

    try:
        return RunConfig(**merged)
    except ValidationError as e:
        first = e.errors()[0]
        where = ".".join(str(p) for p in first.get("loc", ()))
        raise typer.BadParameter(f"{where}: {first.get('msg')}") from e


def output_path(out: Optional[str], default_name: str) -> Path:
    """`out` if given, else OUTPUT_DIR/default_name."""
    if out:
        return Path(out)
    return Path(settings.OUTPUT_DIR) / default_name
