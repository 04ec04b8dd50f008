"""
Services module - benchmark harness and basin renderer.

For the numerical core (methods, analysis, problems), use the app.numerics module.
"""

from app.services.basin_service import classify, parse_polynomial, render, write_image
from app.services.bench_service import BENCH_CASES, emit_table, run_bench, summarize

__all__ = [
    "classify",
    "parse_polynomial",
    "render",
    "write_image",
    "BENCH_CASES",
    "emit_table",
    "run_bench",
    "summarize",
]
