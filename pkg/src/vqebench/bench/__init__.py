"""Benchmark harness: scans, statistics, CSV and SVG output, CLI."""

from .config import (
    ALL_MODE_BUDGETS,
    FIXED_MODE_BUDGETS,
    OptimizerId,
    ScanConfig,
    ScanMode,
    StateBudget,
)
from .plots import emit_plot
from .report import CHEMICAL_ACCURACY, Summary, emit_csv, summarize
from .scan import BenchmarkRecord, CellTask, cell_seed, log_error, run_cell, run_scan

__all__ = [
    "ALL_MODE_BUDGETS",
    "CHEMICAL_ACCURACY",
    "FIXED_MODE_BUDGETS",
    "BenchmarkRecord",
    "CellTask",
    "OptimizerId",
    "ScanConfig",
    "ScanMode",
    "StateBudget",
    "Summary",
    "cell_seed",
    "emit_csv",
    "emit_plot",
    "log_error",
    "run_cell",
    "run_scan",
    "summarize",
]
