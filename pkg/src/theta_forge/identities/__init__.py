"""Registry of exact checks: equalities, sign scans and count-versus-series comparisons."""
from ..report import CSV_HEADER, CheckReport
from .registry import REGISTRY, check_names, get_row, run_check, run_suite, suite_plan, threshold_scan

__all__ = [
    "CSV_HEADER",
    "CheckReport",
    "REGISTRY",
    "check_names",
    "get_row",
    "run_check",
    "run_suite",
    "suite_plan",
    "threshold_scan",
]
