"""Bound verification: single-graph and product reports, sweeps, the Vizing-like scan and fixtures"""

from harness.bounds import check_all_bounds
from harness.fixtures import run_fixture_suite
from harness.products import check_cartesian_bounds
from harness.reports import BoundCheck, BoundCheckReport, BoundStatus
from harness.sweep import SweepMode, SweepSummary, exhaustive_sweep
from harness.vizing import VizingScanReport, vizing_like_scan

__all__ = [
    "check_all_bounds",
    "run_fixture_suite",
    "check_cartesian_bounds",
    "BoundCheck",
    "BoundCheckReport",
    "BoundStatus",
    "SweepMode",
    "SweepSummary",
    "exhaustive_sweep",
    "VizingScanReport",
    "vizing_like_scan",
]
