"""Scenario files, the built-in example corpus and verdict-table reporting."""

from .evaluate import ReportRow, ScenarioResult, SubchartRecord, aggregate, evaluate_scenario
from .expr import parse_matrix, parse_poly, parse_scalar
from .main import main, run_builtin, run_examples
from .report import Report, parse_report, render
from .scenario import Scenario, parse_scenario

__all__ = [
    "Report", "ReportRow", "Scenario", "ScenarioResult", "SubchartRecord", "aggregate",
    "evaluate_scenario", "main", "parse_matrix", "parse_poly", "parse_report", "parse_scalar",
    "parse_scenario", "render", "run_builtin", "run_examples",
]
