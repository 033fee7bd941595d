"""Deterministic rendering of verdict tables as markdown, TSV or JSON."""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .evaluate import ReportRow, SubchartRecord
from .scenario import COLUMNS

FORMATS = ("md", "tsv", "json")
HEADER = ("Example", "Suborbifold", "Full", "Saturated", "Split", "Image of Orbifold Embedding")
EXTRA = ("Isotropy (Omega/Lambda/Gamma_P)", "Witness")


@dataclass
class Report:
    rows: list[ReportRow] = field(default_factory=list)
    records: list[SubchartRecord] = field(default_factory=list)


def _cells(row: ReportRow, witness: bool) -> list[str]:
    cells = [row.label, *row.verdicts]
    if witness:
        cells += [row.names, row.witness]
    return cells


def _md_escape(text: str) -> str:
    return text.replace("|", "\\|")


def render(report: Report, fmt: str = "md", witness: bool = False) -> str:
    """Render the table; ``json`` always carries names and witnesses."""
    if fmt == "md":
        header = list(HEADER) + (list(EXTRA) if witness else [])
        lines = ["| " + " | ".join(header) + " |", "|" + "|".join("---" for _ in header) + "|"]
        for row in report.rows:
            lines.append("| " + " | ".join(_md_escape(c) for c in _cells(row, witness)) + " |")
        return "\n".join(lines) + "\n"
    if fmt == "tsv":
        header = list(HEADER) + (list(EXTRA) if witness else [])
        lines = ["\t".join(header)]
        for row in report.rows:
            lines.append("\t".join(c.replace("\t", " ") for c in _cells(row, witness)))
        return "\n".join(lines) + "\n"
    if fmt == "json":
        doc = {"table": [r.as_dict() for r in report.rows],
               "subcharts": [r.as_dict() for r in report.records]}
        return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"
    raise ValueError(f"unknown format {fmt!r}; choose one of {', '.join(FORMATS)}")


def parse_report(text: str) -> Report:
    """Inverse of ``render(..., "json")``."""
    doc = json.loads(text)
    rows = [ReportRow(r["label"], tuple(r["verdicts"][c] for c in COLUMNS), r["names"], r["witness"])
            for r in doc["table"]]
    records = [SubchartRecord(r["scenario"], r["subchart"], r["orders"], r["names"],
                              tuple(r["verdicts"][c] for c in COLUMNS), r["witness"])
               for r in doc["subcharts"]]
    return Report(rows, records)
