"""
Émission des rapports de vérification: lignes JSON ou tableau aligné.
"""

import json
import sys
from enum import Enum
from typing import Iterable, Optional, TextIO

from src.lab.models import CheckReport


class ReportFormat(str, Enum):
    JSON = "json"
    TABLE = "table"


def _sorted(reports: Iterable[CheckReport]) -> list[CheckReport]:
    return sorted(reports, key=lambda r: (r.fingerprint, r.check))


def report_lines(reports: Iterable[CheckReport]) -> list[str]:
    """Une ligne JSON par rapport, clés triées, rapports triés par empreinte."""
    return [json.dumps(r.to_json(), sort_keys=True, ensure_ascii=False) for r in _sorted(reports)]


def _compact(quantities: dict) -> str:
    parts = []
    for key in sorted(quantities):
        value = quantities[key]
        if isinstance(value, (list, dict)):
            continue
        parts.append(f"{key}={value}")
    return " ".join(parts)


def report_table(reports: Iterable[CheckReport]) -> list[str]:
    """Tableau lisible: vérification, empreinte, verdict, grandeurs scalaires."""
    body = [(r.check, r.fingerprint, r.verdict.value, _compact(r.quantities)) for r in _sorted(reports)]
    if not body:
        return []
    rows = [("CHECK", "FINGERPRINT", "VERDICT", "QUANTITIES"), *body]
    widths = [max(len(row[i]) for row in rows) for i in range(3)]
    return [
        "  ".join(cell.ljust(width) for cell, width in zip(row[:3], widths)) + "  " + row[3]
        for row in rows
    ]


def emit_report(
    reports: Iterable[CheckReport],
    fmt: ReportFormat | str = ReportFormat.JSON,
    stream: Optional[TextIO] = None,
) -> int:
    """
    Écrit les rapports sur `stream` (stdout par défaut).

    Returns:
        Nombre de rapports écrits
    """
    stream = stream or sys.stdout
    reports = list(reports)
    lines = report_lines(reports) if ReportFormat(fmt) == ReportFormat.JSON else report_table(reports)
    for line in lines:
        stream.write(line.rstrip() + "\n")
    return len(reports)
