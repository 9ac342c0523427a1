"""Text, JSON and CSV emitters for result tables.

Exact values are written as ``str(Fraction)`` ("3/4", "-1", "0"), never as
floats. JSON output is canonical: sorted keys, two-space indent, one trailing
newline, so parsing and re-emitting a table gives the same bytes.
"""

from __future__ import annotations

import csv
import io
import json
from collections.abc import Mapping
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any

FORMATS = ("text", "json", "csv")


def to_cell(value: Any) -> Any:
    """A JSON-native rendering of one value."""
    if isinstance(value, Enum):
        return value.value
    if isinstance(value, bool) or value is None or isinstance(value, str):
        return value
    if isinstance(value, (int, Fraction)):
        return str(value)
    if isinstance(value, float):
        return value
    if isinstance(value, complex):
        return {"re": value.real, "im": value.imag}
    if isinstance(value, Mapping):
        return {str(k): to_cell(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_cell(v) for v in value]
    return str(value)


@dataclass
class Table:
    command: str
    params: dict[str, Any]
    columns: list[str]
    rows: list[dict[str, Any]] = field(default_factory=list)

    def add(self, **row: Any) -> None:
        self.rows.append(row)

    def payload(self) -> dict[str, Any]:
        return {
            "command": self.command,
            "params": to_cell(self.params),
            "rows": [{k: to_cell(v) for k, v in row.items()} for row in self.rows],
        }


def dumps_canonical(payload: Mapping[str, Any]) -> str:
    return json.dumps(payload, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def _text_cell(value: Any) -> str:
    cell = to_cell(value)
    if isinstance(cell, dict) and set(cell) == {"re", "im"}:
        return f"{cell['re']!r}{cell['im']:+}j" if cell["im"] else repr(cell["re"])
    if isinstance(cell, (dict, list)):
        return json.dumps(cell, sort_keys=True)
    return str(cell)


def render_text(table: Table) -> str:
    header = [table.columns]
    body = [[_text_cell(row.get(col, "")) for col in table.columns] for row in table.rows]
    widths = [max(len(r[i]) for r in header + body) for i in range(len(table.columns))]
    lines = ["  ".join(cell.ljust(width) for cell, width in zip(r, widths)).rstrip() for r in header + body]
    return "\n".join(lines) + "\n"


def render_csv(table: Table) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(table.columns)
    for row in table.rows:
        writer.writerow([_text_cell(row.get(col, "")) for col in table.columns])
    return buffer.getvalue()


def render(table: Table, fmt: str = "text") -> str:
    if fmt == "json":
        return dumps_canonical(table.payload())
    if fmt == "csv":
        return render_csv(table)
    if fmt == "text":
        return render_text(table)
    raise ValueError(f"Unknown format: {fmt} (choose from {', '.join(FORMATS)})")

