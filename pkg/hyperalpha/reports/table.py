from __future__ import annotations

import math
from typing import Any, Iterable, Sequence

import pandas as pd


def to_cell(value: Any) -> str:
    """
    Convert a report value into a table cell.

    - None/nan -> ""
    - bool -> ✓/✗
    - float -> 10 significant digits
    - list -> comma-joined, dict -> key=value pairs
    """
    if value is None:
        return ""
    if isinstance(value, bool):
        return "✓" if value else "✗"
    if isinstance(value, float):
        if math.isnan(value):
            return ""
        return f"{value:.10g}"
    if isinstance(value, dict):
        return ", ".join(f"{k}={to_cell(v)}" for k, v in value.items())
    if isinstance(value, (list, tuple)):
        return ", ".join(to_cell(v) for v in value)
    return str(value)


def render_table(rows: Iterable[dict[str, Any]], columns: Sequence[str]) -> str:
    frame = pd.DataFrame(
        [[to_cell(row.get(c)) for c in columns] for row in rows],
        columns=list(columns),
    )
    if frame.empty:
        return "(no rows)"
    return frame.to_string(index=False)
