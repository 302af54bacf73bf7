from __future__ import annotations

import json
import math
from pathlib import Path

import pytest


def test_payload_puts_schema_and_kind_first_and_drops_non_finite() -> None:
    from hyperalpha import schema
    from hyperalpha.reports.json_render import report_payload, to_json_text

    payload = report_payload(
        schema.KIND_SPECTRAL, {"rho": 1.5, "lower": -math.inf, "nested": [{"x": math.nan}]}
    )
    assert list(payload)[:2] == ["schema", "kind"]
    assert payload["lower"] is None
    assert payload["nested"][0]["x"] is None
    text = to_json_text(payload)
    assert text.endswith("}\n")
    assert json.loads(text)["rho"] == 1.5


def test_write_and_strict_load(tmp_path: Path) -> None:
    from hyperalpha import schema
    from hyperalpha.reports.json_render import load_json_strict, report_payload, write_json

    p = tmp_path / "out" / "report.json"
    write_json(report_payload(schema.KIND_INFO, {"n": 4}), p)
    assert load_json_strict(p)["n"] == 4

    foreign = tmp_path / "foreign.json"
    foreign.write_text('{"schema": "other/9"}', encoding="utf-8")
    with pytest.raises(ValueError):
        load_json_strict(foreign)
    broken = tmp_path / "broken.json"
    broken.write_text("{", encoding="utf-8")
    with pytest.raises(ValueError):
        load_json_strict(broken)


def test_table_cells() -> None:
    from hyperalpha.reports.table import to_cell

    assert to_cell(None) == ""
    assert to_cell(True) == "✓"
    assert to_cell(False) == "✗"
    assert to_cell(math.nan) == ""
    assert to_cell(1 / 3) == "0.3333333333"
    assert to_cell([3, 4]) == "3, 4"
    assert to_cell({"s": 2, "c": 1}) == "s=2, c=1"
    assert to_cell(7) == "7"


def test_render_table() -> None:
    from hyperalpha.reports.table import render_table

    text = render_table([{"bound": "subset", "value": 1.5, "extra": 1}], ("bound", "value"))
    lines = text.splitlines()
    assert lines[0].split() == ["bound", "value"]
    assert lines[1].split() == ["subset", "1.5"]
    assert render_table([], ("bound",)) == "(no rows)"
