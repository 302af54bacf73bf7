from __future__ import annotations

import json
import logging
import math
from pathlib import Path
from typing import Any

import numpy as np

from ..schema import SCHEMA_VERSION


def _clean(value: Any) -> Any:
    if isinstance(value, np.generic):
        value = value.item()
    # JSON has no inf/nan; unconverged brackets can carry them.
    if isinstance(value, float) and not math.isfinite(value):
        return None
    if isinstance(value, dict):
        return {str(k): _clean(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_clean(v) for v in value]
    return value


def report_payload(kind: str, body: dict[str, Any]) -> dict[str, Any]:
    """Top-level report object: schema and kind first, then the body keys in order."""
    payload: dict[str, Any] = {"schema": SCHEMA_VERSION, "kind": kind}
    payload.update(body)
    return _clean(payload)


def to_json_text(payload: dict[str, Any]) -> str:
    """Canonical text: fixed key order, two-space indent, trailing newline."""
    return json.dumps(payload, ensure_ascii=False, indent=2, allow_nan=False) + "\n"


def write_json(payload: dict[str, Any], path: Path) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(to_json_text(payload), encoding="utf-8")
    logging.info(f"✔ JSON written: {path}")


def load_json_strict(path: Path) -> dict[str, Any]:
    """Load a report written by `write_json`, failing on a foreign or missing schema key."""
    try:
        obj = json.loads(path.read_text(encoding="utf-8"))
    except Exception as e:
        raise ValueError(f"Invalid JSON in {path}: {e}") from e
    if not isinstance(obj, dict):
        raise ValueError(f"Invalid report in {path}: expected an object")
    if obj.get("schema") != SCHEMA_VERSION:
        raise ValueError(f"Unsupported report schema {obj.get('schema')!r} in {path}")
    return obj
