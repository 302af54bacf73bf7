from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Any

import yaml

from ..schema import ALL_SUITES


@dataclass(frozen=True)
class CampaignFile:
    """
    Verify campaign settings read from YAML (version 1). Keys left out of the file are None
    and fall back to command-line flags or `config.VERIFY`.
    """

    seed: int | None = None
    trials: int | None = None
    n_range: tuple[int, int] | None = None
    m_range: tuple[int, int] | None = None
    ks: tuple[int, ...] | None = None
    alphas: tuple[float, ...] | None = None
    suites: tuple[str, ...] | None = None
    soundness_tol: float | None = None
    improvement_tol: float | None = None
    product_tol: float | None = None


_KNOWN_KEYS = {"version", "seed", "trials", "n", "m", "k", "alphas", "suites", "tolerances"}
_TOLERANCE_KEYS = {"soundness", "improvement", "product"}


def _int(value: Any, key: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ValueError(f"campaign['{key}'] must be an integer")
    return value


def _float(value: Any, key: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ValueError(f"campaign['{key}'] must be a number")
    return float(value)


def _int_list(value: Any, key: str) -> tuple[int, ...]:
    items = value if isinstance(value, list) else [value]
    return tuple(_int(v, key) for v in items)


def _range(value: Any, key: str) -> tuple[int, int]:
    items = _int_list(value, key)
    if len(items) == 1:
        return items[0], items[0]
    if len(items) == 2 and items[0] <= items[1]:
        return items[0], items[1]
    raise ValueError(f"campaign['{key}'] must be an integer or a [min, max] pair")


def load_campaign(path: str | Path) -> CampaignFile:
    p = Path(path)
    if not p.exists():
        raise FileNotFoundError(str(p))
    data = yaml.safe_load(p.read_text(encoding="utf-8")) or {}
    if not isinstance(data, dict):
        raise ValueError("verify campaign must be a YAML mapping")

    version = int(data.get("version") or 0)
    if version != 1:
        raise ValueError(
            f"Unsupported verify campaign version={version} in {p}. Expected version: 1"
        )

    unknown = sorted(set(map(str, data)) - _KNOWN_KEYS)
    if unknown:
        raise ValueError(f"Unknown verify campaign keys in {p}: {', '.join(unknown)}")

    n_range = _range(data["n"], "n") if "n" in data else None
    m_range = _range(data["m"], "m") if "m" in data else None

    suites: tuple[str, ...] | None = None
    if "suites" in data:
        raw = data["suites"]
        if not isinstance(raw, list) or not raw:
            raise ValueError("campaign['suites'] must be a non-empty list")
        suites = tuple(str(s).strip() for s in raw)
        bad = [s for s in suites if s not in ALL_SUITES]
        if bad:
            raise ValueError(f"Unknown suites {bad}; expected a subset of {list(ALL_SUITES)}")

    tolerances = data.get("tolerances") or {}
    if not isinstance(tolerances, dict):
        raise ValueError("campaign['tolerances'] must be a mapping")
    extra = sorted(set(map(str, tolerances)) - _TOLERANCE_KEYS)
    if extra:
        raise ValueError(f"Unknown tolerance keys: {', '.join(extra)}")

    def tol(name: str) -> float | None:
        if name not in tolerances:
            return None
        value = _float(tolerances[name], f"tolerances.{name}")
        if value <= 0:
            raise ValueError(f"campaign['tolerances.{name}'] must be positive")
        return value

    alphas: tuple[float, ...] | None = None
    if "alphas" in data:
        raw = data["alphas"] if isinstance(data["alphas"], list) else [data["alphas"]]
        alphas = tuple(_float(a, "alphas") for a in raw)
        if any(a < 0.0 or a >= 1.0 for a in alphas):
            raise ValueError("campaign['alphas'] entries must satisfy 0 <= alpha < 1")

    return CampaignFile(
        seed=_int(data["seed"], "seed") if "seed" in data else None,
        trials=_int(data["trials"], "trials") if "trials" in data else None,
        n_range=n_range,
        m_range=m_range,
        ks=_int_list(data["k"], "k") if "k" in data else None,
        alphas=alphas,
        suites=suites,
        soundness_tol=tol("soundness"),
        improvement_tol=tol("improvement"),
        product_tol=tol("product"),
    )
