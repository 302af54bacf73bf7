from __future__ import annotations

import logging
import os
from dataclasses import dataclass

from ..config import CLI


def worker_count(*, env: dict[str, str] | None = None) -> int:
    """Worker cap from HYPERALPHA_THREADS (default: CPU count, bounded by CLI.max_workers)."""
    source = os.environ if env is None else env
    raw = str(source.get(CLI.threads_env, "") or "").strip()
    if raw:
        try:
            value = int(raw)
        except ValueError:
            logging.warning(f"Ignoring {CLI.threads_env}={raw!r}: not an integer")
        else:
            return max(1, value)
    return max(1, min(CLI.max_workers, os.cpu_count() or 1))


@dataclass(frozen=True)
class PipelineContext:
    workers: int

    @classmethod
    def from_env(cls) -> PipelineContext:
        return cls(workers=worker_count())
