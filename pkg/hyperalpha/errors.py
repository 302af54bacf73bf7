from __future__ import annotations

from typing import TYPE_CHECKING

if TYPE_CHECKING:  # pragma: no cover
    from .spectral import SpectralResult


class HyperalphaError(ValueError):
    """Base class for every error raised by the library (CLI exit code 2)."""


class EdgeWrongArity(HyperalphaError):
    pass


class VertexOutOfRange(HyperalphaError):
    pass


class DuplicateEdge(HyperalphaError):
    pass


class InvalidDimensions(HyperalphaError):
    pass


class InfeasibleRequest(HyperalphaError):
    pass


class ArityMismatch(HyperalphaError):
    pass


class DimensionMismatch(HyperalphaError):
    pass


class ZeroVector(HyperalphaError):
    pass


class NotConnected(HyperalphaError):
    pass


class PreconditionViolated(HyperalphaError):
    pass


class KTooSmall(PreconditionViolated):
    pass


class TooLarge(HyperalphaError):
    pass


class NoCutExists(HyperalphaError):
    pass


class NoConvergence(HyperalphaError):
    def __init__(self, message: str, *, result: SpectralResult | None = None) -> None:
        super().__init__(message)
        self.result = result


class ParseError(HyperalphaError):
    def __init__(self, message: str, *, line: int | None = None) -> None:
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(prefix + message)
        self.line = line
