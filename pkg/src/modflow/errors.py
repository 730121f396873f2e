"""Exception types shared across the package."""

from __future__ import annotations


class ModflowError(Exception):
    """Base class for all errors raised by modflow."""


class UnknownEdgeError(ModflowError, KeyError):
    def __init__(self, edge):
        super().__init__(edge)
        self.edge = edge

    def __str__(self) -> str:
        return f"unknown edge identity: {self.edge!r}"


class GraphFormatError(ModflowError, ValueError):
    """Malformed graph text; ``lineno`` is 1-based."""

    def __init__(self, message: str, lineno: int | None = None):
        self.lineno = lineno
        prefix = f"line {lineno}: " if lineno is not None else ""
        super().__init__(prefix + message)


class CapExceeded(ModflowError):
    """An exhaustive scan would exceed its configured size cap."""


class InvalidInput(ModflowError, ValueError):
    """Inputs violate an operation's precondition (not a flow, bad forest, infeasible b, ...)."""
