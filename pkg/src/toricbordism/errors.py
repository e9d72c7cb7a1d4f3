"""Exception hierarchy shared by the modules and mapped to CLI exit codes."""
from __future__ import annotations

from .geometry.polytope import GeometryError


class InputError(ValueError):
    """Malformed input (exit code 2)."""


class PreconditionError(ValueError):
    """Input is well formed but violates a mathematical precondition (exit code 3)."""

    def __init__(self, message: str, predicate: str | None = None):
        super().__init__(message)
        self.predicate = predicate


class VerificationError(AssertionError):
    """An internal consistency check failed (exit code 4)."""


__all__ = ["GeometryError", "InputError", "PreconditionError", "VerificationError"]
