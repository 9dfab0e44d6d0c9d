"""Exception hierarchy for :mod:`pvi_algebra`."""

from __future__ import annotations

from typing import Any, Optional


class PVIError(ValueError):
    """Base class for invalid input and failed exact checks."""


class ConductorBoundError(PVIError):
    """A cyclotomic value would need a conductor above the configured bound."""

    def __init__(self, conductor: int, bound: int):
        super().__init__(f"Conductor {conductor} exceeds the configured bound {bound}")
        self.conductor = conductor
        self.bound = bound


class NotRealError(PVIError):
    """A cyclotomic value is not fixed by complex conjugation."""


class NotOnSurfaceError(PVIError):
    """A point does not satisfy the cubic equation of its surface."""

    def __init__(self, message: str, residual: Optional[Any] = None):
        super().__init__(message)
        self.residual = residual


class SquareRootError(PVIError):
    """A square root is not available as a real cyclotomic number."""


class UnreducedWordError(PVIError):
    """A word repeats a letter in consecutive positions or uses a bad letter."""


class KappaConstraintError(PVIError):
    """A parameter vector violates ``2*k0 + k1 + k2 + k3 + k4 = 1``."""


class InvertibilityError(PVIError):
    """A linear system was requested outside its guaranteed invertible range."""


class IdentityViolationError(PVIError):
    """An exact identity that must hold did not."""


class IterationGuardError(PVIError):
    """A reduction loop ran past its step limit."""


class CatalogError(PVIError):
    """A solution catalog is malformed or missing an entry."""


class ConfigError(PVIError):
    """Invalid run configuration."""


__all__ = [
    "CatalogError",
    "ConductorBoundError",
    "ConfigError",
    "IdentityViolationError",
    "InvertibilityError",
    "IterationGuardError",
    "KappaConstraintError",
    "NotOnSurfaceError",
    "NotRealError",
    "PVIError",
    "SquareRootError",
    "UnreducedWordError",
]
