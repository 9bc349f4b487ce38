"""Exception types shared by the package.

Every error that concerns a specific simplex, frame, pole or vertex carries a
list of :class:`Issue` records so callers (and the CLI) can report the exact
offending indices.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


@dataclass(frozen=True)
class Issue:
    """One violated invariant, e.g. ``Issue("NonGeneric", {"slab": 3, "triangle": 7})``."""

    code: str
    detail: dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> dict[str, Any]:
        return {"code": self.code, **self.detail}


class AwinError(Exception):
    """Base class for all errors raised by :mod:`awin`."""

    code = "AwinError"

    def __init__(self, message: str, issues: list[Issue] | None = None):
        super().__init__(message)
        self.issues = list(issues or [])

    def to_dict(self) -> dict[str, Any]:
        return {
            "error": self.code,
            "message": str(self),
            "issues": [issue.to_dict() for issue in self.issues],
        }


class ValidationError(AwinError):
    """Input is well formed but violates a geometric or structural invariant."""

    code = "ValidationError"

    def __init__(self, message: str, issues: list[Issue] | None = None, code: str | None = None):
        super().__init__(message, issues)
        if code is not None:
            self.code = code
        elif self.issues:
            self.code = self.issues[0].code


class GenericityError(ValidationError):
    """The marked point is not a regular value of the track (or hits an endpoint frame)."""

    code = "NonGeneric"


class PointOnCurveError(ValidationError):
    code = "PointOnCurve"


class PoleOnContourError(ValidationError):
    code = "PoleOnContour"


class NoGenericSampleFound(AwinError):
    code = "NoGenericSampleFound"


class QuadratureNotConverged(AwinError):
    code = "QuadratureNotConverged"


class DocumentError(AwinError):
    """A JSON document could not be parsed into a domain value."""

    code = "MalformedInput"
