"""Exception types shared across the package.

The split matters for the command line front end: `InputError` (and the
parser's `ExprSyntaxError`) map to exit code 2, `ComputationError`
subclasses map to exit code 3.
"""

from __future__ import annotations


class BlowupError(Exception):
    """Base class for every error raised deliberately by this package."""


class InputError(BlowupError):
    """Malformed user input (bad expression, bad path literal, bad JSON)."""


class ComputationError(BlowupError):
    """A well-posed request that the engine cannot complete."""


class DepthCapError(ComputationError):
    """A search hit its depth cap with work left open."""

    def __init__(self, message: str, open_points=()):
        super().__init__(message)
        self.open_points = tuple(open_points)


class BranchError(ComputationError):
    """Curve following failed: no rational direction, or a split tangent cone."""


class LocateError(ComputationError):
    """Parameter-pair location failed or was ambiguous."""


class ResolveError(ComputationError):
    """Zero/pole resolution cannot return a finite answer."""


class CertificateError(ComputationError):
    """No candidate divisor certifies irredundance; carries per-candidate notes."""

    def __init__(self, message: str, obstructions=()):
        super().__init__(message)
        self.obstructions = tuple(obstructions)


class ComponentError(ComputationError):
    """A closed set has infinitely many irreducible components."""

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness
