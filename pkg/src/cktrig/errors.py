"""Exception hierarchy for the cktrig package.

All domain errors derive from :class:`CKTrigError` so callers can catch the
whole family with one clause while still being able to branch on the precise
failure mode (pole hit, constraint violation, non-existent triangle, ...).
"""

from __future__ import annotations

__all__ = [
    "CKTrigError",
    "PoleError",
    "ConstraintError",
    "FormalOnlyError",
    "DegenerateError",
    "KindError",
    "ExistenceError",
    "RangeError",
    "UnderdeterminedError",
    "InconsistentError",
    "UnknownIdentityError",
    "ExtractionError",
]


class CKTrigError(Exception):
    """Base class for all domain errors raised by this package."""


class PoleError(CKTrigError):
    """A tangent-like quantity was evaluated at (or too close to) a pole.

    Raised when the cosine in a denominator falls below the pole tolerance.
    """


class ConstraintError(CKTrigError):
    """Input values violate an exact algebraic constraint.

    Example: the pair (c, s) handed to an inverse trigonometric lookup does
    not satisfy c**2 + kappa*s**2 = 1 within tolerance, or lies on a branch
    that no real argument can reach.
    """


class FormalOnlyError(CKTrigError):
    """The requested quantity exists only formally (it is not a real number).

    Example: the quadrant of a negative label is imaginary.
    """


class DegenerateError(CKTrigError):
    """The configuration collapses (collinear points, zero side, antipodes)."""


class KindError(CKTrigError):
    """A quantity of the wrong kind was encountered.

    Example: a separation between points that is second-kind where a
    first-kind one is required, or a kinematic operation in a geometry
    whose angle label has the wrong sign.
    """


class ExistenceError(CKTrigError):
    """No triangle with the requested data exists in this geometry."""


class RangeError(CKTrigError):
    """A length or angle lies outside the admissible principal range."""


class UnderdeterminedError(CKTrigError):
    """The data does not pin the unknowns; a constraint family survives.

    The surviving constraint is carried in :attr:`constraint` so callers can
    re-pose the problem.
    """

    def __init__(self, message: str, constraint: str | None = None):
        super().__init__(message)
        self.constraint = constraint


class InconsistentError(CKTrigError):
    """The known values contradict an invariant of the configuration."""


class UnknownIdentityError(CKTrigError):
    """The requested identity id is not registered."""


class ExtractionError(CKTrigError):
    """A matrix that should lie in a one-parameter subgroup does not."""
