"""Labeled trigonometric functions.

Every function takes a real *label* kappa as its first argument and branches
exactly on its sign:

* ``kappa > 0``  — circular regime: ``cos_k = cos(sqrt(k)*x)``,
  ``sin_k = sin(sqrt(k)*x)/sqrt(k)``;
* ``kappa == 0`` — parabolic regime: ``cos_k = 1``, ``sin_k = x``;
* ``kappa < 0``  — hyperbolic regime with ``cosh``/``sinh`` and ``sqrt(-k)``.

The versed quantity ``versin_k = (1 - cos_k)/kappa`` is computed in the
cancellation-free form ``2*sin_k(k, x/2)**2``, exact for every label
including zero (where it equals ``x**2/2``).

The scaling law ``cos_k(l*l*k, x) == cos_k(k, l*x)`` and
``l*sin_k(l*l*k, x) == sin_k(k, l*x)`` holds for every real ``l`` and is the
mechanism by which area-labeled and coarea-labeled functions stay exact in
the zero-label limits.
"""

from __future__ import annotations

import math

from .errors import ConstraintError, FormalOnlyError, PoleError

__all__ = [
    "cos_k",
    "sin_k",
    "versin_k",
    "tan_k",
    "arc_k",
    "quadrant",
    "DEFAULT_POLE_TOL",
    "DEFAULT_ARC_TOL",
]

#: Absolute tolerance on the cosine below which tangents raise PoleError.
DEFAULT_POLE_TOL = 1e-12

#: Relative tolerance on the defining constraint c**2 + k*s**2 = 1 in arc_k.
DEFAULT_ARC_TOL = 1e-9


def cos_k(kappa: float, x: float) -> float:
    """Labeled cosine of x.

    Past the double range (hyperbolic regime, |x|*sqrt(-kappa) > ~710)
    the value saturates to ``inf``, the IEEE-consistent answer.
    """
    if kappa > 0.0:
        return math.cos(math.sqrt(kappa) * x)
    if kappa < 0.0:
        try:
            return math.cosh(math.sqrt(-kappa) * x)
        except OverflowError:
            return math.inf
    return 1.0


def sin_k(kappa: float, x: float) -> float:
    """Labeled sine of x (has dimensions of a length when x is one).

    Past the double range (hyperbolic regime) the value saturates to
    ``inf`` with the sign of x.
    """
    if kappa > 0.0:
        w = math.sqrt(kappa)
        return math.sin(w * x) / w
    if kappa < 0.0:
        w = math.sqrt(-kappa)
        try:
            return math.sinh(w * x) / w
        except OverflowError:
            return math.copysign(math.inf, x)
    return float(x)


def versin_k(kappa: float, x: float) -> float:
    """Labeled versed sine (1 - cos_k)/kappa, exact at kappa = 0.

    Always non-negative for real arguments; equals x**2/2 at kappa = 0.
    """
    s = sin_k(kappa, 0.5 * x)
    return 2.0 * s * s


def tan_k(kappa: float, x: float, pole_tol: float = DEFAULT_POLE_TOL) -> float:
    """Labeled tangent sin_k/cos_k.

    The hyperbolic branch evaluates as tanh directly (pole-free, and
    finite even where sinh/cosh individually overflow).

    Raises:
        PoleError: when |cos_k(kappa, x)| <= pole_tol.
    """
    if kappa < 0.0:
        w = math.sqrt(-kappa)
        return math.tanh(w * x) / w
    c = cos_k(kappa, x)
    if abs(c) <= pole_tol:
        raise PoleError(f"tangent pole: |cos_k({kappa}, {x})| = {abs(c):.3e} <= {pole_tol:.1e}")
    return sin_k(kappa, x) / c


def quadrant(kappa: float) -> float:
    """Quarter period pi/(2*sqrt(kappa)) of a positive label.

    Returns ``math.inf`` for kappa = 0 (the period diverges) and raises
    FormalOnlyError for kappa < 0 (the quadrant is imaginary).
    """
    if kappa > 0.0:
        return math.pi / (2.0 * math.sqrt(kappa))
    if kappa == 0.0:
        return math.inf
    raise FormalOnlyError(f"quadrant of a negative label {kappa} is not a real number")


def arc_k(kappa: float, c: float, s: float, tol: float = DEFAULT_ARC_TOL) -> float:
    """Inverse lookup: the x with cos_k(kappa, x) = c and sin_k(kappa, x) = s.

    The pair must satisfy c**2 + kappa*s**2 = 1 within ``tol`` (relative to
    the magnitude of the pair), otherwise ConstraintError is raised.  The
    returned branch is principal: for kappa > 0 it lies in
    (-pi/sqrt(kappa), pi/sqrt(kappa)]; for kappa <= 0 the real line.

    For kappa = 0 the cosine value must be 1 and the result is s itself.
    For kappa < 0 the cosine is >= 1 for every real argument, so any c < 1
    beyond tolerance (in particular any negative c) is unreachable.
    """
    scale = max(1.0, c * c, abs(kappa) * s * s)
    defect = abs(c * c + kappa * s * s - 1.0)
    if defect > tol * scale:
        raise ConstraintError(
            f"(c, s) = ({c!r}, {s!r}) violates c^2 + kappa*s^2 = 1 "
            f"for kappa = {kappa} (defect {defect:.3e})"
        )
    if kappa > 0.0:
        w = math.sqrt(kappa)
        return math.atan2(w * s, c) / w
    if kappa < 0.0:
        if c < 0.0:
            raise ConstraintError(
                f"cosine value {c!r} is negative: unreachable for label {kappa} < 0"
            )
        w = math.sqrt(-kappa)
        return math.asinh(w * s) / w
    return float(s)
