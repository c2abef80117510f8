"""Triangle data model: measurements, signed views, excesses, area, duality.

Conventions
-----------
A triangle has vertices A, B, C; side ``a`` joins B to C, ``b`` joins C to A,
``c`` joins A to B.  The angles at B and C are inner angles, while the angle
stored at A is the *external* one (its supplement with respect to the angular
half-period).  Under this convention the signed measurement lists

    sides  = (-a,  b,  c)      angles = (-A,  B,  C)

make every trigonometric law permutation-symmetric, and the excesses

    side_excess  = -a + b + c      angle_excess = -A + B + C

vanish identically in the flat cases: the angle excess for every triangle of
a geometry with zero curvature label, the side excess for every triangle of
a geometry with zero angular label.

Area carries the label ``k1**2 * k2`` and equals ``angle_excess / k1`` when
``k1 != 0``; coarea carries ``k1 * k2**2`` and equals ``side_excess / k2``
when ``k2 != 0``.  The zero-label branches are the familiar flat formulas.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import FormalOnlyError, RangeError
from .geometry import Geometry
from .trig import quadrant, sin_k

__all__ = [
    "Triangle",
    "SignedTriangle",
    "Excesses",
    "area",
    "coarea",
    "dualize",
    "check_existence",
    "inner_angle",
    "external_angle",
    "FLAT_EXCESS_TOL",
]

#: Relative tolerance used by check_existence for the zero-label excess test.
FLAT_EXCESS_TOL = 1e-10


@dataclass(frozen=True)
class SignedTriangle:
    """Cyclically signed measurements: the first entry of each triple is
    negated so that all triangle laws take a single permutation-invariant
    shape."""

    sides: tuple[float, float, float]
    angles: tuple[float, float, float]


@dataclass(frozen=True)
class Excesses:
    """Excess bookkeeping for one triangle.

    Attributes:
        side_excess: -a + b + c.
        angle_excess: -A + B + C.
        half_side_excess: side_excess / 2; equals semiperimeter - a.
        half_angle_excess: angle_excess / 2.
        semiperimeter: (a + b + c) / 2.
        angle_half_sum: (A + B + C) / 2.
        side_parts: (-p, p - c, p - b) with p the semiperimeter; together
            with half_side_excess = p - a these are the four half-excess
            combinations entering product formulas.
        angle_parts: (-P, P - C, P - B) with P the angle half sum.
    """

    side_excess: float
    angle_excess: float
    half_side_excess: float
    half_angle_excess: float
    semiperimeter: float
    angle_half_sum: float
    side_parts: tuple[float, float, float]
    angle_parts: tuple[float, float, float]


@dataclass(frozen=True)
class Triangle:
    """Measured triangle in a labeled geometry.

    Sides a, b, c are positive separations; B and C are inner angles and A is
    the external angle at the vertex opposite side a.  No existence check is
    performed at construction: use :func:`check_existence`.
    """

    geom: Geometry
    a: float
    b: float
    c: float
    A: float
    B: float
    C: float

    def __post_init__(self) -> None:
        for name in ("a", "b", "c", "A", "B", "C"):
            value = float(getattr(self, name))
            if not math.isfinite(value):
                raise ValueError(f"triangle field {name} must be finite, got {value!r}")
            object.__setattr__(self, name, value)

    def signed(self) -> SignedTriangle:
        """The cyclically signed view (-a, b, c), (-A, B, C)."""
        return SignedTriangle(
            sides=(-self.a, self.b, self.c),
            angles=(-self.A, self.B, self.C),
        )

    def excesses(self) -> Excesses:
        """All excess and half-excess combinations."""
        p = (self.a + self.b + self.c) / 2.0
        big_p = (self.A + self.B + self.C) / 2.0
        delta = -self.a + self.b + self.c
        big_delta = -self.A + self.B + self.C
        return Excesses(
            side_excess=delta,
            angle_excess=big_delta,
            half_side_excess=delta / 2.0,
            half_angle_excess=big_delta / 2.0,
            semiperimeter=p,
            angle_half_sum=big_p,
            side_parts=(-p, p - self.c, p - self.b),
            angle_parts=(-big_p, big_p - self.C, big_p - self.B),
        )

    def to_dict(self) -> dict[str, float]:
        """Flat dict with geometry labels and the six measurements."""
        return {
            "k1": self.geom.k1,
            "k2": self.geom.k2,
            "a": self.a,
            "b": self.b,
            "c": self.c,
            "A": self.A,
            "B": self.B,
            "C": self.C,
        }

    @classmethod
    def from_dict(cls, data: dict[str, float]) -> "Triangle":
        """Inverse of :meth:`to_dict`."""
        return cls(
            geom=Geometry(data["k1"], data["k2"]),
            a=data["a"],
            b=data["b"],
            c=data["c"],
            A=data["A"],
            B=data["B"],
            C=data["C"],
        )

    def area(self) -> float:
        return area(self)

    def coarea(self) -> float:
        return coarea(self)

    def dual(self) -> "Triangle":
        return dualize(self)


def area(t: Triangle) -> float:
    """Triangle area (label k1**2 * k2).

    Equals angle_excess / k1 for k1 != 0.  At k1 = 0 the ratio is replaced
    by its limit sin_k(k2, A) * b * c / 2 — the flat formula with the
    external angle (whose labeled sine equals that of the inner one).
    """
    if t.geom.k1 != 0.0:
        return (-t.A + t.B + t.C) / t.geom.k1
    return sin_k(t.geom.k2, t.A) * t.b * t.c / 2.0


def coarea(t: Triangle) -> float:
    """Triangle coarea (label k1 * k2**2), the dual of the area.

    Equals side_excess / k2 for k2 != 0, with the limit
    sin_k(k1, a) * B * C / 2 at k2 = 0.
    """
    if t.geom.k2 != 0.0:
        return (-t.a + t.b + t.c) / t.geom.k2
    return sin_k(t.geom.k1, t.a) * t.B * t.C / 2.0


def dualize(t: Triangle) -> Triangle:
    """Swap sides with angles and the two labels with each other.

    This is an exact involution (pure relabeling, no arithmetic): sides
    become angles of the dual triangle living in the dual geometry.
    """
    return Triangle(geom=t.geom.dual(), a=t.A, b=t.B, c=t.C, A=t.a, B=t.b, C=t.c)


def _excess_signs_ok(label: float, excess_half: float, part2: float, part3: float,
                     half_sum: float, flat_tol: float) -> bool:
    """Sign rules for one family of measurements against one label."""
    if label > 0.0:
        return excess_half > 0.0 and part2 > 0.0 and part3 > 0.0
    if label < 0.0:
        return excess_half < 0.0
    return abs(excess_half) <= flat_tol * max(1.0, abs(half_sum))


def check_existence(
    geom: Geometry,
    a: float,
    b: float,
    c: float,
    A: float | None = None,
    B: float | None = None,
    C: float | None = None,
    flat_tol: float = FLAT_EXCESS_TOL,
) -> bool:
    """Whether sides (and optionally angles) can bound a first-kind triangle.

    The test is the sign rule on excesses: for a positive angular label the
    half side excess p - a and the combinations p - b, p - c must all be
    positive (the triangle inequality); for a negative angular label the
    half side excess must be negative (the reversed inequality); for a zero
    label the excess must vanish to within ``flat_tol`` relative to the
    semiperimeter.  When angles are supplied the dual rule is applied to
    them against the curvature label.

    Raises:
        RangeError: if the curvature label is positive and some side exceeds
            the quadrant (sides at the quadrant, like the octant triangle,
            pass).
        ValueError: if sides are not all positive, or only some angles are
            given.
    """
    if not (a > 0.0 and b > 0.0 and c > 0.0):
        raise ValueError(f"sides must be positive, got ({a}, {b}, {c})")
    if geom.k1 > 0.0:
        q = quadrant(geom.k1)
        limit = q * (1.0 + 1e-9)
        for name, side in (("a", a), ("b", b), ("c", c)):
            if side > limit:
                raise RangeError(
                    f"side {name} = {side} exceeds the quadrant {q} "
                    f"for curvature label {geom.k1}"
                )

    p = (a + b + c) / 2.0
    sides_ok = _excess_signs_ok(geom.k2, p - a, p - c, p - b, p, flat_tol)

    angles = (A, B, C)
    if all(v is None for v in angles):
        return sides_ok
    if any(v is None for v in angles):
        raise ValueError("give either no angles or all three")
    big_p = (A + B + C) / 2.0
    angles_ok = _excess_signs_ok(geom.k1, big_p - A, big_p - C, big_p - B, big_p, flat_tol)
    return sides_ok and angles_ok


def _angular_half_period(k2: float) -> float:
    if k2 <= 0.0:
        raise FormalOnlyError(
            f"angle supplements need a finite angular period; label {k2} <= 0"
        )
    return math.pi / math.sqrt(k2)


def inner_angle(k2: float, external: float) -> float:
    """Inner angle from its external supplement (positive angular label only).

    Raises:
        FormalOnlyError: if k2 <= 0, where the angular period is infinite or
            imaginary and no real supplement exists.
    """
    return _angular_half_period(k2) - external


def external_angle(k2: float, inner: float) -> float:
    """External supplement of an inner angle (positive angular label only).

    Raises:
        FormalOnlyError: if k2 <= 0.
    """
    return _angular_half_period(k2) - inner
