"""Triangle solvers: SAS, SSS, AAA and second-kind delegation.

Each solver determines a full triangle from partial data using the minimal
independent equation set for the geometry at hand, then the remaining
quantities follow from matched (cosine-like, sine-like) pairs pushed through
``arc_k`` — never from a sine alone, whose inverse is branch-ambiguous for a
positive angular label.

The closing side in SAS comes from the versine rearrangement of the cosine
law,

    versin_k1(c) = versin_k1(a - b) + k2 * sin_k1(a) * sin_k1(b) * versin_k2(C),

which is cancellation-free, exact at k1 = 0 (where the plain cosine law
degenerates to the trivial identity), and reduces to the familiar
c**2 = a**2 + b**2 - 2ab cos C in the flat case.  For a zero angular label
the sides are linearly related (a = b + c) and the angle plays no part.

SSS inverts the same versine forms for the angle cosines — note the k2
factor cancels, so one expression serves every geometry — and fixes all
sines through the common ratio of the sine law, anchored at the
best-conditioned angle.  AAA is SSS in the dual geometry.
"""

from __future__ import annotations

import math

from .errors import ExistenceError, RangeError, UnderdeterminedError
from .geometry import Geometry
from .triangle import Triangle, _excess_signs_ok
from .trig import arc_k, cos_k, quadrant, sin_k, versin_k

__all__ = [
    "solve_sas",
    "solve_sss",
    "solve_aaa",
    "solve_second_kind",
]

_CLAMP_TOL = 1e-12


def _require_positive(**values: float) -> None:
    for name, value in values.items():
        if not value > 0.0:
            raise ValueError(f"{name} must be positive, got {value!r}")


def _gate_quadrant(k1: float, **sides: float) -> None:
    """Reject input sides beyond the quadrant of a positive curvature label."""
    if k1 <= 0.0:
        return
    q = quadrant(k1)
    limit = q * (1.0 + 1e-9)
    for name, side in sides.items():
        if side > limit:
            raise RangeError(f"side {name} = {side} exceeds the quadrant {q}")


def _sides_exist(g: Geometry, a: float, b: float, c: float) -> bool:
    p = (a + b + c) / 2.0
    return _excess_signs_ok(g.k2, p - a, p - c, p - b, p, 1e-10)


def _sas_angles(g: Geometry, a: float, b: float, c: float, C: float) -> tuple[float, float]:
    """Angles A and B of an SAS triangle whose closing side c is known.

    Both come from projection identities supplying the cosine-like part,
    paired with the sine law for the sine-like part:

        sin1(c) * cos2(A) = sin1(a) cos1(b) cos2(C) - cos1(a) sin1(b)
        sin1(c) * sin2(A) = sin1(a) sin2(C)

    and the same with a and b swapped for B (without the sign flip, since
    only A is external).
    """
    k1, k2 = g.k1, g.k2
    s1a, s1b, s1c = sin_k(k1, a), sin_k(k1, b), sin_k(k1, c)
    c1a, c1b = cos_k(k1, a), cos_k(k1, b)
    c2c, s2c = cos_k(k2, C), sin_k(k2, C)
    angle_a = arc_k(k2, (s1a * c1b * c2c - c1a * s1b) / s1c, s1a * s2c / s1c)
    angle_b = arc_k(k2, (s1a * c1b - s1b * c1a * c2c) / s1c, s1b * s2c / s1c)
    return angle_a, angle_b


def solve_sas(g: Geometry, a: float, b: float, C: float) -> Triangle:
    """Solve from two sides and the inner angle C between them.

    Raises:
        RangeError: an input side exceeds the quadrant (positive curvature
            label only; the side computed as output is not gated).
        ExistenceError: no first-kind triangle closes on these data.
        ValueError: non-positive input, or C at/beyond the straight angle.
    """
    _require_positive(a=a, b=b, C=C)
    if g.k2 > 0.0 and C >= math.pi / math.sqrt(g.k2):
        raise ValueError(f"the inner angle C must stay below the straight angle, got {C}")
    _gate_quadrant(g.k1, a=a, b=b)
    k1, k2 = g.k1, g.k2

    if k2 == 0.0:
        c = a - b
        if c <= 0.0:
            raise ExistenceError(
                f"sides are linearly related at zero angular label: need a > b, got a={a}, b={b}"
            )
    else:
        v1c = versin_k(k1, a - b) + k2 * sin_k(k1, a) * sin_k(k1, b) * versin_k(k2, C)
        scale = max(1.0, versin_k(k1, a - b), abs(k2 * sin_k(k1, a) * sin_k(k1, b)))
        if v1c <= _CLAMP_TOL * scale:
            raise ExistenceError(
                f"closing side is not first-kind for a={a}, b={b}, C={C} in {g.label()}"
            )
        if k1 > 0.0 and v1c >= (2.0 / k1) * (1.0 - 1e-12):
            raise ExistenceError(
                f"closing side degenerates to the polar point for a={a}, b={b}, C={C}"
            )
        half_c2 = max(1.0 - k1 * v1c / 2.0, 0.0)
        c = 2.0 * arc_k(k1, math.sqrt(half_c2), math.sqrt(v1c / 2.0))

    if not _sides_exist(g, a, b, c):
        raise ExistenceError(
            f"sides (a={a}, b={b}, c={c}) violate the existence sign rule in {g.label()}"
        )
    angle_a, angle_b = _sas_angles(g, a, b, c, C)
    return Triangle(geom=g, a=a, b=b, c=c, A=angle_a, B=angle_b, C=C)


def _angle_cosines(g: Geometry, a: float, b: float, c: float) -> tuple[float, float, float]:
    """Angle cosines from sides via the versine-form cosine laws.

    cos2(X) = 1 - (versin1(sum/diff) - versin1(opposite)) / (sin1 * sin1);
    the angular label cancels, so these expressions hold in every geometry
    with k2 != 0.
    """
    k1 = g.k1
    s1a, s1b, s1c = sin_k(k1, a), sin_k(k1, b), sin_k(k1, c)
    cos_a = 1.0 - (versin_k(k1, b + c) - versin_k(k1, a)) / (s1b * s1c)
    cos_b = 1.0 - (versin_k(k1, b) - versin_k(k1, a - c)) / (s1a * s1c)
    cos_c = 1.0 - (versin_k(k1, c) - versin_k(k1, a - b)) / (s1a * s1b)
    return cos_a, cos_b, cos_c


def solve_sss(g: Geometry, a: float, b: float, c: float) -> Triangle:
    """Solve from the three sides.

    Raises:
        ExistenceError: the sides violate the existence sign rule, or some
            angle cosine falls outside its real range.
        UnderdeterminedError: the angular label is zero, where the angles
            are fixed only up to a common factor (carried in
            ``constraint``).
        ValueError: non-positive input.
    """
    _require_positive(a=a, b=b, c=c)
    k1, k2 = g.k1, g.k2
    if not _sides_exist(g, a, b, c):
        raise ExistenceError(
            f"sides (a={a}, b={b}, c={c}) violate the existence sign rule in {g.label()}"
        )
    if k2 == 0.0:
        s1a, s1b, s1c = sin_k(k1, a), sin_k(k1, b), sin_k(k1, c)
        raise UnderdeterminedError(
            "zero angular label: the angles are determined only up to a common factor",
            constraint=(
                f"A : B : C = {s1a!r} : {s1b!r} : {s1c!r} (one free positive scale; "
                "equivalently A = B + C with the sine-law ratios fixed)"
            ),
        )

    cos_a, cos_b, cos_c = _angle_cosines(g, a, b, c)
    cosines = [cos_a, cos_b, cos_c]
    for i, value in enumerate(cosines):
        if k2 > 0.0:
            if abs(value) > 1.0 + _CLAMP_TOL:
                raise ExistenceError(
                    f"no real angle solves the cosine law (cosine {value!r}) "
                    f"for sides ({a}, {b}, {c}) in {g.label()}"
                )
            cosines[i] = max(-1.0, min(1.0, value))
        else:
            if value < 1.0 - _CLAMP_TOL:
                raise ExistenceError(
                    f"no real angle solves the cosine law (cosine {value!r}) "
                    f"for sides ({a}, {b}, {c}) in {g.label()}"
                )
            cosines[i] = max(1.0, value)
    cos_a, cos_b, cos_c = cosines

    # Sines through the sine-law ratio, anchored at the best-conditioned angle.
    sines2 = [(1.0 - v * v) / k2 for v in cosines]
    opposite = [sin_k(k1, a), sin_k(k1, b), sin_k(k1, c)]
    anchor = max(range(3), key=lambda i: abs(1.0 - cosines[i] * cosines[i]))
    rho = math.sqrt(max(sines2[anchor], 0.0)) / opposite[anchor]
    angle_a = arc_k(k2, cos_a, rho * opposite[0])
    angle_b = arc_k(k2, cos_b, rho * opposite[1])
    angle_c = arc_k(k2, cos_c, rho * opposite[2])
    return Triangle(geom=g, a=a, b=b, c=c, A=angle_a, B=angle_b, C=angle_c)


def solve_aaa(g: Geometry, A: float, B: float, C: float) -> Triangle:
    """Solve from the three angles: the side problem of the dual geometry.

    Raises:
        UnderdeterminedError: the curvature label is zero, where similar
            triangles exist at every scale (``constraint`` carries the fixed
            ratios).
        ExistenceError: the angles violate the dual existence sign rule.
        ValueError: non-positive input.
    """
    _require_positive(A=A, B=B, C=C)
    if g.k1 == 0.0:
        k2 = g.k2
        s2a, s2b, s2c = sin_k(k2, A), sin_k(k2, B), sin_k(k2, C)
        raise UnderdeterminedError(
            "zero curvature label: the sides are determined only up to a common factor",
            constraint=(
                f"a : b : c = {s2a!r} : {s2b!r} : {s2c!r} (one free positive scale)"
            ),
        )
    return solve_sss(g.dual(), A, B, C).dual()


def solve_second_kind(g: Geometry, mode: str, **data: float) -> Triangle:
    """Solve a second-kind triangle: sides measured along second-kind lines.

    Such measurements satisfy the first-kind relations of the geometry with
    curvature label k1*k2 and unchanged angular label, so this delegates
    wholesale: the returned triangle is tagged with that effective geometry,
    in which all its relations hold.  For k2 > 0 the effective geometry is
    the original one and the result is identical to the first-kind solver's.

    Args:
        mode: "sas" (keys a, b, C), "sss" (keys a, b, c) or
            "aaa" (keys A, B, C).
    """
    eff = Geometry(g.k12, g.k2)
    if mode == "sas":
        return solve_sas(eff, data["a"], data["b"], data["C"])
    if mode == "sss":
        return solve_sss(eff, data["a"], data["b"], data["c"])
    if mode == "aaa":
        return solve_aaa(eff, data["A"], data["B"], data["C"])
    raise ValueError(f"unknown mode {mode!r}: expected 'sas', 'sss' or 'aaa'")
