"""Matrix realization of the motion group and point-level operations.

Points live in Weierstrass coordinates (x0, x1, x2) on the quadric

    x0**2 + k1*x1**2 + k1*k2*x2**2 = 1

with origin O = (1, 0, 0).  The motion group is generated by three
one-parameter families, each built from its closed form (no generic matrix
exponential):

* ``exp_p1``  — translation along the first axis, label k1;
* ``exp_p2``  — translation along the second axis, label k1*k2;
* ``exp_j12`` — rotation about the origin, label k2.

Every generator matrix M satisfies M.T @ L @ M = L with L = diag(1, k1, k1*k2).

Triangles follow the conventions of :mod:`cktrig.triangle`: vertex C at the
origin, B down the first axis at parameter a, A at rotation C then
translation b.  ``measure_triangle`` inverts that construction for arbitrary
vertex positions and ``make_triangle_sas`` composes the two, which makes it
the generator-of-record for all verification suites.
"""

from __future__ import annotations

import math

import numpy as np

from .errors import ConstraintError, DegenerateError, ExistenceError, KindError
from .geometry import Geometry
from .triangle import Triangle
from .trig import arc_k, cos_k, sin_k

__all__ = [
    "GroupElement",
    "Point",
    "origin",
    "point_from_polar",
    "polar_coordinates",
    "transport_to_origin",
    "exp_p1",
    "exp_p2",
    "exp_j12",
    "is_isometry",
    "apply",
    "distance",
    "measure_triangle",
    "make_triangle_sas",
    "DEFAULT_ISOMETRY_TOL",
    "SEPARATION_TOL",
]

GroupElement = np.ndarray
Point = np.ndarray

#: Default absolute tolerance for the invariance defect M.T L M - L,
#: scaled by the squared magnitude of the largest matrix entry.
DEFAULT_ISOMETRY_TOL = 1e-10

#: Relative tolerance classifying squared sines of separations around zero.
SEPARATION_TOL = 1e-12

#: Below this angle at a vertex the three points count as collinear.
COLLINEAR_TOL = 1e-12

_MIRROR_X1 = np.diag([1.0, -1.0, 1.0])


def origin() -> Point:
    """The base point O = (1, 0, 0)."""
    return np.array([1.0, 0.0, 0.0])


def _axis_translation(label: float, amount: float, slot: int) -> GroupElement:
    """Rotation-like block acting on coordinates (0, slot) with the label."""
    c = cos_k(label, amount)
    s = sin_k(label, amount)
    m = np.eye(3)
    m[0, 0] = c
    m[0, slot] = -label * s
    m[slot, 0] = s
    m[slot, slot] = c
    return m


def _rotation(k2: float, gamma: float) -> GroupElement:
    c = cos_k(k2, gamma)
    s = sin_k(k2, gamma)
    m = np.eye(3)
    m[1, 1] = c
    m[1, 2] = -k2 * s
    m[2, 1] = s
    m[2, 2] = c
    return m


def exp_p1(g: Geometry, alpha: float) -> GroupElement:
    """Translation by alpha along the first axis (label k1)."""
    return _axis_translation(g.k1, alpha, 1)


def exp_p2(g: Geometry, beta: float) -> GroupElement:
    """Translation by beta along the second axis (label k1*k2)."""
    return _axis_translation(g.k12, beta, 2)


def exp_j12(g: Geometry, gamma: float) -> GroupElement:
    """Rotation by gamma about the origin (label k2)."""
    return _rotation(g.k2, gamma)


def is_isometry(g: Geometry, M: GroupElement, tol: float = DEFAULT_ISOMETRY_TOL) -> bool:
    """Whether M preserves the bilinear form diag(1, k1, k1*k2).

    The defect max|M.T L M - L| is compared against ``tol`` scaled by
    max(1, |M|_max**2), since the defect is quadratic in the entries.
    Matrices with non-finite entries are never isometries.
    """
    m = np.asarray(M, dtype=float)
    if not np.isfinite(m).all():
        return False
    lam = g.metric()
    defect = m.T @ lam @ m - lam
    scale = max(1.0, float(np.abs(m).max()) ** 2)
    worst = float(np.abs(defect).max())
    return math.isfinite(worst) and worst <= tol * scale


def apply(M: GroupElement, p: Point) -> Point:
    """Act on a point: the plain matrix-vector product."""
    return np.asarray(M, dtype=float) @ np.asarray(p, dtype=float)


def point_from_polar(g: Geometry, r: float, chi: float) -> Point:
    """Point at separation r from the origin in direction chi."""
    s = sin_k(g.k1, r)
    return np.array([cos_k(g.k1, r), s * cos_k(g.k2, chi), s * sin_k(g.k2, chi)])


def polar_coordinates(g: Geometry, p: Point, tol: float = SEPARATION_TOL) -> tuple[float, float]:
    """Invert :func:`point_from_polar`: the (r, chi) with
    exp_j12(chi) @ exp_p1(r) @ O equal to p.

    For a non-positive angular label the rotation orbit cannot cross the
    x1 = 0 plane, so points in the backward wedge get a *negative* r (the
    direction chi then points at their mirror image).

    Raises:
        KindError: if p is second-kind-displaced from the origin
            (squared sine of the separation negative).
        DegenerateError: if p lies on the sheet unreachable from the origin,
            or on the axis with no recoverable direction.
    """
    p0, p1, p2 = (float(v) for v in p)
    k1, k2 = g.k1, g.k2
    r2 = p1 * p1 + k2 * p2 * p2
    scale = max(1.0, p1 * p1, abs(k2) * p2 * p2)
    if r2 < -tol * scale:
        raise KindError(
            f"point {p!r} is second-kind-displaced from the origin (sine^2 = {r2:.3e})"
        )
    if k1 <= 0.0 and p0 < 0.0:
        raise DegenerateError(f"point {p!r} lies on the sheet unreachable from the origin")
    r2 = max(r2, 0.0)
    if r2 <= (tol * tol) * scale:
        if abs(p0 - 1.0) <= 1e-9 * max(1.0, abs(p0)):
            return 0.0, 0.0
        if k1 > 0.0:
            # Opposite pole: every direction works, pick the fiducial one.
            return arc_k(k1, max(-1.0, min(1.0, p0)), 0.0), 0.0
        raise DegenerateError(f"point {p!r} has no polar direction")
    s1 = math.sqrt(r2)
    sigma = 1.0 if (k2 > 0.0 or p1 > 0.0) else -1.0
    # Classification (kind, sheet, axis) already happened above; points built
    # from products of group matrices sit off the quadric by O(|M|^2 eps),
    # which no fixed tolerance bounds, so the readout inversions skip the
    # consistency re-check and project instead.
    r = arc_k(k1, p0, sigma * s1, tol=math.inf)
    chi = arc_k(k2, p1 / (sigma * s1), p2 / (sigma * s1), tol=math.inf)
    return r, chi


def transport_to_origin(g: Geometry, p: Point) -> GroupElement:
    """A group element moving p to the origin (inverse polar construction)."""
    r, chi = polar_coordinates(g, p)
    return _axis_translation(g.k1, -r, 1) @ _rotation(g.k2, -chi)


def _flat_separation(g: Geometry, u: Point, v: Point, tol: float) -> float:
    """Separation for k1 = 0, where translations act affinely on (x1, x2)."""
    u0, v0 = float(u[0]), float(v[0])
    if u0 < 0.0 and v0 < 0.0:
        u, v = -np.asarray(u, dtype=float), -np.asarray(v, dtype=float)
    elif u0 < 0.0 or v0 < 0.0:
        raise DegenerateError("points lie on opposite sheets")
    d1 = float(v[1]) - float(u[1])
    d2 = float(v[2]) - float(u[2])
    r2 = d1 * d1 + g.k2 * d2 * d2
    scale = max(1.0, d1 * d1, abs(g.k2) * d2 * d2)
    if r2 < -tol * scale:
        raise DegenerateError(f"second-kind separation (sine^2 = {r2:.3e})")
    return math.sqrt(max(r2, 0.0))


def _bilinear_separation(g: Geometry, u: Point, v: Point) -> float:
    """Separation for k1 != 0 read from the invariant u.T L v = cos_k(k1, d)."""
    lam = g.metric()
    c = float(np.asarray(u, dtype=float) @ lam @ np.asarray(v, dtype=float))
    if g.k1 > 0.0:
        c = max(-1.0, min(1.0, c))
        s2 = (1.0 - c * c) / g.k1
    else:
        if c < 1.0:
            if c < 1.0 - 1e-9:
                raise DegenerateError(
                    f"no first-kind geodesic joins the points (invariant {c!r} < 1)"
                )
            c = 1.0
        s2 = (c * c - 1.0) / (-g.k1)
    return arc_k(g.k1, c, math.sqrt(max(s2, 0.0)), tol=1e-6)


def distance(g: Geometry, u: Point, v: Point, tol: float = SEPARATION_TOL) -> float:
    """First-kind separation between two points of the quadric.

    Computed by moving u to the origin with a group element and reading the
    polar radius of the image of v; when u itself has no polar decomposition
    the invariant u.T L v (equal to cos_k(k1, d) for k1 != 0) is used
    instead.

    Raises:
        DegenerateError: if no first-kind geodesic joins the points
            (second-kind-separated pair, opposite sheets).
    """
    if g.k1 == 0.0:
        return _flat_separation(g, u, v, tol)
    try:
        M = transport_to_origin(g, u)
    except (KindError, DegenerateError):
        return _bilinear_separation(g, u, v)
    w = M @ np.asarray(v, dtype=float)
    w0, w1, w2 = float(w[0]), float(w[1]), float(w[2])
    r2 = w1 * w1 + g.k2 * w2 * w2
    scale = max(1.0, w1 * w1, abs(g.k2) * w2 * w2)
    if r2 < -tol * scale:
        raise DegenerateError(f"second-kind separation (sine^2 = {r2:.3e})")
    if g.k1 < 0.0 and w0 < 0.0:
        raise DegenerateError("points lie on opposite sheets")
    # The transported coordinates carry rounding noise that grows with the
    # transport magnitude; classification happened above, so the inversion
    # skips the consistency re-check and projects.
    return arc_k(g.k1, w0, math.sqrt(max(r2, 0.0)), tol=math.inf)


def measure_triangle(g: Geometry, Cv: Point, Av: Point, Bv: Point) -> Triangle:
    """Measure the six triangle quantities from three vertex positions.

    The vertices are canonicalized: C is moved to the origin, B onto the
    forward first axis (mirroring across the axes if needed — mirrors
    preserve all separations and unsigned angles).  Sides a = CB and b = CA
    and the inner angle C then fall out of polar coordinates, and the
    remaining side and angles come from the closure matrix

        K = exp_p1(-b) @ exp_j12(-C) @ exp_p1(a),

    which the triangle loop identity equates with
    exp_j12(-A) @ exp_p1(c) @ exp_j12(B): its first column carries c and the
    external angle A, and peeling those two factors off leaves exp_j12(B).

    Raises:
        DegenerateError: coincident or collinear vertices.
        KindError: some side is not first-kind, or the loop cannot close in
            the conventional orientation.
    """
    k1, k2 = g.k1, g.k2
    G1 = transport_to_origin(g, Cv)
    B1 = G1 @ np.asarray(Bv, dtype=float)
    A1 = G1 @ np.asarray(Av, dtype=float)

    r_b, chi_b = polar_coordinates(g, B1)
    if r_b == 0.0:
        raise DegenerateError("vertices B and C coincide")
    A2 = _rotation(k2, -chi_b) @ A1
    a = abs(r_b)
    if r_b < 0.0:
        A2 = _MIRROR_X1 @ A2

    r_a, chi_a = polar_coordinates(g, A2)
    if r_a == 0.0:
        raise DegenerateError("vertices A and C coincide")
    if r_a < 0.0:
        raise KindError(
            "the angle at C is not a first-kind rotation (vertex A in the backward wedge)"
        )
    b = r_a
    angle_c = abs(chi_a)
    if angle_c <= COLLINEAR_TOL:
        raise DegenerateError("collinear vertices (zero angle at C)")
    if k2 > 0.0 and abs(angle_c - math.pi / math.sqrt(k2)) <= COLLINEAR_TOL:
        raise DegenerateError("collinear vertices (straight angle at C)")

    K = _axis_translation(k1, -b, 1) @ _rotation(k2, -angle_c) @ _axis_translation(k1, a, 1)
    k00, k10, k20 = K[0, 0], K[1, 0], K[2, 0]
    s2 = k10 * k10 + k2 * k20 * k20
    scale = max(1.0, k10 * k10, abs(k2) * k20 * k20)
    if s2 < -SEPARATION_TOL * scale:
        raise KindError(f"closing side is not first-kind (sine^2 = {s2:.3e})")
    s_c = math.sqrt(max(s2, 0.0))
    if s_c * s_c <= (SEPARATION_TOL ** 2) * scale:
        raise DegenerateError("closing side degenerates (vertices A and B coincide or are polar)")
    if k2 <= 0.0 and k10 < 0.0:
        raise KindError("the triangle loop does not close in the conventional orientation")
    # Kind/degeneracy classification happened above; the entries of K carry
    # product rounding noise, so the inversions project without re-checking.
    c = arc_k(k1, k00, s_c, tol=math.inf)
    angle_a = arc_k(k2, k10 / s_c, -k20 / s_c, tol=math.inf)
    K2 = _axis_translation(k1, -c, 1) @ _rotation(k2, angle_a) @ K
    angle_b = arc_k(k2, K2[1, 1], K2[2, 1], tol=math.inf)
    return Triangle(geom=g, a=a, b=b, c=c, A=angle_a, B=angle_b, C=angle_c)


def make_triangle_sas(
    g: Geometry, a: float, C: float, b: float
) -> tuple[Triangle, tuple[Point, Point, Point]]:
    """Build a triangle from two sides and the inner angle between them.

    Vertex C sits at the origin, B at exp_p1(a) @ O, and A at
    exp_j12(C) @ exp_p1(b) @ O; the result is then fully measured with
    :func:`measure_triangle`, making this the oracle generator for the
    verification suites.

    Returns:
        (triangle, (Cv, Av, Bv)) — the measurements and the vertices.

    Raises:
        ExistenceError: the closing side is not first-kind, so no triangle
            with these data exists in this geometry.
        DegenerateError: degenerate input (propagated from measurement).
        ValueError: non-positive sides or angle.
    """
    if not (a > 0.0 and b > 0.0):
        raise ValueError(f"sides must be positive, got a={a}, b={b}")
    if not C > 0.0:
        raise ValueError(f"the angle at C must be positive, got {C}")
    if g.k2 > 0.0 and C >= math.pi / math.sqrt(g.k2):
        raise ValueError(f"the angle at C must stay below the straight angle, got {C}")
    Cv = origin()
    Bv = np.array([cos_k(g.k1, a), sin_k(g.k1, a), 0.0])
    Av = _rotation(g.k2, C) @ np.array([cos_k(g.k1, b), sin_k(g.k1, b), 0.0])
    try:
        t = measure_triangle(g, Cv, Av, Bv)
    except (KindError, ConstraintError) as exc:
        raise ExistenceError(
            f"no first-kind triangle with a={a}, C={C}, b={b} in {g.label()}: {exc}"
        ) from exc
    return t, (Cv, Av, Bv)
