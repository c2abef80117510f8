"""Right triangles with a mixed pair of side kinds.

An orthogonal triangle has two first-kind sides ``a`` and ``b`` (label k1),
one second-kind side ``h`` orthogonal to ``a`` (label k1*k2), an inner
angle ``C`` between ``a`` and ``b``, and an external angle ``A`` at the
vertex where ``b`` meets ``h``.  Three equations are independent — one per
unknown beyond any two known parts — and every other displayed relation
follows from them, which :func:`ortho_relation_residuals` verifies
numerically.

:func:`solve_ortho` completes the triangle from any two of the five parts.
All inversions run through the versed sine, whose completion formulas stay
exact at zero labels (where the cosine equations collapse to ``1 = 1``),
so the flat branches need no special-casing beyond the genuinely
underdetermined pairs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, fields

from .errors import ExistenceError, InconsistentError, PoleError, UnderdeterminedError
from .geometry import Geometry
from .trig import arc_k, cos_k, sin_k, tan_k, versin_k

__all__ = [
    "OrthoTriangle",
    "solve_ortho",
    "ortho_area",
    "ortho_area_residuals",
    "ortho_relation_residuals",
    "classical_ortho_residuals",
]

#: two flat parts agreeing to this relative precision count as consistent
FLAT_MATCH_TOL = 1e-12


@dataclass(frozen=True)
class OrthoTriangle:
    """The five parts of an orthogonal triangle in geometry ``geom``.

    ``a`` and ``b`` carry the side label k1, ``h`` the second-kind side
    label k1*k2, and the angles ``C`` (inner, at the ``a``/``b`` vertex)
    and ``A`` (external, at the ``b``/``h`` vertex) carry k2.
    """

    geom: Geometry
    a: float
    b: float
    h: float
    C: float
    A: float

    def __post_init__(self) -> None:
        for f in fields(self):
            if f.name == "geom":
                continue
            value = float(getattr(self, f.name))
            if not math.isfinite(value):
                raise ValueError(f"orthogonal triangle part {f.name} must be finite")
            object.__setattr__(self, f.name, value)

    def parts(self) -> dict[str, float]:
        return {"a": self.a, "b": self.b, "h": self.h, "C": self.C, "A": self.A}

    def to_dict(self) -> dict[str, object]:
        return {"k1": self.geom.k1, "k2": self.geom.k2, **self.parts()}

    @classmethod
    def from_dict(cls, data: dict[str, object]) -> "OrthoTriangle":
        g = Geometry(float(data["k1"]), float(data["k2"]))
        return cls(geom=g, a=float(data["a"]), b=float(data["b"]),
                   h=float(data["h"]), C=float(data["C"]), A=float(data["A"]))


def _rel(lhs: float, rhs: float) -> float:
    return abs(lhs - rhs) / max(1.0, abs(lhs), abs(rhs))


def _require_finite(value: float, what: str) -> float:
    if not math.isfinite(value):
        raise ExistenceError(f"{what} is not finite for these parts")
    return value


def _from_versine(kappa: float, v: float, what: str) -> float:
    """Principal value with versed sine v (exact v = u**2/2 at kappa=0)."""
    _require_finite(v, what)
    if v < 0.0:
        if v < -1e-12:
            raise ExistenceError(f"{what} has negative squared size ({v:.3e})")
        v = 0.0
    if kappa > 0.0 and v > 2.0 / kappa:
        if v > 2.0 / kappa * (1.0 + 1e-12):
            raise ExistenceError(f"{what} exceeds the full range of its label")
        v = 2.0 / kappa
    half_sin = math.sqrt(v / 2.0)
    half_cos = math.sqrt(max(0.0, 1.0 - kappa * v / 2.0))
    return 2.0 * arc_k(kappa, half_cos, half_sin, tol=math.inf)


def _from_sine(kappa: float, s: float, what: str) -> float:
    """Principal value whose labeled sine is s."""
    _require_finite(s, what)
    if s < 0.0:
        if s < -1e-12:
            raise ExistenceError(f"{what} has a negative sine ({s:.3e})")
        s = 0.0
    csq = 1.0 - kappa * s * s
    if csq < 0.0:
        if csq < -1e-12:
            raise ExistenceError(f"{what} has sine beyond the range of its label")
        csq = 0.0
    return arc_k(kappa, math.sqrt(csq), s, tol=math.inf)


def _from_tangent(kappa: float, v: float, what: str) -> float:
    """Principal value whose labeled tangent is v."""
    _require_finite(v, what)
    if kappa == 0.0:
        if v < 0.0 and v > -1e-12:
            v = 0.0
        if v < 0.0:
            raise ExistenceError(f"{what} is negative ({v:.3e})")
        return v
    den = 1.0 + kappa * v * v
    if den <= 0.0:
        raise ExistenceError(f"{what} has tangent beyond the range of its label")
    root = math.sqrt(den)
    return arc_k(kappa, 1.0 / root, abs(v) / root, tol=math.inf)


def solve_ortho(
    g: Geometry,
    *,
    a: float | None = None,
    b: float | None = None,
    h: float | None = None,
    C: float | None = None,
    A: float | None = None,
) -> OrthoTriangle:
    """Complete an orthogonal triangle from exactly two known parts.

    Each of the C(5,2) = 10 pairs is solved by the displayed relation
    that isolates one unknown from the two knowns, then the remaining
    parts follow from the three independent equations:

        C1(b) = C1(a) C12(h)      (squared flat form b^2 = a^2 + k2 h^2)
        C2(C) = C2(A) C12(h)      (squared flat form C^2 = A^2 + k1 h^2)
        S12(h) = S1(b) S2(C)

    All returned parts are principal (nonnegative, within the first
    period of their label).

    Raises:
        UnderdeterminedError: the pair cannot fix the rest at these
            labels — (a, b) with k2 = 0 and (C, A) with k1 = 0 leave h
            free.
        InconsistentError: the pair violates a forced equality — e.g.
            (a, b) with k2 = 0 requires b = a.
        ExistenceError: no orthogonal triangle has these two parts.
    """
    known = {name: value for name, value in
             (("a", a), ("b", b), ("h", h), ("C", C), ("A", A))
             if value is not None}
    if len(known) != 2:
        raise UnderdeterminedError(
            f"exactly two parts must be given, got {sorted(known) or 'none'}"
        )
    for name, value in known.items():
        value = float(value)
        if not math.isfinite(value) or value <= 0.0:
            raise ExistenceError(f"part {name} must be positive and finite, got {value}")
        known[name] = value

    k1, k2 = g.k1, g.k2
    k12 = k1 * k2

    def v1(u: float) -> float:
        return versin_k(k1, u)

    def v2(u: float) -> float:
        return versin_k(k2, u)

    def v12(u: float) -> float:
        return versin_k(k12, u)

    # Versed-sine forms of the two cosine equations (exact at zero labels):
    #   V1(b) = V1(a) + k2 V12(h) C1(a)  <=>  C1(b) = C1(a) C12(h)
    #   V2(C) = V2(A) + k1 V12(h) C2(A)  <=>  C2(C) = C2(A) C12(h)

    def b_from_ah(av: float, hv: float) -> float:
        vb = v1(av) + k2 * v12(hv) * cos_k(k1, av)
        return _from_versine(k1, vb, "side b")

    def a_from_bh(bv: float, hv: float) -> float:
        ch = cos_k(k12, hv)
        if ch == 0.0:
            raise ExistenceError("side h sits at its quadrant; side a is not determined")
        va = (v1(bv) - k2 * v12(hv)) / ch
        return _from_versine(k1, va, "side a")

    def h_from_ab(av: float, bv: float) -> float:
        ca = cos_k(k1, av)
        if ca == 0.0:
            raise ExistenceError("side a sits at its quadrant; side h is not determined")
        vh = (v1(bv) - v1(av)) / (k2 * ca)
        return _from_versine(k12, vh, "side h")

    def big_c_from_ah(av_angle: float, hv: float) -> float:
        vc = v2(av_angle) + k1 * v12(hv) * cos_k(k2, av_angle)
        return _from_versine(k2, vc, "angle C")

    def big_a_from_ch(cv: float, hv: float) -> float:
        ch = cos_k(k12, hv)
        if ch == 0.0:
            raise ExistenceError("side h sits at its quadrant; angle A is not determined")
        va = (v2(cv) - k1 * v12(hv)) / ch
        return _from_versine(k2, va, "angle A")

    def h_from_ca(cv: float, av_angle: float) -> float:
        ca = cos_k(k2, av_angle)
        if ca == 0.0:
            raise ExistenceError("angle A sits at its quadrant; side h is not determined")
        vh = (v2(cv) - v2(av_angle)) / (k1 * ca)
        return _from_versine(k12, vh, "side h")

    def big_c_from_bh(bv: float, hv: float) -> float:
        sb = sin_k(k1, bv)
        if sb == 0.0:
            raise ExistenceError("side b vanishes; angle C is not determined")
        return _from_sine(k2, sin_k(k12, hv) / sb, "angle C")

    def b_from_hc(hv: float, cv: float) -> float:
        sc = sin_k(k2, cv)
        if sc == 0.0:
            raise ExistenceError("angle C vanishes; side b is not determined")
        return _from_sine(k1, sin_k(k12, hv) / sc, "side b")

    def h_from_bc(bv: float, cv: float) -> float:
        return _from_sine(k12, sin_k(k1, bv) * sin_k(k2, cv), "side h")

    try:
        names = frozenset(known)
        if names == {"a", "b"}:
            av, bv = known["a"], known["b"]
            if k2 == 0.0:
                if _rel(av, bv) > FLAT_MATCH_TOL:
                    raise InconsistentError(
                        f"a flat angular label forces b = a, got a={av} b={bv}"
                    )
                raise UnderdeterminedError(
                    "with a flat angular label the pair (a, b) leaves h free"
                )
            hv = h_from_ab(av, bv)
            cv = big_c_from_bh(bv, hv)
            return OrthoTriangle(g, a=av, b=bv, h=hv, C=cv,
                                 A=big_a_from_ch(cv, hv))
        if names == {"a", "h"}:
            av, hv = known["a"], known["h"]
            bv = b_from_ah(av, hv)
            cv = big_c_from_bh(bv, hv)
            return OrthoTriangle(g, a=av, b=bv, h=hv, C=cv,
                                 A=big_a_from_ch(cv, hv))
        if names == {"a", "C"}:
            av, cv = known["a"], known["C"]
            hv = _from_tangent(
                k12, tan_k(k2, cv) * sin_k(k1, av), "side h"
            )
            bv = b_from_ah(av, hv)
            return OrthoTriangle(g, a=av, b=bv, h=hv, C=cv,
                                 A=big_a_from_ch(cv, hv))
        if names == {"a", "A"}:
            av, big_av = known["a"], known["A"]
            hv = _from_sine(
                k12, tan_k(k2, big_av) * tan_k(k1, av), "side h"
            )
            bv = b_from_ah(av, hv)
            return OrthoTriangle(g, a=av, b=bv, h=hv,
                                 C=big_c_from_ah(big_av, hv), A=big_av)
        if names == {"b", "h"}:
            bv, hv = known["b"], known["h"]
            cv = big_c_from_bh(bv, hv)
            return OrthoTriangle(g, a=a_from_bh(bv, hv), b=bv, h=hv, C=cv,
                                 A=big_a_from_ch(cv, hv))
        if names == {"b", "C"}:
            bv, cv = known["b"], known["C"]
            hv = h_from_bc(bv, cv)
            return OrthoTriangle(g, a=a_from_bh(bv, hv), b=bv, h=hv, C=cv,
                                 A=big_a_from_ch(cv, hv))
        if names == {"b", "A"}:
            bv, big_av = known["b"], known["A"]
            hv = _from_tangent(
                k12, sin_k(k2, big_av) * tan_k(k1, bv), "side h"
            )
            return OrthoTriangle(g, a=a_from_bh(bv, hv), b=bv, h=hv,
                                 C=big_c_from_ah(big_av, hv), A=big_av)
        if names == {"h", "C"}:
            hv, cv = known["h"], known["C"]
            bv = b_from_hc(hv, cv)
            return OrthoTriangle(g, a=a_from_bh(bv, hv), b=bv, h=hv, C=cv,
                                 A=big_a_from_ch(cv, hv))
        if names == {"h", "A"}:
            hv, big_av = known["h"], known["A"]
            sa = sin_k(k2, big_av)
            if sa == 0.0:
                raise ExistenceError("angle A vanishes; side b is not determined")
            bv = _from_tangent(k1, tan_k(k12, hv) / sa, "side b")
            return OrthoTriangle(g, a=a_from_bh(bv, hv), b=bv, h=hv,
                                 C=big_c_from_ah(big_av, hv), A=big_av)
        # names == {"C", "A"}
        cv, big_av = known["C"], known["A"]
        if k1 == 0.0:
            if _rel(cv, big_av) > FLAT_MATCH_TOL:
                raise InconsistentError(
                    f"a flat side label forces C = A, got C={cv} A={big_av}"
                )
            raise UnderdeterminedError(
                "with a flat side label the pair (C, A) leaves h free"
            )
        hv = h_from_ca(cv, big_av)
        bv = b_from_hc(hv, cv)
        return OrthoTriangle(g, a=a_from_bh(bv, hv), b=bv, h=hv, C=cv, A=big_av)
    except PoleError as exc:
        raise ExistenceError(f"solving equation hit a quadrant pole: {exc}") from exc


def ortho_area(t: OrthoTriangle) -> float:
    """Area of an orthogonal triangle: (C - A)/k1, or a*h/2 at k1 = 0."""
    k1 = t.geom.k1
    if k1 != 0.0:
        return (t.C - t.A) / k1
    return t.a * t.h / 2.0


def ortho_area_residuals(t: OrthoTriangle) -> dict[str, float]:
    """Cross-multiplied residuals of the two labeled area formulas.

    ``sine_area``:   S_{k1^2 k2}(S) (1 + C1(b)) = S1(a) S12(h)
    ``cosine_area``: C_{k1^2 k2}(S) (1 + C1(b)) = C1(a) + C12(h)
    """
    k1, k2 = t.geom.k1, t.geom.k2
    k12 = k1 * k2
    q1 = k1 * k1 * k2
    area = ortho_area(t)
    corner = 1.0 + cos_k(k1, t.b)
    return {
        "sine_area": _rel(
            sin_k(q1, area) * corner, sin_k(k1, t.a) * sin_k(k12, t.h)
        ),
        "cosine_area": _rel(
            cos_k(q1, area) * corner, cos_k(k1, t.a) + cos_k(k12, t.h)
        ),
    }


def ortho_relation_residuals(t: OrthoTriangle) -> dict[str, float]:
    """Residuals of all twelve displayed orthogonal-triangle relations.

    Three cosine relations for sides, three for angles, the two-part sine
    theorem, and the four tangent quotients (cross-multiplied so the
    catalog stays pole-free).  For a valid triangle every entry vanishes
    to rounding — only three relations are independent, the rest are
    consequences.
    """
    k1, k2 = t.geom.k1, t.geom.k2
    k12 = k1 * k2
    a, b, h, big_c, big_a = t.a, t.b, t.h, t.C, t.A
    c1a, s1a = cos_k(k1, a), sin_k(k1, a)
    c1b, s1b = cos_k(k1, b), sin_k(k1, b)
    c12h, s12h = cos_k(k12, h), sin_k(k12, h)
    c2c, s2c = cos_k(k2, big_c), sin_k(k2, big_c)
    c2a, s2a = cos_k(k2, big_a), sin_k(k2, big_a)
    return {
        "side_cosine_a": _rel(c1a, c1b * c12h + k12 * s1b * s12h * s2a),
        "side_cosine_b": _rel(c1b, c1a * c12h),
        "side_cosine_h": _rel(c12h, c1a * c1b + k1 * s1a * s1b * c2c),
        "angle_sine_A": _rel(s2a, s2c * c1a),
        "angle_balance": _rel(s2a * c2c, c2a * s2c * c1b),
        "angle_cosine_C": _rel(c2c, c2a * c12h),
        "sine_a": _rel(s1a, s1b * c2a),
        "sine_h": _rel(s12h, s1b * s2c),
        "tangent_C": _rel(c2c * s1b * c1a, s1a * c1b),
        "tangent_Ch": _rel(s2c * s1a * c12h, s12h * c2c),
        "tangent_Ah": _rel(s2a * s1b * c12h, s12h * c1b),
        "tangent_A": _rel(s2a * s1a, c2a * s12h * c1a),
    }


# Literal per-geometry relations: (key, lhs, rhs) builders per (k1, k2).
# Stated exactly as specialized — squares, plain products, circular or
# hyperbolic functions — so they share no code with the labeled machinery.


def classical_ortho_residuals(t: OrthoTriangle) -> dict[str, float]:
    """Residuals of the classical orthogonal-triangle relations.

    Evaluates the familiar specialized forms (pythagorean squares, plain
    circular/hyperbolic products, linear flat limits) for the geometry's
    unit labels and returns one normalized residual per listed relation.
    Keys are a subset of: ``side_b``, ``angle_C``, ``sine_h``,
    ``tangent_h``, ``sine_a``, ``tangent_a``, ``area`` — geometries whose
    flat limits collapse some relations list fewer.

    Raises:
        ValueError: unless both labels are in {-1, 0, +1}.
    """
    k1, k2 = t.geom.k1, t.geom.k2
    if k1 not in (-1.0, 0.0, 1.0) or k2 not in (-1.0, 0.0, 1.0):
        raise ValueError(
            f"classical forms are defined for unit labels only, got ({k1}, {k2})"
        )
    a, b, h, big_c, big_a = t.a, t.b, t.h, t.C, t.A
    area = ortho_area(t)
    out: dict[str, float] = {}

    if (k1, k2) == (1.0, 1.0):
        out["side_b"] = _rel(math.cos(b), math.cos(a) * math.cos(h))
        out["angle_C"] = _rel(math.cos(big_c), math.cos(big_a) * math.cos(h))
        out["sine_h"] = _rel(math.sin(h), math.sin(b) * math.sin(big_c))
        out["tangent_h"] = _rel(math.tan(h), math.tan(b) * math.sin(big_a))
        out["sine_a"] = _rel(math.sin(a), math.sin(b) * math.cos(big_a))
        out["tangent_a"] = _rel(math.tan(a), math.tan(b) * math.cos(big_c))
        out["area"] = _rel(math.sin(area) * (1.0 + math.cos(b)),
                           math.sin(a) * math.sin(h))
    elif (k1, k2) == (0.0, 1.0):
        out["side_b"] = _rel(b * b, a * a + h * h)
        out["angle_C"] = _rel(big_c, big_a)
        out["sine_h"] = _rel(h, b * math.sin(big_c))
        out["tangent_a"] = _rel(a, b * math.cos(big_c))
        out["area"] = _rel(area, a * h / 2.0)
    elif (k1, k2) == (-1.0, 1.0):
        out["side_b"] = _rel(math.cosh(b), math.cosh(a) * math.cosh(h))
        out["angle_C"] = _rel(math.cos(big_c), math.cos(big_a) * math.cosh(h))
        out["sine_h"] = _rel(math.sinh(h), math.sinh(b) * math.sin(big_c))
        out["tangent_h"] = _rel(math.tanh(h), math.tanh(b) * math.sin(big_a))
        out["sine_a"] = _rel(math.sinh(a), math.sinh(b) * math.cos(big_a))
        out["tangent_a"] = _rel(math.tanh(a), math.tanh(b) * math.cos(big_c))
        out["area"] = _rel(math.sin(area) * (1.0 + math.cosh(b)),
                           math.sinh(a) * math.sinh(h))
    elif (k1, k2) == (1.0, 0.0):
        out["side_b"] = _rel(b, a)
        out["angle_C"] = _rel(big_c * big_c, big_a * big_a + h * h)
        out["sine_h"] = _rel(h, big_c * math.sin(b))
        out["tangent_h"] = _rel(h, big_a * math.tan(b))
        out["area"] = _rel(area * (1.0 + math.cos(b)), h * math.sin(a))
    elif (k1, k2) == (0.0, 0.0):
        out["side_b"] = _rel(b, a)
        out["angle_C"] = _rel(big_c, big_a)
        out["sine_h"] = _rel(h, b * big_c)
        out["area"] = _rel(area, a * h / 2.0)
    elif (k1, k2) == (-1.0, 0.0):
        out["side_b"] = _rel(b, a)
        out["angle_C"] = _rel(big_c * big_c, big_a * big_a - h * h)
        out["sine_h"] = _rel(h, big_c * math.sinh(b))
        out["tangent_h"] = _rel(h, big_a * math.tanh(b))
        out["area"] = _rel(area * (1.0 + math.cosh(b)), h * math.sinh(a))
    elif (k1, k2) == (1.0, -1.0):
        out["side_b"] = _rel(math.cos(b), math.cos(a) * math.cosh(h))
        out["angle_C"] = _rel(math.cosh(big_c), math.cosh(big_a) * math.cosh(h))
        out["sine_h"] = _rel(math.sinh(h), math.sin(b) * math.sinh(big_c))
        out["tangent_h"] = _rel(math.tanh(h), math.tan(b) * math.sinh(big_a))
        out["sine_a"] = _rel(math.sin(a), math.sin(b) * math.cosh(big_a))
        out["tangent_a"] = _rel(math.tan(a), math.tan(b) * math.cosh(big_c))
        out["area"] = _rel(math.sinh(area) * (1.0 + math.cos(b)),
                           math.sin(a) * math.sinh(h))
    elif (k1, k2) == (0.0, -1.0):
        out["side_b"] = _rel(b * b, a * a - h * h)
        out["angle_C"] = _rel(big_c, big_a)
        out["sine_h"] = _rel(h, b * math.sinh(big_c))
        out["tangent_a"] = _rel(a, b * math.cosh(big_c))
        out["area"] = _rel(area, a * h / 2.0)
    else:  # (-1.0, -1.0)
        out["side_b"] = _rel(math.cosh(b), math.cosh(a) * math.cos(h))
        out["angle_C"] = _rel(math.cosh(big_c), math.cosh(big_a) * math.cos(h))
        out["sine_h"] = _rel(math.sin(h), math.sinh(b) * math.sinh(big_c))
        out["tangent_h"] = _rel(math.tan(h), math.tanh(b) * math.sinh(big_a))
        out["sine_a"] = _rel(math.sinh(a), math.sinh(b) * math.cosh(big_a))
        out["tangent_a"] = _rel(math.tanh(a), math.tanh(b) * math.cosh(big_c))
        out["area"] = _rel(math.sinh(area) * (1.0 + math.cosh(b)),
                           math.sinh(a) * math.sin(h))
    return out
