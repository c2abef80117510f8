"""Residual catalog for the trigonometric laws of the labeled geometries.

Every displayed law of uniform triangle trigonometry — cosine and dual
cosine laws with their versine and half-excess variants, the sine theorem,
projections, the self-dual four-term balance, the minimal area-labeled
forms, the Euler half-angle family, the Gauss–Delambre–Mollweide and Napier
analogies, Cagnoli and L'Huillier forms, and the area/coarea catalog — is
packaged here as an :class:`IdentityRecord` that evaluates both sides on a
concrete triangle and reports a normalized residual.  A separate registry
holds the raw one-label identities (A1–A35): double and half arguments,
sum/difference expansions, product conversions, and the semiperimeter
factorizations, evaluated on arbitrary (kappa, arguments) input.

Ratio and tangent laws are stored cross-multiplied into polynomial form so
that no record divides by a quantity that may vanish; the handful of
records that evaluate a tangent directly raise :class:`~cktrig.errors.PoleError`
near the quadrant, which :func:`run_suite` reports as a skip, never a
failure.  Residuals divide |lhs - rhs| by max(1, |lhs|, |rhs|) for triangle
records; raw records widen the floor with the magnitude of every additive
term so that a cancellation between large terms is judged against the scale
at which it was computed.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Callable, Iterable, Mapping, NamedTuple

from .errors import (
    CKTrigError,
    DegenerateError,
    ExistenceError,
    KindError,
    PoleError,
    RangeError,
    UnknownIdentityError,
)
from .geometry import Geometry
from .group import make_triangle_sas
from .triangle import Triangle
from .trig import cos_k, quadrant, sin_k, tan_k, versin_k

__all__ = [
    "IdentityRecord",
    "IdentityRow",
    "IdentityReport",
    "REGISTRY",
    "APPENDIX_REGISTRY",
    "AppendixReport",
    "check",
    "check_appendix",
    "run_suite",
    "run_appendix_suite",
    "classical_residuals",
    "POLE_SKIP_TOL",
]

#: Cosine magnitude below which direct tangent evaluations raise PoleError
#: inside identity records (looser than the trig-level default: a suite run
#: should skip a near-pole sample rather than amplify it).
POLE_SKIP_TOL = 1e-8

# Cyclic index triples (i, j, k) and the unordered pairs (i, j) with k left
# out; suffix letters follow the measurement order a/b/c and A/B/C.
_IDX = ((0, 1, 2), (1, 2, 0), (2, 0, 1))
_PAIRS = ((0, 1, 2), (1, 2, 0), (0, 2, 1))  # (i, j, k-missing)
_OTHERS = {2: (0, 1), 0: (1, 2), 1: (0, 2)}  # missing index -> remaining pair
_SIDE = ("a", "b", "c")
_ANGLE = ("A", "B", "C")


def _rel(lhs: float, rhs: float, *scales: float) -> float:
    """Normalized residual |lhs - rhs| / max(1, |lhs|, |rhs|, scales)."""
    den = max(1.0, abs(lhs), abs(rhs))
    for s in scales:
        a = abs(s)
        if a > den:
            den = a
    return abs(lhs - rhs) / den


class _Data(NamedTuple):
    """Unpacked triangle quantities shared by the evaluators."""

    k1: float
    k2: float
    q1: float  # area label k1**2 * k2
    q2: float  # coarea label k1 * k2**2
    x: tuple[float, float, float]  # signed sides (-a, b, c)
    X: tuple[float, float, float]  # signed angles (-A, B, C)
    e: float  # half side excess
    E: float  # half angle excess
    ei: tuple[float, float, float]  # side excess parts (-p, p - c, p - b)
    EI: tuple[float, float, float]  # angle excess parts (-P, P - C, P - B)
    area: float
    coarea: float


def _data(t: Triangle) -> _Data:
    s = t.signed()
    ex = t.excesses()
    k1, k2 = t.geom.k1, t.geom.k2
    return _Data(
        k1=k1,
        k2=k2,
        q1=k1 * k1 * k2,
        q2=k1 * k2 * k2,
        x=s.sides,
        X=s.angles,
        e=ex.half_side_excess,
        E=ex.half_angle_excess,
        ei=ex.side_parts,
        EI=ex.angle_parts,
        area=t.area(),
        coarea=t.coarea(),
    )


def _sqrt_clipped(value: float) -> float:
    """Square root with tiny negative round-off clipped to zero."""
    return math.sqrt(value) if value > 0.0 else 0.0


@dataclass(frozen=True)
class IdentityRecord:
    """One law turned into a residual functional.

    Attributes:
        id: unique registry key.
        family: catalog family the law belongs to.
        arity: "triangle" for laws of a measured triangle, "raw" for
            one-label identities taking (kappa, *args).
        description: what the law states, in words.
        dual_id: id of the record obtained by swapping sides with angles
            and the two labels (its own id for self-dual laws; None for
            raw records, which carry a single label).
        nargs: number of arguments after kappa (raw records only).
        evaluate: residual functional — Triangle -> float for triangle
            records, (kappa, *args) -> float for raw records.
        trivial_when: predicate on (k1, k2) marking label combinations
            where the law degenerates to an identically zero residual.
    """

    id: str
    family: str
    arity: str
    description: str
    dual_id: str | None = None
    nargs: int = 0
    evaluate: Callable[..., float] = field(repr=False, default=None)  # type: ignore[assignment]
    trivial_when: Callable[[float, float], bool] | None = field(repr=False, default=None)


# ---------------------------------------------------------------------------
# Triangle-record evaluators.  Factories close over instance indices; all
# laws are written in the cyclically signed view where one shape serves all
# instances, except the families whose classical unsigned form is itself
# uniform (sine theorem, projections, versine and half-excess variants).
# ---------------------------------------------------------------------------


def _cosine_side(i: int) -> Callable[[Triangle], float]:
    def run(t: Triangle) -> float:
        d = _data(t)
        _, j, k = _IDX[i]
        lhs = cos_k(d.k1, d.x[i])
        rhs = cos_k(d.k1, d.x[j]) * cos_k(d.k1, d.x[k]) - d.k1 * sin_k(d.k1, d.x[j]) * sin_k(
            d.k1, d.x[k]
        ) * cos_k(d.k2, d.X[i])
        return _rel(lhs, rhs)

    return run


def _cosine_angle(i: int) -> Callable[[Triangle], float]:
    def run(t: Triangle) -> float:
        d = _data(t)
        _, j, k = _IDX[i]
        lhs = cos_k(d.k2, d.X[i])
        rhs = cos_k(d.k2, d.X[j]) * cos_k(d.k2, d.X[k]) - d.k2 * sin_k(d.k2, d.X[j]) * sin_k(
            d.k2, d.X[k]
        ) * cos_k(d.k1, d.x[i])
        return _rel(lhs, rhs)

    return run


def _versine_side(i: int) -> Callable[[Triangle], float]:
    def run(t: Triangle) -> float:
        k1, k2 = t.geom.k1, t.geom.k2
        a, b, c = t.a, t.b, t.c
        A, B, C = t.A, t.B, t.C
        if i == 0:
            lhs = versin_k(k1, a) - versin_k(k1, b + c)
            rhs = -k2 * sin_k(k1, b) * sin_k(k1, c) * versin_k(k2, A)
        elif i == 1:
            lhs = versin_k(k1, b) - versin_k(k1, a - c)
            rhs = k2 * sin_k(k1, a) * sin_k(k1, c) * versin_k(k2, B)
        else:
            lhs = versin_k(k1, c) - versin_k(k1, a - b)
            rhs = k2 * sin_k(k1, a) * sin_k(k1, b) * versin_k(k2, C)
        return _rel(lhs, rhs)

    return run


def _versine_angle(i: int) -> Callable[[Triangle], float]:
    def run(t: Triangle) -> float:
        k1, k2 = t.geom.k1, t.geom.k2
        a, b, c = t.a, t.b, t.c
        A, B, C = t.A, t.B, t.C
        if i == 0:
            lhs = versin_k(k2, A) - versin_k(k2, B + C)
            rhs = -k1 * sin_k(k2, B) * sin_k(k2, C) * versin_k(k1, a)
        elif i == 1:
            lhs = versin_k(k2, B) - versin_k(k2, A - C)
            rhs = k1 * sin_k(k2, A) * sin_k(k2, C) * versin_k(k1, b)
        else:
            lhs = versin_k(k2, C) - versin_k(k2, A - B)
            rhs = k1 * sin_k(k2, A) * sin_k(k2, B) * versin_k(k1, c)
        return _rel(lhs, rhs)

    return run


def _half_excess_side(i: int) -> Callable[[Triangle], float]:
    def run(t: Triangle) -> float:
        k1, k2 = t.geom.k1, t.geom.k2
        p = (t.a + t.b + t.c) / 2.0
        if i == 0:
            lhs = 2.0 * sin_k(k1, p - t.a) * sin_k(k1, p)
            rhs = k2 * sin_k(k1, t.b) * sin_k(k1, t.c) * versin_k(k2, t.A)
        elif i == 1:
            lhs = 2.0 * sin_k(k1, p - t.a) * sin_k(k1, p - t.c)
            rhs = k2 * sin_k(k1, t.a) * sin_k(k1, t.c) * versin_k(k2, t.B)
        else:
            lhs = 2.0 * sin_k(k1, p - t.a) * sin_k(k1, p - t.b)
            rhs = k2 * sin_k(k1, t.a) * sin_k(k1, t.b) * versin_k(k2, t.C)
        return _rel(lhs, rhs)

    return run


def _half_excess_angle(i: int) -> Callable[[Triangle], float]:
    def run(t: Triangle) -> float:
        k1, k2 = t.geom.k1, t.geom.k2
        big_p = (t.A + t.B + t.C) / 2.0
        if i == 0:
            lhs = 2.0 * sin_k(k2, big_p - t.A) * sin_k(k2, big_p)
            rhs = k1 * sin_k(k2, t.B) * sin_k(k2, t.C) * versin_k(k1, t.a)
        elif i == 1:
            lhs = 2.0 * sin_k(k2, big_p - t.A) * sin_k(k2, big_p - t.C)
            rhs = k1 * sin_k(k2, t.A) * sin_k(k2, t.C) * versin_k(k1, t.b)
        else:
            lhs = 2.0 * sin_k(k2, big_p - t.A) * sin_k(k2, big_p - t.B)
            rhs = k1 * sin_k(k2, t.A) * sin_k(k2, t.B) * versin_k(k1, t.c)
        return _rel(lhs, rhs)

    return run


def _sine_theorem(t: Triangle) -> float:
    k1, k2 = t.geom.k1, t.geom.k2
    sides = (t.a, t.b, t.c)
    angles = (t.A, t.B, t.C)
    worst = 0.0
    for i, j, _ in _PAIRS:
        lhs = sin_k(k1, sides[i]) * sin_k(k2, angles[j])
        rhs = sin_k(k1, sides[j]) * sin_k(k2, angles[i])
        worst = max(worst, _rel(lhs, rhs))
    return worst


def _projection_side(i: int, j: int) -> Callable[[Triangle], float]:
    """Side i projected on the angle at vertex j (unsigned classical form)."""

    def run(t: Triangle) -> float:
        k1, k2 = t.geom.k1, t.geom.k2
        a, b, c = t.a, t.b, t.c
        A, B, C = t.A, t.B, t.C
        forms = {
            (0, 1): (sin_k(k1, a) * cos_k(k2, B),
                     cos_k(k1, b) * sin_k(k1, c) + sin_k(k1, b) * cos_k(k1, c) * cos_k(k2, A)),
            (0, 2): (sin_k(k1, a) * cos_k(k2, C),
                     cos_k(k1, c) * sin_k(k1, b) + sin_k(k1, c) * cos_k(k1, b) * cos_k(k2, A)),
            (1, 0): (sin_k(k1, b) * cos_k(k2, A),
                     -cos_k(k1, a) * sin_k(k1, c) + sin_k(k1, a) * cos_k(k1, c) * cos_k(k2, B)),
            (1, 2): (sin_k(k1, b) * cos_k(k2, C),
                     sin_k(k1, a) * cos_k(k1, c) - sin_k(k1, c) * cos_k(k1, a) * cos_k(k2, B)),
            (2, 0): (sin_k(k1, c) * cos_k(k2, A),
                     -cos_k(k1, a) * sin_k(k1, b) + sin_k(k1, a) * cos_k(k1, b) * cos_k(k2, C)),
            (2, 1): (sin_k(k1, c) * cos_k(k2, B),
                     cos_k(k1, b) * sin_k(k1, a) - sin_k(k1, b) * cos_k(k1, a) * cos_k(k2, C)),
        }
        lhs, rhs = forms[(i, j)]
        return _rel(lhs, rhs)

    return run


def _projection_angle(i: int, j: int) -> Callable[[Triangle], float]:
    """Angle i projected on side j: the dual of :func:`_projection_side`."""

    def run(t: Triangle) -> float:
        k1, k2 = t.geom.k1, t.geom.k2
        a, b, c = t.a, t.b, t.c
        A, B, C = t.A, t.B, t.C
        forms = {
            (0, 1): (sin_k(k2, A) * cos_k(k1, b),
                     cos_k(k2, B) * sin_k(k2, C) + sin_k(k2, B) * cos_k(k2, C) * cos_k(k1, a)),
            (0, 2): (sin_k(k2, A) * cos_k(k1, c),
                     cos_k(k2, C) * sin_k(k2, B) + sin_k(k2, C) * cos_k(k2, B) * cos_k(k1, a)),
            (1, 0): (sin_k(k2, B) * cos_k(k1, a),
                     -cos_k(k2, A) * sin_k(k2, C) + sin_k(k2, A) * cos_k(k2, C) * cos_k(k1, b)),
            (1, 2): (sin_k(k2, B) * cos_k(k1, c),
                     sin_k(k2, A) * cos_k(k2, C) - sin_k(k2, C) * cos_k(k2, A) * cos_k(k1, b)),
            (2, 0): (sin_k(k2, C) * cos_k(k1, a),
                     -cos_k(k2, A) * sin_k(k2, B) + sin_k(k2, A) * cos_k(k2, B) * cos_k(k1, c)),
            (2, 1): (sin_k(k2, C) * cos_k(k1, b),
                     cos_k(k2, B) * sin_k(k2, A) - sin_k(k2, B) * cos_k(k2, A) * cos_k(k1, c)),
        }
        lhs, rhs = forms[(i, j)]
        return _rel(lhs, rhs)

    return run


def _selfdual_four(k: int) -> Callable[[Triangle], float]:
    """Four-term balance pairing the two angles (sides) not at index k."""

    def run(t: Triangle) -> float:
        d = _data(t)
        i, j = _OTHERS[k]
        lhs = d.k2 * sin_k(d.k2, d.X[i]) * sin_k(d.k2, d.X[j]) - cos_k(d.k2, d.X[i]) * cos_k(
            d.k2, d.X[j]
        ) * cos_k(d.k1, d.x[k])
        rhs = d.k1 * sin_k(d.k1, d.x[i]) * sin_k(d.k1, d.x[j]) - cos_k(d.k1, d.x[i]) * cos_k(
            d.k1, d.x[j]
        ) * cos_k(d.k2, d.X[k])
        return _rel(lhs, rhs)

    return run


def _minimal_sides(t: Triangle) -> float:
    d = _data(t)
    s_co = sin_k(d.q2, d.coarea / 2.0)
    worst = 0.0
    for i, j, k in _IDX:
        lhs = s_co * sin_k(d.k1, d.ei[i])
        half = sin_k(d.k2, d.X[i] / 2.0)
        rhs = -sin_k(d.k1, d.x[j]) * sin_k(d.k1, d.x[k]) * half * half
        worst = max(worst, _rel(lhs, rhs))
    return worst


def _minimal_angles(t: Triangle) -> float:
    d = _data(t)
    s_ar = sin_k(d.q1, d.area / 2.0)
    worst = 0.0
    for i, j, k in _IDX:
        lhs = s_ar * sin_k(d.k2, d.EI[i])
        half = sin_k(d.k1, d.x[i] / 2.0)
        rhs = -sin_k(d.k2, d.X[j]) * sin_k(d.k2, d.X[k]) * half * half
        worst = max(worst, _rel(lhs, rhs))
    return worst


def _euler_cos_sq_angle(i: int) -> Callable[[Triangle], float]:
    def run(t: Triangle) -> float:
        d = _data(t)
        _, j, k = _IDX[i]
        half = cos_k(d.k2, d.X[i] / 2.0)
        lhs = half * half * sin_k(d.k1, d.x[j]) * sin_k(d.k1, d.x[k])
        rhs = sin_k(d.k1, d.ei[j]) * sin_k(d.k1, d.ei[k])
        return _rel(lhs, rhs)

    return run


def _euler_cos_sq_side(i: int) -> Callable[[Triangle], float]:
    def run(t: Triangle) -> float:
        d = _data(t)
        _, j, k = _IDX[i]
        half = cos_k(d.k1, d.x[i] / 2.0)
        lhs = half * half * sin_k(d.k2, d.X[j]) * sin_k(d.k2, d.X[k])
        rhs = sin_k(d.k2, d.EI[j]) * sin_k(d.k2, d.EI[k])
        return _rel(lhs, rhs)

    return run


def _euler_tan_sq_angle(i: int) -> Callable[[Triangle], float]:
    def run(t: Triangle) -> float:
        d = _data(t)
        _, j, k = _IDX[i]
        tn = tan_k(d.k2, d.X[i] / 2.0, POLE_SKIP_TOL)
        lhs = tn * tn * sin_k(d.k1, d.ei[j]) * sin_k(d.k1, d.ei[k])
        rhs = -sin_k(d.q2, d.coarea / 2.0) * sin_k(d.k1, d.ei[i])
        return _rel(lhs, rhs)

    return run


def _euler_tan_sq_side(i: int) -> Callable[[Triangle], float]:
    def run(t: Triangle) -> float:
        d = _data(t)
        _, j, k = _IDX[i]
        tn = tan_k(d.k1, d.x[i] / 2.0, POLE_SKIP_TOL)
        lhs = tn * tn * sin_k(d.k2, d.EI[j]) * sin_k(d.k2, d.EI[k])
        rhs = -sin_k(d.q1, d.area / 2.0) * sin_k(d.k2, d.EI[i])
        return _rel(lhs, rhs)

    return run


def _excess_sine_root_sides(d: _Data) -> float:
    """sqrt(-S_co(coarea/2) * prod S1(excess parts)) — shared radicand."""
    rad = -sin_k(d.q2, d.coarea / 2.0)
    for m in range(3):
        rad *= sin_k(d.k1, d.ei[m])
    return _sqrt_clipped(rad)


def _excess_sine_root_angles(d: _Data) -> float:
    rad = -sin_k(d.q1, d.area / 2.0)
    for m in range(3):
        rad *= sin_k(d.k2, d.EI[m])
    return _sqrt_clipped(rad)


def _double_euler_angle(i: int) -> Callable[[Triangle], float]:
    def run(t: Triangle) -> float:
        d = _data(t)
        _, j, k = _IDX[i]
        lhs = sin_k(d.k2, d.X[i]) * sin_k(d.k1, d.x[j]) * sin_k(d.k1, d.x[k])
        rhs = -2.0 * _excess_sine_root_sides(d)
        return _rel(lhs, rhs)

    return run


def _double_euler_side(i: int) -> Callable[[Triangle], float]:
    def run(t: Triangle) -> float:
        d = _data(t)
        _, j, k = _IDX[i]
        lhs = sin_k(d.k1, d.x[i]) * sin_k(d.k2, d.X[j]) * sin_k(d.k2, d.X[k])
        rhs = -2.0 * _excess_sine_root_angles(d)
        return _rel(lhs, rhs)

    return run


def _double_euler_ratio(t: Triangle) -> float:
    d = _data(t)
    g_sides = _excess_sine_root_sides(d)
    g_angles = _excess_sine_root_angles(d)
    worst = 0.0
    for i in range(3):
        lhs = sin_k(d.k1, d.x[i]) * g_angles
        rhs = sin_k(d.k2, d.X[i]) * g_sides
        worst = max(worst, _rel(lhs, rhs))
    return worst


def _predelambre_cos_product(t: Triangle) -> float:
    d = _data(t)
    lhs = 1.0
    rhs = 1.0
    for m in range(3):
        lhs *= cos_k(d.k2, d.X[m] / 2.0)
        rhs *= sin_k(d.k1, d.ei[m])
    for m in range(3):
        lhs *= sin_k(d.k1, d.x[m])
    return _rel(lhs, rhs)


def _predelambre_dual_cos_product(t: Triangle) -> float:
    d = _data(t)
    lhs = 1.0
    rhs = 1.0
    for m in range(3):
        lhs *= cos_k(d.k1, d.x[m] / 2.0)
        rhs *= sin_k(d.k2, d.EI[m])
    for m in range(3):
        lhs *= sin_k(d.k2, d.X[m])
    return _rel(lhs, rhs)


def _predelambre_mixed(k: int) -> Callable[[Triangle], float]:
    """Two half-angle sines and the remaining half-angle cosine."""

    def run(t: Triangle) -> float:
        d = _data(t)
        i, j = _OTHERS[k]
        lhs = sin_k(d.k2, d.X[i] / 2.0) * sin_k(d.k2, d.X[j] / 2.0) * cos_k(d.k2, d.X[k] / 2.0)
        for m in range(3):
            lhs *= sin_k(d.k1, d.x[m])
        rhs = -sin_k(d.k1, d.ei[i]) * sin_k(d.k1, d.ei[j]) * sin_k(d.q2, d.coarea / 2.0)
        return _rel(lhs, rhs)

    return run


def _predelambre_dual_mixed(k: int) -> Callable[[Triangle], float]:
    def run(t: Triangle) -> float:
        d = _data(t)
        i, j = _OTHERS[k]
        lhs = sin_k(d.k1, d.x[i] / 2.0) * sin_k(d.k1, d.x[j] / 2.0) * cos_k(d.k1, d.x[k] / 2.0)
        for m in range(3):
            lhs *= sin_k(d.k2, d.X[m])
        rhs = -sin_k(d.k2, d.EI[i]) * sin_k(d.k2, d.EI[j]) * sin_k(d.q1, d.area / 2.0)
        return _rel(lhs, rhs)

    return run


def _predelambre_tan_pair(i: int, j: int, k: int) -> Callable[[Triangle], float]:
    def run(t: Triangle) -> float:
        d = _data(t)
        lhs = tan_k(d.k2, d.X[i] / 2.0, POLE_SKIP_TOL) * tan_k(
            d.k2, d.X[j] / 2.0, POLE_SKIP_TOL
        ) * sin_k(d.k1, d.ei[k])
        rhs = -sin_k(d.q2, d.coarea / 2.0)
        return _rel(lhs, rhs)

    return run


def _predelambre_dual_tan_pair(i: int, j: int, k: int) -> Callable[[Triangle], float]:
    def run(t: Triangle) -> float:
        d = _data(t)
        lhs = tan_k(d.k1, d.x[i] / 2.0, POLE_SKIP_TOL) * tan_k(
            d.k1, d.x[j] / 2.0, POLE_SKIP_TOL
        ) * sin_k(d.k2, d.EI[k])
        rhs = -sin_k(d.q1, d.area / 2.0)
        return _rel(lhs, rhs)

    return run


def _predelambre_tan_ratio(i: int, j: int) -> Callable[[Triangle], float]:
    def run(t: Triangle) -> float:
        d = _data(t)
        lhs = sin_k(d.k2, d.X[i] / 2.0) * cos_k(d.k2, d.X[j] / 2.0) * sin_k(d.k1, d.ei[j])
        rhs = sin_k(d.k2, d.X[j] / 2.0) * cos_k(d.k2, d.X[i] / 2.0) * sin_k(d.k1, d.ei[i])
        return _rel(lhs, rhs)

    return run


def _predelambre_dual_tan_ratio(i: int, j: int) -> Callable[[Triangle], float]:
    def run(t: Triangle) -> float:
        d = _data(t)
        lhs = sin_k(d.k1, d.x[i] / 2.0) * cos_k(d.k1, d.x[j] / 2.0) * sin_k(d.k2, d.EI[j])
        rhs = sin_k(d.k1, d.x[j] / 2.0) * cos_k(d.k1, d.x[i] / 2.0) * sin_k(d.k2, d.EI[i])
        return _rel(lhs, rhs)

    return run


def _delambre(form: str, k: int) -> Callable[[Triangle], float]:
    """Gauss–Delambre–Mollweide analogy, cross-multiplied.

    form selects which half-sum/half-difference pairing is checked; k is
    the index left out of the angle pair.
    """

    def run(t: Triangle) -> float:
        d = _data(t)
        i, j = _OTHERS[k]
        angle_sum = (d.X[i] + d.X[j]) / 2.0
        angle_dif = (d.X[i] - d.X[j]) / 2.0
        side_sum = (d.x[i] + d.x[j]) / 2.0
        side_dif = (d.x[i] - d.x[j]) / 2.0
        if form == "sum_sin":
            lhs = sin_k(d.k2, angle_sum) * cos_k(d.k1, d.x[k] / 2.0)
            rhs = -cos_k(d.k1, side_dif) * sin_k(d.k2, d.X[k] / 2.0)
        elif form == "sum_cos":
            lhs = cos_k(d.k2, angle_sum) * cos_k(d.k1, d.x[k] / 2.0)
            rhs = cos_k(d.k1, side_sum) * cos_k(d.k2, d.X[k] / 2.0)
        elif form == "dif_sin":
            lhs = sin_k(d.k2, angle_dif) * sin_k(d.k1, d.x[k] / 2.0)
            rhs = sin_k(d.k1, side_dif) * sin_k(d.k2, d.X[k] / 2.0)
        else:  # "dif_cos"
            lhs = cos_k(d.k2, angle_dif) * sin_k(d.k1, d.x[k] / 2.0)
            rhs = -sin_k(d.k1, side_sum) * cos_k(d.k2, d.X[k] / 2.0)
        return _rel(lhs, rhs)

    return run


def _napier(form: str, k: int) -> Callable[[Triangle], float]:
    """Napier analogy, cross-multiplied into sine/cosine products."""

    def run(t: Triangle) -> float:
        d = _data(t)
        i, j = _OTHERS[k]
        angle_sum = (d.X[i] + d.X[j]) / 2.0
        angle_dif = (d.X[i] - d.X[j]) / 2.0
        side_sum = (d.x[i] + d.x[j]) / 2.0
        side_dif = (d.x[i] - d.x[j]) / 2.0
        half_angle = d.X[k] / 2.0
        half_side = d.x[k] / 2.0
        if form == "tan_sum":
            lhs = sin_k(d.k2, angle_sum) * cos_k(d.k2, half_angle) * cos_k(d.k1, side_sum)
            rhs = -cos_k(d.k2, angle_sum) * sin_k(d.k2, half_angle) * cos_k(d.k1, side_dif)
        elif form == "tan_dif":
            lhs = sin_k(d.k2, angle_dif) * cos_k(d.k2, half_angle) * sin_k(d.k1, side_sum)
            rhs = -cos_k(d.k2, angle_dif) * sin_k(d.k2, half_angle) * sin_k(d.k1, side_dif)
        elif form == "dual_tan_sum":
            lhs = sin_k(d.k1, side_sum) * cos_k(d.k1, half_side) * cos_k(d.k2, angle_sum)
            rhs = -cos_k(d.k1, side_sum) * sin_k(d.k1, half_side) * cos_k(d.k2, angle_dif)
        elif form == "dual_tan_dif":
            lhs = sin_k(d.k1, side_dif) * cos_k(d.k1, half_side) * sin_k(d.k2, angle_sum)
            rhs = -cos_k(d.k1, side_dif) * sin_k(d.k1, half_side) * sin_k(d.k2, angle_dif)
        else:  # "selfdual"
            lhs = sin_k(d.k2, angle_sum) * cos_k(d.k2, angle_dif) * sin_k(d.k1, side_dif) * cos_k(
                d.k1, side_sum
            )
            rhs = cos_k(d.k2, angle_sum) * sin_k(d.k2, angle_dif) * sin_k(d.k1, side_sum) * cos_k(
                d.k1, side_dif
            )
        return _rel(lhs, rhs)

    return run


def _cagnoli_angle(i: int) -> Callable[[Triangle], float]:
    def run(t: Triangle) -> float:
        d = _data(t)
        _, j, k = _IDX[i]
        lhs = sin_k(d.q1, d.area / 2.0) * 4.0
        for m in range(3):
            lhs *= cos_k(d.k1, d.x[m] / 2.0)
        rhs = -sin_k(d.k2, d.X[i]) * sin_k(d.k1, d.x[j]) * sin_k(d.k1, d.x[k])
        return _rel(lhs, rhs)

    return run


def _cagnoli_side(i: int) -> Callable[[Triangle], float]:
    def run(t: Triangle) -> float:
        d = _data(t)
        _, j, k = _IDX[i]
        lhs = sin_k(d.q2, d.coarea / 2.0) * 4.0
        for m in range(3):
            lhs *= cos_k(d.k2, d.X[m] / 2.0)
        rhs = -sin_k(d.k1, d.x[i]) * sin_k(d.k2, d.X[j]) * sin_k(d.k2, d.X[k])
        return _rel(lhs, rhs)

    return run


def _lhuillier(t: Triangle) -> float:
    d = _data(t)
    s_ar = sin_k(d.q1, d.area / 4.0)
    c_ar = cos_k(d.q1, d.area / 4.0)
    lhs = s_ar * s_ar * cos_k(d.q2, d.coarea / 4.0)
    rhs = -c_ar * c_ar * sin_k(d.q2, d.coarea / 4.0)
    for m in range(3):
        lhs *= cos_k(d.k1, d.ei[m] / 2.0)
        rhs *= sin_k(d.k1, d.ei[m] / 2.0)
    return _rel(lhs, rhs)


def _lhuillier_dual(t: Triangle) -> float:
    d = _data(t)
    s_co = sin_k(d.q2, d.coarea / 4.0)
    c_co = cos_k(d.q2, d.coarea / 4.0)
    lhs = s_co * s_co * cos_k(d.q1, d.area / 4.0)
    rhs = -c_co * c_co * sin_k(d.q1, d.area / 4.0)
    for m in range(3):
        lhs *= cos_k(d.k2, d.EI[m] / 2.0)
        rhs *= sin_k(d.k2, d.EI[m] / 2.0)
    return _rel(lhs, rhs)


# --- area/coarea catalog -----------------------------------------------------


def _area_tan_quarter(t: Triangle) -> float:
    d = _data(t)
    lhs = d.k1 * sin_k(d.q1, d.area / 4.0) * cos_k(d.k2, d.E / 2.0)
    rhs = sin_k(d.k2, d.E / 2.0) * cos_k(d.q1, d.area / 4.0)
    return _rel(lhs, rhs)


def _coarea_tan_quarter(t: Triangle) -> float:
    d = _data(t)
    lhs = d.k2 * sin_k(d.q2, d.coarea / 4.0) * cos_k(d.k1, d.e / 2.0)
    rhs = sin_k(d.k1, d.e / 2.0) * cos_k(d.q2, d.coarea / 4.0)
    return _rel(lhs, rhs)


def _area_tan_product(k: int) -> Callable[[Triangle], float]:
    def run(t: Triangle) -> float:
        d = _data(t)
        i, j = _OTHERS[k]
        lhs = sin_k(d.q1, d.area / 4.0) * cos_k(d.k1, d.ei[i] / 2.0) * cos_k(
            d.k1, d.ei[j] / 2.0
        ) * cos_k(d.k2, d.EI[k] / 2.0)
        rhs = -cos_k(d.q1, d.area / 4.0) * sin_k(d.k1, d.ei[i] / 2.0) * sin_k(
            d.k1, d.ei[j] / 2.0
        ) * sin_k(d.k2, d.EI[k] / 2.0)
        return _rel(lhs, rhs)

    return run


def _coarea_tan_product(k: int) -> Callable[[Triangle], float]:
    def run(t: Triangle) -> float:
        d = _data(t)
        i, j = _OTHERS[k]
        lhs = sin_k(d.q2, d.coarea / 4.0) * cos_k(d.k2, d.EI[i] / 2.0) * cos_k(
            d.k2, d.EI[j] / 2.0
        ) * cos_k(d.k1, d.ei[k] / 2.0)
        rhs = -cos_k(d.q2, d.coarea / 4.0) * sin_k(d.k2, d.EI[i] / 2.0) * sin_k(
            d.k2, d.EI[j] / 2.0
        ) * sin_k(d.k1, d.ei[k] / 2.0)
        return _rel(lhs, rhs)

    return run


def _area_coarea_balance(i: int) -> Callable[[Triangle], float]:
    def run(t: Triangle) -> float:
        d = _data(t)
        lhs = sin_k(d.q1, d.area / 4.0) * sin_k(d.k2, d.EI[i] / 2.0) * cos_k(
            d.q2, d.coarea / 4.0
        ) * cos_k(d.k1, d.ei[i] / 2.0)
        rhs = cos_k(d.q1, d.area / 4.0) * cos_k(d.k2, d.EI[i] / 2.0) * sin_k(
            d.q2, d.coarea / 4.0
        ) * sin_k(d.k1, d.ei[i] / 2.0)
        return _rel(lhs, rhs)

    return run


def _excess_tan_ratio(i: int, j: int) -> Callable[[Triangle], float]:
    def run(t: Triangle) -> float:
        d = _data(t)
        lhs = sin_k(d.k1, d.ei[i] / 2.0) * cos_k(d.k1, d.ei[j] / 2.0) * sin_k(
            d.k2, d.EI[j] / 2.0
        ) * cos_k(d.k2, d.EI[i] / 2.0)
        rhs = sin_k(d.k1, d.ei[j] / 2.0) * cos_k(d.k1, d.ei[i] / 2.0) * sin_k(
            d.k2, d.EI[i] / 2.0
        ) * cos_k(d.k2, d.EI[j] / 2.0)
        return _rel(lhs, rhs)

    return run


def _angle_excess_tan_sq(i: int) -> Callable[[Triangle], float]:
    def run(t: Triangle) -> float:
        d = _data(t)
        _, j, k = _IDX[i]
        s_half = sin_k(d.k2, d.EI[i] / 2.0)
        c_half = cos_k(d.k2, d.EI[i] / 2.0)
        lhs = s_half * s_half * cos_k(d.q2, d.coarea / 4.0) * sin_k(d.k1, d.ei[j] / 2.0) * sin_k(
            d.k1, d.ei[k] / 2.0
        ) * cos_k(d.k1, d.ei[i] / 2.0)
        rhs = -c_half * c_half * sin_k(d.q2, d.coarea / 4.0) * sin_k(d.k1, d.ei[i] / 2.0) * cos_k(
            d.k1, d.ei[j] / 2.0
        ) * cos_k(d.k1, d.ei[k] / 2.0)
        return _rel(lhs, rhs)

    return run


def _side_excess_tan_sq(i: int) -> Callable[[Triangle], float]:
    def run(t: Triangle) -> float:
        d = _data(t)
        _, j, k = _IDX[i]
        s_half = sin_k(d.k1, d.ei[i] / 2.0)
        c_half = cos_k(d.k1, d.ei[i] / 2.0)
        lhs = s_half * s_half * cos_k(d.q1, d.area / 4.0) * sin_k(d.k2, d.EI[j] / 2.0) * sin_k(
            d.k2, d.EI[k] / 2.0
        ) * cos_k(d.k2, d.EI[i] / 2.0)
        rhs = -c_half * c_half * sin_k(d.q1, d.area / 4.0) * sin_k(d.k2, d.EI[i] / 2.0) * cos_k(
            d.k2, d.EI[j] / 2.0
        ) * cos_k(d.k2, d.EI[k] / 2.0)
        return _rel(lhs, rhs)

    return run


def _area_cos_half(t: Triangle) -> float:
    d = _data(t)
    lhs = cos_k(d.q1, d.area / 2.0) * 4.0
    rhs = 1.0
    for m in range(3):
        lhs *= cos_k(d.k1, d.x[m] / 2.0)
        rhs += cos_k(d.k1, d.x[m])
    return _rel(lhs, rhs)


def _coarea_cos_half(t: Triangle) -> float:
    d = _data(t)
    lhs = cos_k(d.q2, d.coarea / 2.0) * 4.0
    rhs = 1.0
    for m in range(3):
        lhs *= cos_k(d.k2, d.X[m] / 2.0)
        rhs += cos_k(d.k2, d.X[m])
    return _rel(lhs, rhs)


def _area_sin_half_product(i: int) -> Callable[[Triangle], float]:
    def run(t: Triangle) -> float:
        d = _data(t)
        _, j, k = _IDX[i]
        lhs = sin_k(d.q1, d.area / 2.0) * cos_k(d.k1, d.x[i] / 2.0)
        rhs = -sin_k(d.k2, d.X[i]) * sin_k(d.k1, d.x[j] / 2.0) * sin_k(d.k1, d.x[k] / 2.0)
        return _rel(lhs, rhs)

    return run


def _coarea_sin_half_product(i: int) -> Callable[[Triangle], float]:
    def run(t: Triangle) -> float:
        d = _data(t)
        _, j, k = _IDX[i]
        lhs = sin_k(d.q2, d.coarea / 2.0) * cos_k(d.k2, d.X[i] / 2.0)
        rhs = -sin_k(d.k1, d.x[i]) * sin_k(d.k2, d.X[j] / 2.0) * sin_k(d.k2, d.X[k] / 2.0)
        return _rel(lhs, rhs)

    return run


def _area_sin_half_root(t: Triangle) -> float:
    d = _data(t)
    lhs = sin_k(d.q1, d.area / 2.0) * 2.0
    for m in range(3):
        lhs *= cos_k(d.k1, d.x[m] / 2.0)
    rhs = _excess_sine_root_sides(d)
    return _rel(lhs, rhs)


def _coarea_sin_half_root(t: Triangle) -> float:
    d = _data(t)
    lhs = sin_k(d.q2, d.coarea / 2.0) * 2.0
    for m in range(3):
        lhs *= cos_k(d.k2, d.X[m] / 2.0)
    rhs = _excess_sine_root_angles(d)
    return _rel(lhs, rhs)


def _area_tan_half(i: int) -> Callable[[Triangle], float]:
    def run(t: Triangle) -> float:
        d = _data(t)
        _, j, k = _IDX[i]
        corner = 1.0
        for m in range(3):
            corner += cos_k(d.k1, d.x[m])
        lhs = sin_k(d.q1, d.area / 2.0) * corner
        rhs = -cos_k(d.q1, d.area / 2.0) * sin_k(d.k2, d.X[i]) * sin_k(d.k1, d.x[j]) * sin_k(
            d.k1, d.x[k]
        )
        return _rel(lhs, rhs)

    return run


def _coarea_tan_half(i: int) -> Callable[[Triangle], float]:
    def run(t: Triangle) -> float:
        d = _data(t)
        _, j, k = _IDX[i]
        corner = 1.0
        for m in range(3):
            corner += cos_k(d.k2, d.X[m])
        lhs = sin_k(d.q2, d.coarea / 2.0) * corner
        rhs = -cos_k(d.q2, d.coarea / 2.0) * sin_k(d.k1, d.x[i]) * sin_k(d.k2, d.X[j]) * sin_k(
            d.k2, d.X[k]
        )
        return _rel(lhs, rhs)

    return run


def _area_tan_half_root(t: Triangle) -> float:
    d = _data(t)
    corner = 1.0
    for m in range(3):
        corner += cos_k(d.k1, d.x[m])
    lhs = sin_k(d.q1, d.area / 2.0) * corner
    rhs = cos_k(d.q1, d.area / 2.0) * 2.0 * _excess_sine_root_sides(d)
    return _rel(lhs, rhs)


def _coarea_tan_half_root(t: Triangle) -> float:
    d = _data(t)
    corner = 1.0
    for m in range(3):
        corner += cos_k(d.k2, d.X[m])
    lhs = sin_k(d.q2, d.coarea / 2.0) * corner
    rhs = cos_k(d.q2, d.coarea / 2.0) * 2.0 * _excess_sine_root_angles(d)
    return _rel(lhs, rhs)


def _area_tan_half_sides(i: int) -> Callable[[Triangle], float]:
    def run(t: Triangle) -> float:
        d = _data(t)
        _, j, k = _IDX[i]
        tj = tan_k(d.k1, d.x[j] / 2.0, POLE_SKIP_TOL)
        tk = tan_k(d.k1, d.x[k] / 2.0, POLE_SKIP_TOL)
        lhs = tan_k(d.q1, d.area / 2.0, POLE_SKIP_TOL) * (
            1.0 - d.k1 * cos_k(d.k2, d.X[i]) * tj * tk
        )
        rhs = -sin_k(d.k2, d.X[i]) * tj * tk
        return _rel(lhs, rhs)

    return run


def _coarea_tan_half_angles(i: int) -> Callable[[Triangle], float]:
    def run(t: Triangle) -> float:
        d = _data(t)
        _, j, k = _IDX[i]
        tj = tan_k(d.k2, d.X[j] / 2.0, POLE_SKIP_TOL)
        tk = tan_k(d.k2, d.X[k] / 2.0, POLE_SKIP_TOL)
        lhs = tan_k(d.q2, d.coarea / 2.0, POLE_SKIP_TOL) * (
            1.0 - d.k2 * cos_k(d.k1, d.x[i]) * tj * tk
        )
        rhs = -sin_k(d.k1, d.x[i]) * tj * tk
        return _rel(lhs, rhs)

    return run


def _area_cos_full(t: Triangle) -> float:
    d = _data(t)
    corner = 1.0
    prod = 8.0
    for m in range(3):
        corner += cos_k(d.k1, d.x[m])
        half = cos_k(d.k1, d.x[m] / 2.0)
        prod *= half * half
    lhs = cos_k(d.q1, d.area) * prod
    rhs = corner * corner - prod
    return _rel(lhs, rhs)


def _coarea_cos_full(t: Triangle) -> float:
    d = _data(t)
    corner = 1.0
    prod = 8.0
    for m in range(3):
        corner += cos_k(d.k2, d.X[m])
        half = cos_k(d.k2, d.X[m] / 2.0)
        prod *= half * half
    lhs = cos_k(d.q2, d.coarea) * prod
    rhs = corner * corner - prod
    return _rel(lhs, rhs)


def _area_sin_full(k: int) -> Callable[[Triangle], float]:
    def run(t: Triangle) -> float:
        d = _data(t)
        i, j = _OTHERS[k]
        corner = 1.0
        prod = 8.0
        for m in range(3):
            corner += cos_k(d.k1, d.x[m])
            half = cos_k(d.k1, d.x[m] / 2.0)
            prod *= half * half
        lhs = sin_k(d.q1, d.area) * prod
        rhs = -sin_k(d.k1, d.x[i]) * sin_k(d.k1, d.x[j]) * sin_k(d.k2, d.X[k]) * corner
        return _rel(lhs, rhs)

    return run


def _coarea_sin_full(k: int) -> Callable[[Triangle], float]:
    def run(t: Triangle) -> float:
        d = _data(t)
        i, j = _OTHERS[k]
        corner = 1.0
        prod = 8.0
        for m in range(3):
            corner += cos_k(d.k2, d.X[m])
            half = cos_k(d.k2, d.X[m] / 2.0)
            prod *= half * half
        lhs = sin_k(d.q2, d.coarea) * prod
        rhs = -sin_k(d.k2, d.X[i]) * sin_k(d.k2, d.X[j]) * sin_k(d.k1, d.x[k]) * corner
        return _rel(lhs, rhs)

    return run


def _area_cos_quarter_sq(t: Triangle) -> float:
    d = _data(t)
    half = cos_k(d.q1, d.area / 4.0)
    lhs = half * half
    rhs = cos_k(d.k1, d.e / 2.0)
    for m in range(3):
        lhs *= cos_k(d.k1, d.x[m] / 2.0)
        rhs *= cos_k(d.k1, d.ei[m] / 2.0)
    return _rel(lhs, rhs)


def _coarea_cos_quarter_sq(t: Triangle) -> float:
    d = _data(t)
    half = cos_k(d.q2, d.coarea / 4.0)
    lhs = half * half
    rhs = cos_k(d.k2, d.E / 2.0)
    for m in range(3):
        lhs *= cos_k(d.k2, d.X[m] / 2.0)
        rhs *= cos_k(d.k2, d.EI[m] / 2.0)
    return _rel(lhs, rhs)


def _area_sin_quarter_sq(t: Triangle) -> float:
    d = _data(t)
    half = sin_k(d.q1, d.area / 4.0)
    lhs = half * half
    rhs = -sin_k(d.q2, d.coarea / 4.0)
    for m in range(3):
        lhs *= cos_k(d.k1, d.x[m] / 2.0)
        rhs *= sin_k(d.k1, d.ei[m] / 2.0)
    return _rel(lhs, rhs)


def _coarea_sin_quarter_sq(t: Triangle) -> float:
    d = _data(t)
    half = sin_k(d.q2, d.coarea / 4.0)
    lhs = half * half
    rhs = -sin_k(d.q1, d.area / 4.0)
    for m in range(3):
        lhs *= cos_k(d.k2, d.X[m] / 2.0)
        rhs *= sin_k(d.k2, d.EI[m] / 2.0)
    return _rel(lhs, rhs)


# ---------------------------------------------------------------------------
# Registry assembly.
# ---------------------------------------------------------------------------


def _triangle_records() -> list[IdentityRecord]:
    records: list[IdentityRecord] = []

    def add(
        rid: str,
        family: str,
        description: str,
        evaluate: Callable[[Triangle], float],
        dual_id: str | None,
        trivial_when: Callable[[float, float], bool] | None = None,
    ) -> None:
        records.append(
            IdentityRecord(
                id=rid,
                family=family,
                arity="triangle",
                description=description,
                dual_id=dual_id,
                evaluate=evaluate,
                trivial_when=trivial_when,
            )
        )

    flat_sides = lambda k1, k2: k1 == 0.0
    flat_angles = lambda k1, k2: k2 == 0.0
    flat_both = lambda k1, k2: k1 == 0.0 and k2 == 0.0

    for i in range(3):
        s, g = _SIDE[i], _ANGLE[i]
        add(
            f"cosine_{s}",
            "cosine",
            f"law of cosines for side {s}",
            _cosine_side(i),
            f"dual_cosine_{g}",
            flat_sides,
        )
        add(
            f"dual_cosine_{g}",
            "dual_cosine",
            f"law of cosines for angle {g}",
            _cosine_angle(i),
            f"cosine_{s}",
            flat_angles,
        )
        add(
            f"versine_cosine_{s}",
            "cosine",
            f"versine form of the law of cosines for side {s}",
            _versine_side(i),
            f"versine_dual_cosine_{g}",
        )
        add(
            f"versine_dual_cosine_{g}",
            "dual_cosine",
            f"versine form of the law of cosines for angle {g}",
            _versine_angle(i),
            f"versine_cosine_{s}",
        )
        add(
            f"halfsum_cosine_{s}",
            "cosine",
            f"half-excess product form of the law of cosines for side {s}",
            _half_excess_side(i),
            f"halfsum_dual_cosine_{g}",
        )
        add(
            f"halfsum_dual_cosine_{g}",
            "dual_cosine",
            f"half-excess product form of the law of cosines for angle {g}",
            _half_excess_angle(i),
            f"halfsum_cosine_{s}",
        )

    add(
        "sine_theorem",
        "sine",
        "proportionality of side sines to opposite angle sines",
        _sine_theorem,
        "sine_theorem",
    )

    for i, j, _ in _PAIRS:
        add(
            f"projection_{_SIDE[i]}{_ANGLE[j]}",
            "projection",
            f"projection of side {_SIDE[i]} along angle {_ANGLE[j]}",
            _projection_side(i, j),
            f"projection_{_ANGLE[i]}{_SIDE[j]}",
        )
        add(
            f"projection_{_ANGLE[i]}{_SIDE[j]}",
            "projection",
            f"projection of angle {_ANGLE[i]} along side {_SIDE[j]}",
            _projection_angle(i, j),
            f"projection_{_SIDE[i]}{_ANGLE[j]}",
        )
        add(
            f"projection_{_SIDE[j]}{_ANGLE[i]}",
            "projection",
            f"projection of side {_SIDE[j]} along angle {_ANGLE[i]}",
            _projection_side(j, i),
            f"projection_{_ANGLE[j]}{_SIDE[i]}",
        )
        add(
            f"projection_{_ANGLE[j]}{_SIDE[i]}",
            "projection",
            f"projection of angle {_ANGLE[j]} along side {_SIDE[i]}",
            _projection_angle(j, i),
            f"projection_{_SIDE[j]}{_ANGLE[i]}",
        )

    for i, j, k in _PAIRS:
        rid = f"selfdual_{_ANGLE[i]}{_ANGLE[j]}"
        add(
            rid,
            "selfdual4",
            f"self-dual four-term balance omitting vertex {_ANGLE[k]}",
            _selfdual_four(k),
            rid,
            flat_both,
        )

    add(
        "minimal_1i",
        "minimal",
        "coarea-labeled product form of the side law",
        _minimal_sides,
        "minimal_1I",
    )
    add(
        "minimal_1I",
        "minimal",
        "area-labeled product form of the angle law",
        _minimal_angles,
        "minimal_1i",
    )

    for i in range(3):
        s, g = _SIDE[i], _ANGLE[i]
        add(
            f"euler_cos_sq_{g}",
            "euler",
            f"half-angle cosine square at vertex {g} from excess products",
            _euler_cos_sq_angle(i),
            f"euler_dual_cos_sq_{s}",
        )
        add(
            f"euler_dual_cos_sq_{s}",
            "euler",
            f"half-side cosine square of {s} from angular excess products",
            _euler_cos_sq_side(i),
            f"euler_cos_sq_{g}",
        )
        add(
            f"euler_tan_sq_{g}",
            "euler",
            f"half-angle tangent square at vertex {g} from excess products",
            _euler_tan_sq_angle(i),
            f"euler_dual_tan_sq_{s}",
        )
        add(
            f"euler_dual_tan_sq_{s}",
            "euler",
            f"half-side tangent square of {s} from angular excess products",
            _euler_tan_sq_side(i),
            f"euler_tan_sq_{g}",
        )
        add(
            f"double_euler_{g}",
            "euler",
            f"full-angle sine at vertex {g} from the excess radical",
            _double_euler_angle(i),
            f"double_euler_{s}",
        )
        add(
            f"double_euler_{s}",
            "euler",
            f"full-side sine of {s} from the angular excess radical",
            _double_euler_side(i),
            f"double_euler_{g}",
        )

    add(
        "double_euler_ratio",
        "euler",
        "common value of the side/angle sine ratio as a radical quotient",
        _double_euler_ratio,
        "double_euler_ratio",
    )

    add(
        "predelambre_cos_product",
        "delambre",
        "product of the three half-angle cosines from excess sines",
        _predelambre_cos_product,
        "predelambre_dual_cos_product",
    )
    add(
        "predelambre_dual_cos_product",
        "delambre",
        "product of the three half-side cosines from angular excess sines",
        _predelambre_dual_cos_product,
        "predelambre_cos_product",
    )
    for k in range(3):
        s, g = _SIDE[k], _ANGLE[k]
        add(
            f"predelambre_mixed_{g}",
            "delambre",
            f"two half-angle sines against the half-angle cosine at {g}",
            _predelambre_mixed(k),
            f"predelambre_dual_mixed_{s}",
        )
        add(
            f"predelambre_dual_mixed_{s}",
            "delambre",
            f"two half-side sines against the half-side cosine at {s}",
            _predelambre_dual_mixed(k),
            f"predelambre_mixed_{g}",
        )
    for i, j, k in _PAIRS:
        pair_up = f"{_ANGLE[i]}{_ANGLE[j]}"
        pair_lo = f"{_SIDE[i]}{_SIDE[j]}"
        add(
            f"predelambre_tan_pair_{pair_up}",
            "delambre",
            f"product of half-angle tangents at {pair_up} against the coarea sine",
            _predelambre_tan_pair(i, j, k),
            f"predelambre_dual_tan_pair_{pair_lo}",
        )
        add(
            f"predelambre_dual_tan_pair_{pair_lo}",
            "delambre",
            f"product of half-side tangents at {pair_lo} against the area sine",
            _predelambre_dual_tan_pair(i, j, k),
            f"predelambre_tan_pair_{pair_up}",
        )
        add(
            f"predelambre_tan_ratio_{pair_up}",
            "delambre",
            f"ratio of half-angle tangents at {pair_up} as an excess sine ratio",
            _predelambre_tan_ratio(i, j),
            f"predelambre_dual_tan_ratio_{pair_lo}",
        )
        add(
            f"predelambre_dual_tan_ratio_{pair_lo}",
            "delambre",
            f"ratio of half-side tangents at {pair_lo} as an angular excess sine ratio",
            _predelambre_dual_tan_ratio(i, j),
            f"predelambre_tan_ratio_{pair_up}",
        )

    for k in range(3):
        g = _ANGLE[k]
        add(
            f"delambre_sum_sin_{g}",
            "delambre",
            f"half-angle-sum sine analogy omitting vertex {g}",
            _delambre("sum_sin", k),
            f"delambre_dif_cos_{g}",
        )
        add(
            f"delambre_sum_cos_{g}",
            "delambre",
            f"half-angle-sum cosine analogy omitting vertex {g}",
            _delambre("sum_cos", k),
            f"delambre_sum_cos_{g}",
        )
        add(
            f"delambre_dif_sin_{g}",
            "delambre",
            f"half-angle-difference sine analogy omitting vertex {g}",
            _delambre("dif_sin", k),
            f"delambre_dif_sin_{g}",
        )
        add(
            f"delambre_dif_cos_{g}",
            "delambre",
            f"half-angle-difference cosine analogy omitting vertex {g}",
            _delambre("dif_cos", k),
            f"delambre_sum_sin_{g}",
        )

    for k in range(3):
        g = _ANGLE[k]
        add(
            f"napier_tan_sum_{g}",
            "napier",
            f"half-angle-sum tangent analogy omitting vertex {g}",
            _napier("tan_sum", k),
            f"napier_dual_tan_sum_{g}",
        )
        add(
            f"napier_tan_dif_{g}",
            "napier",
            f"half-angle-difference tangent analogy omitting vertex {g}",
            _napier("tan_dif", k),
            f"napier_dual_tan_dif_{g}",
        )
        add(
            f"napier_dual_tan_sum_{g}",
            "napier",
            f"half-side-sum tangent analogy omitting vertex {g}",
            _napier("dual_tan_sum", k),
            f"napier_tan_sum_{g}",
        )
        add(
            f"napier_dual_tan_dif_{g}",
            "napier",
            f"half-side-difference tangent analogy omitting vertex {g}",
            _napier("dual_tan_dif", k),
            f"napier_tan_dif_{g}",
        )
        add(
            f"napier_selfdual_{g}",
            "napier",
            f"self-dual tangent-quotient analogy omitting vertex {g}",
            _napier("selfdual", k),
            f"napier_selfdual_{g}",
        )

    for i in range(3):
        s, g = _SIDE[i], _ANGLE[i]
        add(
            f"cagnoli_{g}",
            "cagnoli",
            f"half-area sine from the angle at {g} and adjacent side sines",
            _cagnoli_angle(i),
            f"cagnoli_dual_{s}",
        )
        add(
            f"cagnoli_dual_{s}",
            "cagnoli",
            f"half-coarea sine from side {s} and adjacent angle sines",
            _cagnoli_side(i),
            f"cagnoli_{g}",
        )

    add(
        "lhuillier",
        "lhuillier",
        "quarter-area tangent square as a product of excess tangents",
        _lhuillier,
        "lhuillier_dual",
    )
    add(
        "lhuillier_dual",
        "lhuillier",
        "quarter-coarea tangent square as a product of angular excess tangents",
        _lhuillier_dual,
        "lhuillier",
    )

    add(
        "area_tan_quarter",
        "area_catalog",
        "quarter-area tangent as the scaled half-excess tangent",
        _area_tan_quarter,
        "coarea_tan_quarter",
    )
    add(
        "coarea_tan_quarter",
        "area_catalog",
        "quarter-coarea tangent as the scaled half-excess tangent",
        _coarea_tan_quarter,
        "area_tan_quarter",
    )
    for k in range(3):
        s, g = _SIDE[k], _ANGLE[k]
        add(
            f"area_tan_product_{g}",
            "area_catalog",
            f"quarter-area tangent as a triple excess-tangent product at {g}",
            _area_tan_product(k),
            f"coarea_tan_product_{s}",
        )
        add(
            f"coarea_tan_product_{s}",
            "area_catalog",
            f"quarter-coarea tangent as a triple excess-tangent product at {s}",
            _coarea_tan_product(k),
            f"area_tan_product_{g}",
        )
    for i in range(3):
        g = _ANGLE[i]
        rid = f"area_coarea_balance_{g}"
        add(
            rid,
            "area_catalog",
            f"area and coarea quarter tangents balanced through excess {g}",
            _area_coarea_balance(i),
            rid,
        )
    for i, j, k in _PAIRS:
        rid = f"excess_tan_ratio_{_ANGLE[i]}{_ANGLE[j]}"
        add(
            rid,
            "area_catalog",
            f"equality of paired half-excess tangent ratios at {_ANGLE[i]}{_ANGLE[j]}",
            _excess_tan_ratio(i, j),
            rid,
        )
    for i in range(3):
        s, g = _SIDE[i], _ANGLE[i]
        add(
            f"angle_excess_tan_sq_{g}",
            "area_catalog",
            f"half-excess tangent square at angle part {g}",
            _angle_excess_tan_sq(i),
            f"side_excess_tan_sq_{s}",
        )
        add(
            f"side_excess_tan_sq_{s}",
            "area_catalog",
            f"half-excess tangent square at side part {s}",
            _side_excess_tan_sq(i),
            f"angle_excess_tan_sq_{g}",
        )
    add(
        "area_cos_half",
        "area_catalog",
        "half-area cosine from the corner cosine sum",
        _area_cos_half,
        "coarea_cos_half",
    )
    add(
        "coarea_cos_half",
        "area_catalog",
        "half-coarea cosine from the corner cosine sum",
        _coarea_cos_half,
        "area_cos_half",
    )
    for i in range(3):
        s, g = _SIDE[i], _ANGLE[i]
        add(
            f"area_sin_half_product_{g}",
            "area_catalog",
            f"half-area sine from half-side sines around vertex {g}",
            _area_sin_half_product(i),
            f"coarea_sin_half_product_{s}",
        )
        add(
            f"coarea_sin_half_product_{s}",
            "area_catalog",
            f"half-coarea sine from half-angle sines around side {s}",
            _coarea_sin_half_product(i),
            f"area_sin_half_product_{g}",
        )
    add(
        "area_sin_half_root",
        "area_catalog",
        "half-area sine from the excess radical",
        _area_sin_half_root,
        "coarea_sin_half_root",
    )
    add(
        "coarea_sin_half_root",
        "area_catalog",
        "half-coarea sine from the angular excess radical",
        _coarea_sin_half_root,
        "area_sin_half_root",
    )
    for i in range(3):
        s, g = _SIDE[i], _ANGLE[i]
        add(
            f"area_tan_half_{g}",
            "area_catalog",
            f"half-area tangent from the angle at {g} over the corner sum",
            _area_tan_half(i),
            f"coarea_tan_half_{s}",
        )
        add(
            f"coarea_tan_half_{s}",
            "area_catalog",
            f"half-coarea tangent from side {s} over the corner sum",
            _coarea_tan_half(i),
            f"area_tan_half_{g}",
        )
    add(
        "area_tan_half_root",
        "area_catalog",
        "half-area tangent from the excess radical over the corner sum",
        _area_tan_half_root,
        "coarea_tan_half_root",
    )
    add(
        "coarea_tan_half_root",
        "area_catalog",
        "half-coarea tangent from the angular excess radical over the corner sum",
        _coarea_tan_half_root,
        "area_tan_half_root",
    )
    for i in range(3):
        s, g = _SIDE[i], _ANGLE[i]
        add(
            f"area_tan_half_sides_{g}",
            "area_catalog",
            f"half-area tangent from half-side tangents around vertex {g}",
            _area_tan_half_sides(i),
            f"coarea_tan_half_angles_{s}",
        )
        add(
            f"coarea_tan_half_angles_{s}",
            "area_catalog",
            f"half-coarea tangent from half-angle tangents around side {s}",
            _coarea_tan_half_angles(i),
            f"area_tan_half_sides_{g}",
        )
    add(
        "area_cos_full",
        "area_catalog",
        "full-area cosine from the corner sum and half-side cosines",
        _area_cos_full,
        "coarea_cos_full",
    )
    add(
        "coarea_cos_full",
        "area_catalog",
        "full-coarea cosine from the corner sum and half-angle cosines",
        _coarea_cos_full,
        "area_cos_full",
    )
    for k in range(3):
        s, g = _SIDE[k], _ANGLE[k]
        add(
            f"area_sin_full_{g}",
            "area_catalog",
            f"full-area sine from the angle at {g} and the corner sum",
            _area_sin_full(k),
            f"coarea_sin_full_{s}",
        )
        add(
            f"coarea_sin_full_{s}",
            "area_catalog",
            f"full-coarea sine from side {s} and the corner sum",
            _coarea_sin_full(k),
            f"area_sin_full_{g}",
        )
    add(
        "area_cos_quarter_sq",
        "area_catalog",
        "quarter-area cosine square from half-excess cosines",
        _area_cos_quarter_sq,
        "coarea_cos_quarter_sq",
    )
    add(
        "coarea_cos_quarter_sq",
        "area_catalog",
        "quarter-coarea cosine square from angular half-excess cosines",
        _coarea_cos_quarter_sq,
        "area_cos_quarter_sq",
    )
    add(
        "area_sin_quarter_sq",
        "area_catalog",
        "quarter-area sine square from half-excess sines",
        _area_sin_quarter_sq,
        "coarea_sin_quarter_sq",
    )
    add(
        "coarea_sin_quarter_sq",
        "area_catalog",
        "quarter-coarea sine square from angular half-excess sines",
        _coarea_sin_quarter_sq,
        "area_sin_quarter_sq",
    )

    return records


# ---------------------------------------------------------------------------
# Raw one-label identities.
# ---------------------------------------------------------------------------


def _raw_records() -> list[IdentityRecord]:
    S, C, V = sin_k, cos_k, versin_k

    def a1(k: float, x: float) -> float:
        c, s = C(k, x), S(k, x)
        return _rel(c * c + k * s * s, 1.0, c * c, k * s * s)

    def a2(k: float, x: float) -> float:
        return _rel(C(k, x), 1.0 - k * V(k, x), k * V(k, x))

    def a3(k: float, x: float) -> float:
        c, s = C(k, x), S(k, x)
        return _rel(C(k, 2.0 * x), c * c - k * s * s, c * c, k * s * s)

    def a4(k: float, x: float) -> float:
        return _rel(S(k, 2.0 * x), 2.0 * S(k, x) * C(k, x))

    def a5(k: float, x: float) -> float:
        h = C(k, x / 2.0)
        return _rel(h * h, (C(k, x) + 1.0) / 2.0, C(k, x) / 2.0)

    def a6(k: float, x: float) -> float:
        h = S(k, x / 2.0)
        return _rel(h * h, V(k, x) / 2.0)

    def a7(k: float, x: float) -> float:
        sh, ch = S(k, x / 2.0), C(k, x / 2.0)
        s, c = S(k, x), C(k, x)
        first = _rel(sh * (c + 1.0), s * ch, sh * c, sh)
        second = _rel(k * s * sh, (1.0 - c) * ch, ch, c * ch)
        return max(first, second)

    def a8(k: float, x: float, y: float) -> float:
        cc = C(k, x) * C(k, y)
        ss = k * S(k, y) * S(k, x)
        plus = _rel(C(k, x + y), cc - ss, cc, ss)
        minus = _rel(C(k, x - y), cc + ss, cc, ss)
        return max(plus, minus)

    def a9(k: float, x: float, y: float) -> float:
        sc = S(k, x) * C(k, y)
        cs = S(k, y) * C(k, x)
        plus = _rel(S(k, x + y), sc + cs, sc, cs)
        minus = _rel(S(k, x - y), sc - cs, sc, cs)
        return max(plus, minus)

    def a10(k: float, x: float, y: float) -> float:
        base = V(k, x) + V(k, y) - k * V(k, x) * V(k, y)
        ss = S(k, x) * S(k, y)
        plus = _rel(V(k, x + y), base + ss, V(k, x), V(k, y), k * V(k, x) * V(k, y), ss)
        minus = _rel(V(k, x - y), base - ss, V(k, x), V(k, y), k * V(k, x) * V(k, y), ss)
        return max(plus, minus)

    def a11(k: float, x: float, y: float) -> float:
        cc = C(k, x) * C(k, y)
        kss = k * S(k, x) * S(k, y)
        sc = S(k, x) * C(k, y)
        cs = S(k, y) * C(k, x)
        plus = _rel(
            S(k, x + y) * (cc - kss), C(k, x + y) * (sc + cs),
            S(k, x + y) * cc, S(k, x + y) * kss, C(k, x + y) * sc, C(k, x + y) * cs,
        )
        minus = _rel(
            S(k, x - y) * (cc + kss), C(k, x - y) * (sc - cs),
            S(k, x - y) * cc, S(k, x - y) * kss, C(k, x - y) * sc, C(k, x - y) * cs,
        )
        return max(plus, minus)

    def a12(k: float, x: float, y: float, z: float) -> float:
        p = (x + y + z) / 2.0
        worst = _rel(p - x, (-x + y + z) / 2.0)
        worst = max(worst, _rel(p - y, (x - y + z) / 2.0))
        worst = max(worst, _rel(p - z, (x + y - z) / 2.0))
        worst = max(worst, _rel((p - x) + (p - y) + (p - z), p))
        return worst

    def a13(k: float, x: float, y: float) -> float:
        return _rel(
            C(k, x) + C(k, y),
            2.0 * C(k, (x + y) / 2.0) * C(k, (x - y) / 2.0),
            C(k, x), C(k, y),
        )

    def a14(k: float, x: float, y: float) -> float:
        return _rel(
            C(k, x) - C(k, y),
            -2.0 * k * S(k, (x + y) / 2.0) * S(k, (x - y) / 2.0),
            C(k, x), C(k, y),
        )

    def a15(k: float, x: float, y: float) -> float:
        plus = _rel(
            S(k, x) + S(k, y),
            2.0 * S(k, (x + y) / 2.0) * C(k, (x - y) / 2.0),
            S(k, x), S(k, y),
        )
        minus = _rel(
            S(k, x) - S(k, y),
            2.0 * S(k, (x - y) / 2.0) * C(k, (x + y) / 2.0),
            S(k, x), S(k, y),
        )
        return max(plus, minus)

    def _half_sums(x: float, y: float, z: float) -> tuple[float, float, float, float]:
        p = (x + y + z) / 2.0
        return p, p - x, p - y, p - z

    def a16(k: float, x: float, y: float, z: float) -> float:
        p, _, _, pz = _half_sums(x, y, z)
        return _rel(C(k, x + y) + C(k, z), 2.0 * C(k, p) * C(k, pz), C(k, x + y), C(k, z))

    def a17(k: float, x: float, y: float, z: float) -> float:
        _, px, py, _ = _half_sums(x, y, z)
        return _rel(C(k, x - y) + C(k, z), 2.0 * C(k, px) * C(k, py), C(k, x - y), C(k, z))

    def a18(k: float, x: float, y: float, z: float) -> float:
        p, _, _, pz = _half_sums(x, y, z)
        return _rel(C(k, x + y) - C(k, z), -2.0 * k * S(k, p) * S(k, pz), C(k, x + y), C(k, z))

    def a19(k: float, x: float, y: float, z: float) -> float:
        _, px, py, _ = _half_sums(x, y, z)
        return _rel(C(k, x - y) - C(k, z), 2.0 * k * S(k, px) * S(k, py), C(k, x - y), C(k, z))

    def a20(k: float, x: float, y: float, z: float) -> float:
        p, _, _, pz = _half_sums(x, y, z)
        return _rel(S(k, x + y) + S(k, z), 2.0 * S(k, p) * C(k, pz), S(k, x + y), S(k, z))

    def a21(k: float, x: float, y: float, z: float) -> float:
        _, px, py, _ = _half_sums(x, y, z)
        return _rel(S(k, x - y) + S(k, z), 2.0 * S(k, py) * C(k, px), S(k, x - y), S(k, z))

    def a22(k: float, x: float, y: float, z: float) -> float:
        p, _, _, pz = _half_sums(x, y, z)
        return _rel(S(k, x + y) - S(k, z), 2.0 * S(k, pz) * C(k, p), S(k, x + y), S(k, z))

    def a23(k: float, x: float, y: float, z: float) -> float:
        _, px, py, _ = _half_sums(x, y, z)
        return _rel(S(k, x - y) - S(k, z), -2.0 * S(k, px) * C(k, py), S(k, x - y), S(k, z))

    def a24(k: float, x: float, y: float, z: float) -> float:
        p, _, _, pz = _half_sums(x, y, z)
        vp, vz = V(k, p), V(k, pz)
        return _rel(
            V(k, x + y) + V(k, z),
            2.0 * (vp + vz - k * vp * vz),
            V(k, x + y), V(k, z), vp, vz, k * vp * vz,
        )

    def a25(k: float, x: float, y: float, z: float) -> float:
        _, px, py, _ = _half_sums(x, y, z)
        vx, vy = V(k, px), V(k, py)
        return _rel(
            V(k, x - y) + V(k, z),
            2.0 * (vx + vy - k * vx * vy),
            V(k, x - y), V(k, z), vx, vy, k * vx * vy,
        )

    def a26(k: float, x: float, y: float, z: float) -> float:
        p, _, _, pz = _half_sums(x, y, z)
        return _rel(V(k, x + y) - V(k, z), 2.0 * S(k, p) * S(k, pz), V(k, x + y), V(k, z))

    def a27(k: float, x: float, y: float, z: float) -> float:
        _, px, py, _ = _half_sums(x, y, z)
        return _rel(V(k, x - y) - V(k, z), -2.0 * S(k, px) * S(k, py), V(k, x - y), V(k, z))

    def a28(k: float, x: float, y: float, z: float) -> float:
        p, px, py, pz = _half_sums(x, y, z)
        t1 = C(k, p) * S(k, pz)
        t2 = S(k, px) * C(k, py)
        return _rel(C(k, x) * S(k, y), t1 + t2, t1, t2)

    def a29(k: float, x: float, y: float, z: float) -> float:
        p, px, py, pz = _half_sums(x, y, z)
        t1 = S(k, p) * C(k, pz)
        t2 = C(k, px) * S(k, py)
        return _rel(C(k, x) * S(k, y), t1 - t2, t1, t2)

    def a30(k: float, x: float, y: float, z: float) -> float:
        p, px, py, pz = _half_sums(x, y, z)
        t1 = S(k, p) * S(k, pz)
        t2 = S(k, px) * S(k, py)
        return _rel(S(k, x) * S(k, y), t1 + t2, t1, t2)

    def a31(k: float, x: float, y: float, z: float) -> float:
        p, px, py, pz = _half_sums(x, y, z)
        t1 = C(k, p) * C(k, pz)
        t2 = C(k, px) * C(k, py)
        return _rel(k * S(k, x) * S(k, y), -t1 + t2, t1, t2)

    def a32(k: float, x: float, y: float, z: float) -> float:
        p, px, py, pz = _half_sums(x, y, z)
        halves = 4.0 * C(k, x / 2.0) * C(k, y / 2.0) * C(k, z / 2.0)
        corner = 1.0 + C(k, x) + C(k, y) + C(k, z)
        rhs = 8.0 * k * k * S(k, p / 2.0) * S(k, px / 2.0) * S(k, py / 2.0) * S(k, pz / 2.0)
        return _rel(halves - corner, rhs, halves, corner)

    def a33(k: float, x: float, y: float, z: float) -> float:
        p, px, py, pz = _half_sums(x, y, z)
        halves = 4.0 * C(k, x / 2.0) * C(k, y / 2.0) * C(k, z / 2.0)
        corner = 1.0 + C(k, x) + C(k, y) + C(k, z)
        rhs = 8.0 * C(k, p / 2.0) * C(k, px / 2.0) * C(k, py / 2.0) * C(k, pz / 2.0)
        return _rel(halves + corner, rhs, halves, corner)

    def a34(k: float, x: float, y: float, z: float) -> float:
        p, px, py, pz = _half_sums(x, y, z)
        m1 = 4.0 * k * k * S(k, p) * S(k, px) * S(k, py) * S(k, pz)
        halves = 16.0
        for u in (x, y, z):
            h = C(k, u / 2.0)
            halves *= h * h
        corner = 1.0 + C(k, x) + C(k, y) + C(k, z)
        m2 = halves - corner * corner
        cx, cy, cz = C(k, x), C(k, y), C(k, z)
        m3 = 1.0 - cx * cx - cy * cy - cz * cz + 2.0 * cx * cy * cz
        scales = (halves, corner * corner, cx * cx, cy * cy, cz * cz, 2.0 * cx * cy * cz)
        return max(
            _rel(m1, m2, *scales),
            _rel(m2, m3, *scales),
            _rel(m1, m3, *scales),
        )

    def a35(k: float, x: float, y: float, z: float) -> float:
        p, px, py, pz = _half_sums(x, y, z)
        lhs = 4.0 * C(k, p) * C(k, px) * C(k, py) * C(k, pz)
        cx, cy, cz = C(k, x), C(k, y), C(k, z)
        rhs = -1.0 + cx * cx + cy * cy + cz * cz + 2.0 * cx * cy * cz
        return _rel(lhs, rhs, cx * cx, cy * cy, cz * cz, 2.0 * cx * cy * cz)

    table: list[tuple[int, int, str, Callable[..., float]]] = [
        (1, 1, "squared cosine plus label times squared sine equals one", a1),
        (2, 1, "cosine from the versine", a2),
        (3, 1, "double-argument cosine", a3),
        (4, 1, "double-argument sine", a4),
        (5, 1, "half-argument cosine square", a5),
        (6, 1, "half-argument sine square from the versine", a6),
        (7, 1, "half-argument tangent in its two quotient forms", a7),
        (8, 2, "cosine of a sum and difference", a8),
        (9, 2, "sine of a sum and difference", a9),
        (10, 2, "versine of a sum and difference", a10),
        (11, 2, "tangent of a sum and difference, cross-multiplied", a11),
        (12, 3, "semiperimeter decompositions of three arguments", a12),
        (13, 2, "cosine sum to product", a13),
        (14, 2, "cosine difference to product", a14),
        (15, 2, "sine sum and difference to product", a15),
        (16, 3, "cosine-plus conversion with the semiperimeter", a16),
        (17, 3, "cosine-plus conversion with the complements", a17),
        (18, 3, "cosine-minus conversion with the semiperimeter", a18),
        (19, 3, "cosine-minus conversion with the complements", a19),
        (20, 3, "sine-plus conversion with the semiperimeter", a20),
        (21, 3, "sine-plus conversion with the complements", a21),
        (22, 3, "sine-minus conversion with the semiperimeter", a22),
        (23, 3, "sine-minus conversion with the complements", a23),
        (24, 3, "versine-plus conversion with the semiperimeter", a24),
        (25, 3, "versine-plus conversion with the complements", a25),
        (26, 3, "versine-minus conversion with the semiperimeter", a26),
        (27, 3, "versine-minus conversion with the complements", a27),
        (28, 3, "cosine-sine product, semiperimeter-leading form", a28),
        (29, 3, "cosine-sine product, complement-leading form", a29),
        (30, 3, "sine-sine product from semiperimeter factors", a30),
        (31, 3, "scaled sine-sine product from cosine factors", a31),
        (32, 3, "half-cosine product minus corner sum as a quartic sine product", a32),
        (33, 3, "half-cosine product plus corner sum as a quartic cosine product", a33),
        (34, 3, "three equal faces of the quartic excess product", a34),
        (35, 3, "quartic cosine product from squared cosines", a35),
    ]

    records = []
    for num, nargs, description, fn in table:
        records.append(
            IdentityRecord(
                id=f"A{num}",
                family="appendix",
                arity="raw",
                description=description,
                dual_id=None,
                nargs=nargs,
                evaluate=fn,
            )
        )
    return records


def _freeze(records: Iterable[IdentityRecord]) -> Mapping[str, IdentityRecord]:
    out: dict[str, IdentityRecord] = {}
    for rec in records:
        if rec.id in out:
            raise ValueError(f"duplicate identity id {rec.id!r}")
        out[rec.id] = rec
    return MappingProxyType(out)


#: All triangle-arity records, keyed by id.  Immutable.
REGISTRY: Mapping[str, IdentityRecord] = _freeze(_triangle_records())

#: All raw one-label records (A1..A35), keyed by id.  Immutable.
APPENDIX_REGISTRY: Mapping[str, IdentityRecord] = _freeze(_raw_records())

# Consistency of the dual pairing: every dual_id must resolve, and must
# point back.
for _rec in REGISTRY.values():
    _dual = REGISTRY[_rec.dual_id]
    if _dual.dual_id != _rec.id:
        raise AssertionError(f"dual pairing broken at {_rec.id} -> {_rec.dual_id}")
del _rec, _dual


def check(identity_id: str, t: Triangle) -> float:
    """Residual of one triangle law on a measured triangle.

    Raises:
        UnknownIdentityError: the id is not a triangle-arity record.
        PoleError: the law evaluates a tangent at a quadrant value.
    """
    rec = REGISTRY.get(identity_id)
    if rec is None:
        raise UnknownIdentityError(
            f"unknown triangle identity {identity_id!r}; "
            f"registry holds {len(REGISTRY)} records"
        )
    return rec.evaluate(t)


def check_appendix(identity_id: str, kappa: float, *args: float) -> float:
    """Residual of one raw identity at label kappa and numeric arguments.

    Ids are "A1" through "A35"; a dotted spelling like "A.19" is accepted.

    Raises:
        UnknownIdentityError: the id names no raw record.
        ValueError: wrong number of arguments for the record.
    """
    rec = APPENDIX_REGISTRY.get(identity_id.replace(".", ""))
    if rec is None:
        raise UnknownIdentityError(f"unknown raw identity {identity_id!r}")
    if len(args) != rec.nargs:
        raise ValueError(
            f"{rec.id} takes {rec.nargs} argument(s) after kappa, got {len(args)}"
        )
    return rec.evaluate(kappa, *args)


# ---------------------------------------------------------------------------
# Suite runner.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class IdentityRow:
    """Result of one record over a sample batch."""

    identity_id: str
    family: str
    samples: int
    max_residual: float
    status: str  # "pass" | "fail" | "skipped" | "degenerate-pass"

    def to_dict(self) -> dict[str, object]:
        return {
            "identity_id": self.identity_id,
            "family": self.family,
            "samples": self.samples,
            "max_residual": self.max_residual,
            "status": self.status,
        }


@dataclass(frozen=True)
class IdentityReport:
    """Full suite outcome for one geometry."""

    geom: Geometry
    n: int
    seed: int
    tol: float
    rows: tuple[IdentityRow, ...]

    @property
    def all_pass(self) -> bool:
        return all(r.status != "fail" for r in self.rows)

    @property
    def max_residual(self) -> float:
        evaluated = [r.max_residual for r in self.rows if r.status != "skipped"]
        return max(evaluated) if evaluated else 0.0

    def failures(self) -> tuple[IdentityRow, ...]:
        return tuple(r for r in self.rows if r.status == "fail")

    def skipped(self) -> tuple[IdentityRow, ...]:
        return tuple(r for r in self.rows if r.status == "skipped")

    def to_dict(self) -> dict[str, object]:
        return {
            "k1": self.geom.k1,
            "k2": self.geom.k2,
            "n": self.n,
            "seed": self.seed,
            "tol": self.tol,
            "rows": [r.to_dict() for r in self.rows],
        }


def _sample_triangles(g: Geometry, n: int, rng: random.Random) -> list[Triangle]:
    """Draw n valid triangles via the group-level two-sides-and-angle build."""
    side_hi = 2.2
    if g.k1 > 0.0:
        side_hi = min(side_hi, 0.95 * quadrant(g.k1))
    angle_hi = 2.2
    if g.k2 > 0.0:
        angle_hi = min(angle_hi, 0.9 * math.pi / math.sqrt(g.k2))
    out: list[Triangle] = []
    attempts = 0
    limit = 200 * max(n, 1)
    while len(out) < n:
        attempts += 1
        if attempts > limit:
            raise ExistenceError(
                f"could not draw {n} triangles for labels "
                f"({g.k1}, {g.k2}) in {limit} attempts"
            )
        a = rng.uniform(0.05, side_hi)
        b = rng.uniform(0.05, side_hi)
        C = rng.uniform(0.1, angle_hi)
        try:
            t, _ = make_triangle_sas(g, a, C, b)
        except (ExistenceError, DegenerateError, KindError, RangeError, PoleError):
            continue
        out.append(t)
    return out


def run_suite(
    g: Geometry,
    n: int = 100,
    seed: int = 0,
    tol: float = 1e-9,
) -> IdentityReport:
    """Evaluate every triangle record on n sampled triangles.

    Sampling is deterministic in (g, n, seed) and independent of tol.  Each
    record reports its worst residual; records whose law degenerates to an
    identically zero residual at these labels report "degenerate-pass", and
    records that hit a tangent pole on every sample report "skipped".
    """
    if n <= 0:
        raise ValueError(f"n must be positive, got {n}")
    rng = random.Random(seed)
    triangles = _sample_triangles(g, n, rng)
    rows: list[IdentityRow] = []
    for rec in REGISTRY.values():
        trivial = rec.trivial_when is not None and rec.trivial_when(g.k1, g.k2)
        worst = 0.0
        evaluated = 0
        for t in triangles:
            try:
                r = rec.evaluate(t)
            except PoleError:
                continue
            evaluated += 1
            if r > worst:
                worst = r
        if evaluated == 0:
            status = "skipped"
        elif trivial:
            status = "degenerate-pass"
        elif worst <= tol:
            status = "pass"
        else:
            status = "fail"
        rows.append(
            IdentityRow(
                identity_id=rec.id,
                family=rec.family,
                samples=evaluated,
                max_residual=worst,
                status=status,
            )
        )
    return IdentityReport(geom=g, n=n, seed=seed, tol=tol, rows=tuple(rows))


@dataclass(frozen=True)
class AppendixReport:
    """Outcome of the raw one-label catalog over random (kappa, args) draws."""

    n: int
    seed: int
    tol: float
    kappa_bound: float
    arg_bound: float
    rows: tuple[IdentityRow, ...]

    @property
    def all_pass(self) -> bool:
        return all(r.status != "fail" for r in self.rows)

    @property
    def max_residual(self) -> float:
        return max((r.max_residual for r in self.rows), default=0.0)

    def failures(self) -> tuple[IdentityRow, ...]:
        return tuple(r for r in self.rows if r.status == "fail")

    def to_dict(self) -> dict[str, object]:
        return {
            "n": self.n,
            "seed": self.seed,
            "tol": self.tol,
            "kappa_bound": self.kappa_bound,
            "arg_bound": self.arg_bound,
            "rows": [r.to_dict() for r in self.rows],
        }


def run_appendix_suite(
    n: int = 100,
    seed: int = 0,
    tol: float = 1e-12,
    kappa_bound: float = 4.0,
    arg_bound: float = 3.0,
) -> AppendixReport:
    """Evaluate every raw record on n random (kappa, arguments) draws.

    Each draw picks a label uniform in [-kappa_bound, kappa_bound] and the
    record's arguments uniform in [-arg_bound, arg_bound]; the same n draws
    (per argument count) feed every record, so the run is deterministic in
    (n, seed) and independent of tol.
    """
    if n <= 0:
        raise ValueError(f"n must be positive, got {n}")
    rng = random.Random(seed)
    draws = [
        (
            rng.uniform(-kappa_bound, kappa_bound),
            tuple(rng.uniform(-arg_bound, arg_bound) for _ in range(3)),
        )
        for _ in range(n)
    ]
    rows: list[IdentityRow] = []
    for rec in APPENDIX_REGISTRY.values():
        worst = 0.0
        for kappa, args in draws:
            r = rec.evaluate(kappa, *args[: rec.nargs])
            if r > worst:
                worst = r
        rows.append(
            IdentityRow(
                identity_id=rec.id,
                family=rec.family,
                samples=n,
                max_residual=worst,
                status="pass" if worst <= tol else "fail",
            )
        )
    return AppendixReport(n=n, seed=seed, tol=tol, kappa_bound=kappa_bound,
                          arg_bound=arg_bound, rows=tuple(rows))


# ---------------------------------------------------------------------------
# Classical per-geometry forms.
# ---------------------------------------------------------------------------

_CLASSICAL_KEYS = (
    "cosine_a",
    "cosine_b",
    "cosine_c",
    "sine",
    "dual_cosine_A",
    "dual_cosine_B",
    "dual_cosine_C",
)


def classical_residuals(t: Triangle) -> dict[str, float]:
    """Residuals of the seven basic laws in their classical per-geometry form.

    Unlike the registry records, these use the familiar circular/hyperbolic/
    linear expressions directly (cos/cosh/squares), providing a check of the
    labeled machinery that shares none of its code.  Defined only for the
    nine unit-label geometries.

    Returns a dict with keys cosine_a/b/c, sine, dual_cosine_A/B/C.
    """
    k1, k2 = t.geom.k1, t.geom.k2
    if k1 not in (-1.0, 0.0, 1.0) or k2 not in (-1.0, 0.0, 1.0):
        raise ValueError(
            f"classical forms are defined for unit labels only, got ({k1}, {k2})"
        )
    a, b, c = t.a, t.b, t.c
    A, B, C = t.A, t.B, t.C

    def fn(k: float) -> tuple[Callable[[float], float], Callable[[float], float]]:
        if k > 0.0:
            return math.cos, math.sin
        if k < 0.0:
            return math.cosh, math.sinh
        return (lambda u: 1.0), (lambda u: u)

    cos1, sin1 = fn(k1)
    cos2, sin2 = fn(k2)

    out: dict[str, float] = {}

    # Side laws: additive when the angular label vanishes, quadratic when
    # only the side label does, three-cosine when both labels are curved.
    if k2 == 0.0:
        out["cosine_a"] = _rel(a, b + c)
        out["cosine_b"] = _rel(b, a - c)
        out["cosine_c"] = _rel(c, a - b)
    elif k1 == 0.0:
        out["cosine_a"] = _rel(a * a, b * b + c * c + 2.0 * b * c * cos2(A))
        out["cosine_b"] = _rel(b * b, a * a + c * c - 2.0 * a * c * cos2(B))
        out["cosine_c"] = _rel(c * c, a * a + b * b - 2.0 * a * b * cos2(C))
    else:
        out["cosine_a"] = _rel(
            cos1(a), cos1(b) * cos1(c) - k1 * sin1(b) * sin1(c) * cos2(A)
        )
        out["cosine_b"] = _rel(
            cos1(b), cos1(a) * cos1(c) + k1 * sin1(a) * sin1(c) * cos2(B)
        )
        out["cosine_c"] = _rel(
            cos1(c), cos1(a) * cos1(b) + k1 * sin1(a) * sin1(b) * cos2(C)
        )

    out["sine"] = max(
        _rel(sin1(a) * sin2(B), sin1(b) * sin2(A)),
        _rel(sin1(b) * sin2(C), sin1(c) * sin2(B)),
        _rel(sin1(a) * sin2(C), sin1(c) * sin2(A)),
    )

    if k1 == 0.0:
        out["dual_cosine_A"] = _rel(A, B + C)
        out["dual_cosine_B"] = _rel(B, A - C)
        out["dual_cosine_C"] = _rel(C, A - B)
    elif k2 == 0.0:
        out["dual_cosine_A"] = _rel(A * A, B * B + C * C + 2.0 * B * C * cos1(a))
        out["dual_cosine_B"] = _rel(B * B, A * A + C * C - 2.0 * A * C * cos1(b))
        out["dual_cosine_C"] = _rel(C * C, A * A + B * B - 2.0 * A * B * cos1(c))
    else:
        out["dual_cosine_A"] = _rel(
            cos2(A), cos2(B) * cos2(C) - k2 * sin2(B) * sin2(C) * cos1(a)
        )
        out["dual_cosine_B"] = _rel(
            cos2(B), cos2(A) * cos2(C) + k2 * sin2(A) * sin2(C) * cos1(b)
        )
        out["dual_cosine_C"] = _rel(
            cos2(C), cos2(A) * cos2(B) + k2 * sin2(A) * sin2(B) * cos1(c)
        )

    assert tuple(out.keys()) == _CLASSICAL_KEYS
    return out
