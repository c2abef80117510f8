"""Triangles as (1+1)D spacetime kinematics in conventional units.

A geometry with k2 <= 0 reads as a homogeneous spacetime: first-kind
sides are proper times along the three worldlines of a triangular loop,
angles are relative rapidities, k1 = curvature_sign / tau**2 for a
universe time radius tau, and k2 = -1/c**2 for the relativistic
constant c (k2 = 0 is the absolute-time limit c = infinite).

The labeled trigonometric engine needs no unit conversion — the labels
carry the dimensions — so :class:`SpacetimeUnits` is bookkeeping: it
builds the geometry from (tau, c, curvature_sign), names it, and scales
unit-label triangles into conventional units.  The classical residual
evaluator writes the familiar explicit-tau-and-c area/coarea formulas of
the six spacetimes and checks them against engine triangles, and
:func:`twin_defect` measures the traveling-twin proper-time gap, which
equals -k2 times the coarea.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import KindError
from .geometry import Geometry, geometry_name, named_geometry
from .triangle import Triangle

__all__ = [
    "SpacetimeUnits",
    "SPACETIME_NAMES",
    "spacetime_units",
    "scale_to_units",
    "twin_defect",
    "classical_spacetime_residuals",
    "galilean_motion_residuals",
]

#: The six spacetimes: canonical geometry name -> (curvature_sign, c finite?)
SPACETIME_NAMES: dict[str, tuple[int, bool]] = {
    "co-hyperbolic": (+1, True),     # anti-de Sitter
    "co-euclidean": (+1, False),     # oscillating Newton-Hooke
    "minkowskian": (0, True),
    "galilean": (0, False),
    "doubly-hyperbolic": (-1, True),  # de Sitter
    "co-minkowskian": (-1, False),   # expanding Newton-Hooke
}


@dataclass(frozen=True)
class SpacetimeUnits:
    """Universe time radius, relativistic constant, and curvature sign.

    ``tau`` and ``c`` are positive reals or ``math.inf``; the labels are
    k1 = curvature_sign / tau**2 and k2 = -1/c**2, with the infinite
    values giving the flat limits exactly.
    """

    tau: float = math.inf
    c: float = math.inf
    curvature_sign: int = 0

    def __post_init__(self) -> None:
        tau, c = float(self.tau), float(self.c)
        if math.isnan(tau) or tau <= 0.0:
            raise ValueError(f"time radius tau must be positive or inf, got {self.tau}")
        if math.isnan(c) or c <= 0.0:
            raise ValueError(f"relativistic constant c must be positive or inf, got {self.c}")
        if self.curvature_sign not in (-1, 0, 1):
            raise ValueError(f"curvature_sign must be -1, 0 or +1, got {self.curvature_sign}")
        object.__setattr__(self, "tau", tau)
        object.__setattr__(self, "c", c)

    @property
    def k1(self) -> float:
        if self.curvature_sign == 0 or math.isinf(self.tau):
            return 0.0
        return self.curvature_sign / (self.tau * self.tau)

    @property
    def k2(self) -> float:
        if math.isinf(self.c):
            return 0.0
        return -1.0 / (self.c * self.c)

    def geometry(self) -> Geometry:
        return Geometry(self.k1, self.k2)

    def side_scale(self) -> float:
        """Side units per unit-label side: tau when curvature is on."""
        return self.tau if self.k1 != 0.0 else 1.0

    def angle_scale(self) -> float:
        """Rapidity units per unit-label angle: c when relativity is on."""
        return self.c if self.k2 != 0.0 else 1.0


def spacetime_units(name: str, tau: float = 1.0, c: float = 1.0) -> SpacetimeUnits:
    """Units for a named spacetime (aliases accepted, e.g. anti-de-sitter).

    ``tau`` is ignored (forced infinite) for the flat spacetimes and ``c``
    for the absolute-time ones, so ``spacetime_units("galilean")`` works
    with the defaults.

    Raises:
        KindError: the name denotes a geometry with k2 > 0, which has no
            kinematical reading.
        KeyError: the name is not a known geometry at all.
    """
    g = named_geometry(name)
    canonical = geometry_name(g)
    if canonical not in SPACETIME_NAMES:
        raise KindError(
            f"{name!r} has a positive angle label; spacetimes need k2 <= 0"
        )
    sign, relative_time = SPACETIME_NAMES[canonical]
    return SpacetimeUnits(
        tau=tau if sign != 0 else math.inf,
        c=c if relative_time else math.inf,
        curvature_sign=sign,
    )


def scale_to_units(t: Triangle, units: SpacetimeUnits) -> Triangle:
    """Re-express a unit-label triangle in conventional units.

    ``t`` must live at the unit labels matching ``units`` (k1 equal to the
    curvature sign, k2 in {0, -1}); sides multiply by tau and angles by c,
    landing on the geometry (sign/tau**2, -1/c**2) with every labeled
    function value unchanged.
    """
    expected = Geometry(float(units.curvature_sign), -1.0 if units.k2 != 0.0 else 0.0)
    if t.geom != expected:
        raise ValueError(
            f"triangle lives at {t.geom.label()}, expected unit labels {expected.label()}"
        )
    s, w = units.side_scale(), units.angle_scale()
    return Triangle(geom=units.geometry(), a=s * t.a, b=s * t.b, c=s * t.c,
                    A=w * t.A, B=w * t.B, C=w * t.C)


def twin_defect(t: Triangle) -> float:
    """Proper-time gap a - (b + c) between the resting and traveling twins.

    Positive in the relative-time spacetimes (the traveler ages less),
    exactly zero in the absolute-time ones, and equal to minus the angle
    label times the coarea.

    Raises:
        KindError: the triangle's angle label is positive (no time-like
            reading, so no twins).
    """
    if t.geom.k2 > 0.0:
        raise KindError(
            f"twin defect needs an angle label <= 0, got k2={t.geom.k2}"
        )
    return t.a - t.b - t.c


def _rel(lhs: float, rhs: float) -> float:
    return abs(lhs - rhs) / max(1.0, abs(lhs), abs(rhs))


def _chain(members: list[float]) -> float:
    return max(_rel(members[0], m) for m in members[1:])


def classical_spacetime_residuals(t: Triangle, units: SpacetimeUnits) -> dict[str, float]:
    """Residuals of the classical area/coarea formulas with explicit tau, c.

    Evaluates, in the conventional units of the six spacetimes, the
    product formula for the area from two sides and the included
    rapidity (``cagnoli``), the four-half-parts product formula
    (``heron_lhuillier``), and the chain relating area to coarea through
    the half-perimeter parts (``area_coarea``).  Each value is the worst
    normalized residual of its row.  All three rows are written with
    plain circular/hyperbolic functions of arguments scaled by tau and c,
    independent of the labeled machinery they are checked against.

    Raises:
        ValueError: the triangle does not live at the units' geometry, or
            the angle label is positive.
    """
    if t.geom != units.geometry():
        raise ValueError(
            f"triangle lives at {t.geom.label()}, units give {units.geometry().label()}"
        )
    tau, c = units.tau, units.c
    sign = units.curvature_sign if units.k1 != 0.0 else 0
    relative_time = units.k2 != 0.0
    ta, tb, tc = t.a, t.b, t.c
    tp = (ta + tb + tc) / 2.0
    xp = (t.A + t.B + t.C) / 2.0
    area = t.area()
    coarea = t.coarea()

    out: dict[str, float] = {}
    if sign == +1 and relative_time:
        # anti-de Sitter (+1/tau^2, -1/c^2)
        out["cagnoli"] = _rel(
            math.sinh(area / (2.0 * tau * tau * c))
            * 4.0 * math.cos(ta / (2 * tau)) * math.cos(tb / (2 * tau)) * math.cos(tc / (2 * tau)),
            math.sin(ta / tau) * math.sin(tb / tau) * math.sinh(t.C / c),
        )
        out["heron_lhuillier"] = _rel(
            math.tanh(area / (4.0 * tau * tau * c)) ** 2,
            -math.tan(tp / (2 * tau)) * math.tan((tp - ta) / (2 * tau))
            * math.tan((tp - tb) / (2 * tau)) * math.tan((tp - tc) / (2 * tau)),
        )
        out["area_coarea"] = _chain([
            math.tanh(area / (4.0 * tau * tau * c)) / math.tan(coarea / (4.0 * tau * c * c)),
            math.tan(tp / (2 * tau)) / math.tanh(xp / (2 * c)),
            math.tan((tp - tb) / (2 * tau)) / math.tanh((xp - t.B) / (2 * c)),
            math.tan((tp - tc) / (2 * tau)) / math.tanh((xp - t.C) / (2 * c)),
        ])
    elif sign == +1:
        # oscillating Newton-Hooke (+1/tau^2, 0)
        out["cagnoli"] = _rel(
            area * 2.0 * math.cos(ta / (2 * tau)) * math.cos(tb / (2 * tau)) * math.cos(tc / (2 * tau)),
            tau * tau * math.sin(ta / tau) * math.sin(tb / tau) * t.C,
        )
        out["heron_lhuillier"] = _rel(
            area * area,
            4.0 * coarea * tau ** 3 * math.tan(tp / (2 * tau))
            * math.tan((tp - tb) / (2 * tau)) * math.tan((tp - tc) / (2 * tau)),
        )
        out["area_coarea"] = _chain([
            area / coarea,
            tau * math.tan(tp / (2 * tau)) / (xp / 2.0),
            tau * math.tan((tp - tb) / (2 * tau)) / ((xp - t.B) / 2.0),
            tau * math.tan((tp - tc) / (2 * tau)) / ((xp - t.C) / 2.0),
        ])
    elif sign == 0 and relative_time:
        # minkowskian (0, -1/c^2)
        out["cagnoli"] = _rel(area, 0.5 * ta * tb * c * math.sinh(t.C / c))
        out["heron_lhuillier"] = _rel(
            area * area,
            -c * c * tp * (tp - ta) * (tp - tb) * (tp - tc),
        )
        out["area_coarea"] = _chain([
            area / coarea,
            (tp / 2.0) / (c * math.tanh(xp / (2 * c))),
            ((tp - tb) / 2.0) / (c * math.tanh((xp - t.B) / (2 * c))),
            ((tp - tc) / 2.0) / (c * math.tanh((xp - t.C) / (2 * c))),
        ])
    elif sign == 0:
        # galilean (0, 0)
        out["cagnoli"] = _rel(area, 0.5 * ta * tb * t.C)
        out["heron_lhuillier"] = _rel(
            area * area,
            0.5 * coarea * tp * (tp - tb) * (tp - tc),
        )
        out["area_coarea"] = _chain([
            area / coarea,
            tp / xp,
            (tp - tb) / (xp - t.B),
            (tp - tc) / (xp - t.C),
        ])
    elif relative_time:
        # de Sitter (-1/tau^2, -1/c^2)
        out["cagnoli"] = _rel(
            math.sinh(area / (2.0 * tau * tau * c))
            * 4.0 * math.cosh(ta / (2 * tau)) * math.cosh(tb / (2 * tau)) * math.cosh(tc / (2 * tau)),
            math.sinh(ta / tau) * math.sinh(tb / tau) * math.sinh(t.C / c),
        )
        out["heron_lhuillier"] = _rel(
            math.tanh(area / (4.0 * tau * tau * c)) ** 2,
            -math.tanh(tp / (2 * tau)) * math.tanh((tp - ta) / (2 * tau))
            * math.tanh((tp - tb) / (2 * tau)) * math.tanh((tp - tc) / (2 * tau)),
        )
        out["area_coarea"] = _chain([
            math.tanh(area / (4.0 * tau * tau * c)) / math.tanh(coarea / (4.0 * tau * c * c)),
            math.tanh(tp / (2 * tau)) / math.tanh(xp / (2 * c)),
            math.tanh((tp - tb) / (2 * tau)) / math.tanh((xp - t.B) / (2 * c)),
            math.tanh((tp - tc) / (2 * tau)) / math.tanh((xp - t.C) / (2 * c)),
        ])
    else:
        # expanding Newton-Hooke (-1/tau^2, 0)
        out["cagnoli"] = _rel(
            area * 2.0 * math.cosh(ta / (2 * tau)) * math.cosh(tb / (2 * tau)) * math.cosh(tc / (2 * tau)),
            tau * tau * math.sinh(ta / tau) * math.sinh(tb / tau) * t.C,
        )
        out["heron_lhuillier"] = _rel(
            area * area,
            4.0 * coarea * tau ** 3 * math.tanh(tp / (2 * tau))
            * math.tanh((tp - tb) / (2 * tau)) * math.tanh((tp - tc) / (2 * tau)),
        )
        out["area_coarea"] = _chain([
            area / coarea,
            tau * math.tanh(tp / (2 * tau)) / (xp / 2.0),
            tau * math.tanh((tp - tb) / (2 * tau)) / ((xp - t.B) / 2.0),
            tau * math.tanh((tp - tc) / (2 * tau)) / ((xp - t.C) / 2.0),
        ])
    return out


def galilean_motion_residuals(t: Triangle) -> dict[str, float]:
    """The purely linear laws of galilean kinematics, as residuals.

    Absolute time (a = b + c), additivity of non-concurrent rapidities
    (A = B + C), side/rapidity proportionality (a/A = b/B = c/C,
    cross-multiplied), and the bilinear area and coarea formulas.

    Raises:
        ValueError: the triangle is not galilean (both labels zero).
    """
    if t.geom.k1 != 0.0 or t.geom.k2 != 0.0:
        raise ValueError(f"galilean laws need both labels zero, got {t.geom.label()}")
    return {
        "absolute_time": _rel(t.a, t.b + t.c),
        "rapidity_additivity": _rel(t.A, t.B + t.C),
        "proportionality": max(
            _rel(t.a * t.B, t.b * t.A), _rel(t.a * t.C, t.c * t.A)
        ),
        "area": _rel(t.area(), 0.5 * t.A * t.b * t.c),
        "coarea": _rel(t.coarea(), 0.5 * t.a * t.B * t.C),
    }
