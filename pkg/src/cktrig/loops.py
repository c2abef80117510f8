"""Matrix-level verification of the triangle loop identities.

A triangle with vertex C at the origin ties its six measurements into
literal identities of the motion group:

* **basic identity** — the ordered product of six fiducial exponentials
  ``exp_p1(-a) exp_j12(C) exp_p1(b) exp_j12(-A) exp_p1(c) exp_j12(B)``
  is the identity matrix;
* **point loops** — the three translations along the oriented sides
  compose to a rotation about the base vertex by minus the angular
  excess ``Delta = -A + B + C``;
* **line loops** — dually, the three rotations about the vertices
  compose to a translation along the base side by minus the lateral
  excess ``delta = -a + b + c``.

The per-side translation maps and per-vertex rotation maps are the two
fiducial one-parameter subgroups (translation along the first axis, and
rotation fixing the origin — i.e. the side ``a`` and the vertex ``C``
of the canonical placement) conjugated by ordered products of fiducial
exponentials.  Conjugator inverses are formed exactly as the reversed
products with negated arguments, so no numerical matrix inversion
enters any residual.

Every residual is the max-abs entry of (product − expected), normalized
by the largest entry magnitude appearing among the factors: boost-like
entries grow exponentially with the arguments and would otherwise make
a fixed absolute tolerance meaningless.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Iterable

import numpy as np

from .errors import ExtractionError
from .geometry import Geometry
from .group import DEFAULT_ISOMETRY_TOL, exp_j12, exp_p1, is_isometry
from .triangle import Triangle
from .trig import arc_k

__all__ = [
    "ConjugatedGenerators",
    "conjugated_generators",
    "basic_identity_residual",
    "point_loop_residual",
    "line_loop_residual",
    "compatibility_residuals",
    "holonomy_angle",
    "loop_report",
]

ExponentialMap = Callable[[float], np.ndarray]

_POINT_BASES = ("A", "B", "C")
_LINE_BASES = ("a", "b", "c")


def _translation_generator(g: Geometry) -> np.ndarray:
    """Derivative at 0 of exp_p1: the fiducial translation generator."""
    return np.array([[0.0, -g.k1, 0.0], [1.0, 0.0, 0.0], [0.0, 0.0, 0.0]])


def _rotation_generator(g: Geometry) -> np.ndarray:
    """Derivative at 0 of exp_j12: the fiducial rotation generator."""
    return np.array([[0.0, 0.0, 0.0], [0.0, 0.0, -g.k2], [0.0, 1.0, 0.0]])


@dataclass(frozen=True)
class ConjugatedGenerators:
    """The six one-parameter subgroup maps attached to a triangle.

    ``Pa``, ``Pb``, ``Pc`` translate along the sides a = CB, b = CA,
    c = AB; ``JA``, ``JB``, ``JC`` rotate about the vertices.  Each is
    conjugate to the fiducial ``exp_p1`` or ``exp_j12`` (``Pa`` and
    ``JC`` *are* the fiducials: the canonical triangle placement puts C
    at the origin and the side a on the first axis).  The conjugator
    pairs (W, W^-1 as exact reversed negated products) are kept so the
    compatibility checks can reuse them.
    """

    geom: Geometry
    Pa: ExponentialMap
    Pb: ExponentialMap
    Pc: ExponentialMap
    JA: ExponentialMap
    JB: ExponentialMap
    JC: ExponentialMap
    _conjugators: dict = field(repr=False, default_factory=dict)

    def map_for(self, name: str) -> ExponentialMap:
        """Look up a map by its field name ("Pa" ... "JC")."""
        return getattr(self, name)

    def generator_matrix(self, name: str) -> np.ndarray:
        """The conjugated Lie-algebra matrix of the named generator."""
        w, wi = self._conjugators[name]
        g = self.geom
        fid = _translation_generator(g) if name.startswith("P") else _rotation_generator(g)
        return w @ fid @ wi


def conjugated_generators(t: Triangle) -> ConjugatedGenerators:
    """Build the six exponential maps for a triangle's loop identities.

    With C at the origin and B on the positive first axis, ``Pa`` and
    ``JC`` are the fiducial maps, and the rest are conjugates by the
    ordered products that carry the fiducial flag onto each side/vertex:
    W(Pb) = exp_j12(C); W(JA) = exp_j12(C) exp_p1(b);
    W(Pc) = exp_j12(C) exp_p1(b) exp_j12(-A);
    W(JB) = exp_j12(C) exp_p1(b) exp_j12(-A) exp_p1(c).
    """
    g = t.geom
    identity = np.eye(3)

    # Overflowed inputs propagate inf/NaN entries; those surface later as
    # NaN residuals or an ExtractionError, so the arithmetic stays silent.
    with np.errstate(invalid="ignore", over="ignore"):
        w_pb = exp_j12(g, t.C)
        wi_pb = exp_j12(g, -t.C)
        w_ja = w_pb @ exp_p1(g, t.b)
        wi_ja = exp_p1(g, -t.b) @ wi_pb
        w_pc = w_ja @ exp_j12(g, -t.A)
        wi_pc = exp_j12(g, t.A) @ wi_ja
        w_jb = w_pc @ exp_p1(g, t.c)
        wi_jb = exp_p1(g, -t.c) @ wi_pc

    conjugators = {
        "Pa": (identity, identity),
        "JC": (identity, identity),
        "Pb": (w_pb, wi_pb),
        "JA": (w_ja, wi_ja),
        "Pc": (w_pc, wi_pc),
        "JB": (w_jb, wi_jb),
    }

    def conjugate(w: np.ndarray, wi: np.ndarray, fiducial: ExponentialMap) -> ExponentialMap:
        def mapped(s: float) -> np.ndarray:
            with np.errstate(invalid="ignore", over="ignore"):
                return w @ fiducial(s) @ wi

        return mapped

    def fid_translation(s: float) -> np.ndarray:
        return exp_p1(g, s)

    def fid_rotation(s: float) -> np.ndarray:
        return exp_j12(g, s)

    return ConjugatedGenerators(
        geom=g,
        Pa=fid_translation,
        Pb=conjugate(w_pb, wi_pb, fid_translation),
        Pc=conjugate(w_pc, wi_pc, fid_translation),
        JA=conjugate(w_ja, wi_ja, fid_rotation),
        JB=conjugate(w_jb, wi_jb, fid_rotation),
        JC=fid_rotation,
        _conjugators=conjugators,
    )


def _normalized_residual(factors: Iterable[np.ndarray], expected: np.ndarray) -> float:
    """Max-abs entry of (ordered product − expected) over the factor scale."""
    factors = list(factors)
    product = np.eye(3)
    for f in factors:
        product = product @ f
    scale = max(1.0, float(np.abs(expected).max()))
    for f in factors:
        scale = max(scale, float(np.abs(f).max()))
    return float(np.abs(product - expected).max()) / scale


def basic_identity_residual(t: Triangle) -> float:
    """Residual of the six-factor closure against the identity matrix.

    Evaluates ``exp_p1(-a) exp_j12(C) exp_p1(b) exp_j12(-A) exp_p1(c)
    exp_j12(B)`` and returns the scale-normalized max-abs deviation from
    the identity; zero exactly when the six measurements close the loop.
    """
    g = t.geom
    factors = (
        exp_p1(g, -t.a),
        exp_j12(g, t.C),
        exp_p1(g, t.b),
        exp_j12(g, -t.A),
        exp_p1(g, t.c),
        exp_j12(g, t.B),
    )
    return _normalized_residual(factors, np.eye(3))


def point_loop_residual(t: Triangle, base: str) -> float:
    """Residual of the side-translation loop against the base rotation.

    The three translations multiply, in the cyclic order that starts the
    loop at the chosen base vertex, to a rotation about that vertex by
    minus the angular excess:

    * base "C": ``Pa(-a) Pc(c) Pb(b)  = JC(-Delta)``
    * base "A": ``Pb(b)  Pa(-a) Pc(c) = JA(-Delta)``
    * base "B": ``Pc(c)  Pb(b)  Pa(-a) = JB(-Delta)``
    """
    if base not in _POINT_BASES:
        raise ValueError(f"point-loop base must be one of {_POINT_BASES}, got {base!r}")
    gens = conjugated_generators(t)
    minus_excess = -t.excesses().angle_excess
    fa, fc, fb = gens.Pa(-t.a), gens.Pc(t.c), gens.Pb(t.b)
    if base == "C":
        return _normalized_residual((fa, fc, fb), gens.JC(minus_excess))
    if base == "A":
        return _normalized_residual((fb, fa, fc), gens.JA(minus_excess))
    return _normalized_residual((fc, fb, fa), gens.JB(minus_excess))


def line_loop_residual(t: Triangle, base: str) -> float:
    """Residual of the vertex-rotation loop against the base translation.

    Dual of :func:`point_loop_residual`: the three rotations multiply,
    in the cyclic order that starts the loop on the chosen base side, to
    a translation along that side by minus the lateral excess:

    * base "a": ``JB(B)  JA(-A) JC(C)  = Pa(-delta)``
    * base "b": ``JC(C)  JB(B)  JA(-A) = Pb(-delta)``
    * base "c": ``JA(-A) JC(C)  JB(B)  = Pc(-delta)``
    """
    if base not in _LINE_BASES:
        raise ValueError(f"line-loop base must be one of {_LINE_BASES}, got {base!r}")
    gens = conjugated_generators(t)
    minus_excess = -t.excesses().side_excess
    fb, fa, fc = gens.JB(t.B), gens.JA(-t.A), gens.JC(t.C)
    if base == "a":
        return _normalized_residual((fb, fa, fc), gens.Pa(minus_excess))
    if base == "b":
        return _normalized_residual((fc, fb, fa), gens.Pb(minus_excess))
    return _normalized_residual((fa, fc, fb), gens.Pc(minus_excess))


def compatibility_residuals(t: Triangle) -> dict[str, float]:
    """The six conjugation relations tying the generators together.

    Each relation states that conjugating one generator by a specific
    loop motion yields the next one, as Lie-algebra matrix identities:

    * ``Pb = exp(C JC)  Pa exp(-C JC)``   * ``JB = exp(c Pc)  JA exp(-c Pc)``
    * ``Pc = exp(-A JA) Pb exp(A JA)``    * ``JC = exp(-a Pa) JB exp(a Pa)``
    * ``Pa = exp(B JB)  Pc exp(-B JB)``   * ``JA = exp(b Pb)  JC exp(-b Pb)``

    Four hold by construction of the maps; the two producing ``JC`` and
    ``Pa`` close the loop and hold only for a genuine triangle.  Returns
    a dict keyed like ``"Pb_from_Pa"`` with scale-normalized residuals.
    """
    gens = conjugated_generators(t)

    def conj_residual(target: str, source: str, mover: np.ndarray, mover_inv: np.ndarray) -> float:
        lhs = gens.generator_matrix(target)
        src = gens.generator_matrix(source)
        rhs = mover @ src @ mover_inv
        scale = max(
            1.0,
            float(np.abs(lhs).max()),
            float(np.abs(src).max()),
            float(np.abs(mover).max()),
        )
        return float(np.abs(lhs - rhs).max()) / scale

    return {
        "Pb_from_Pa": conj_residual("Pb", "Pa", gens.JC(t.C), gens.JC(-t.C)),
        "JB_from_JA": conj_residual("JB", "JA", gens.Pc(t.c), gens.Pc(-t.c)),
        "Pc_from_Pb": conj_residual("Pc", "Pb", gens.JA(-t.A), gens.JA(t.A)),
        "JC_from_JB": conj_residual("JC", "JB", gens.Pa(-t.a), gens.Pa(t.a)),
        "Pa_from_Pc": conj_residual("Pa", "Pc", gens.JB(t.B), gens.JB(-t.B)),
        "JA_from_JC": conj_residual("JA", "JC", gens.Pb(t.b), gens.Pb(-t.b)),
    }


def holonomy_angle(t: Triangle) -> float:
    """Canonical parameter of the point-loop rotation; equals -Delta.

    The base-C point loop ``Pa(-a) Pc(c) Pb(b)`` is a rotation about the
    base vertex, which the canonical placement puts at the origin, so
    the product is directly a fiducial rotation and its parameter can be
    read off the matrix (the principal representative for a positive
    angular label).

    Raises:
        ExtractionError: if the product fails the isometry test —
            the inputs are internally inconsistent (e.g. overflowed).
    """
    gens = conjugated_generators(t)
    with np.errstate(invalid="ignore", over="ignore"):
        factors = (gens.Pa(-t.a), gens.Pc(t.c), gens.Pb(t.b))
        product = factors[0] @ factors[1] @ factors[2]
    # The product is O(1) but its absolute error grows with the square of
    # the factor magnitudes, so the gate must be scaled by the same amount
    # or strongly curved (but perfectly consistent) triangles get rejected.
    peak = max(float(np.abs(f).max()) for f in factors)
    if not math.isfinite(peak):
        raise ExtractionError(
            "point-loop factors overflowed; triangle data are inconsistent"
        )
    gate = DEFAULT_ISOMETRY_TOL * max(1.0, peak) ** 2
    if not is_isometry(t.geom, product, tol=gate):
        raise ExtractionError(
            "point-loop product is not an isometry; triangle data are inconsistent"
        )
    return arc_k(t.geom.k2, float(product[1, 1]), float(product[2, 1]), tol=math.inf)


def loop_report(t: Triangle) -> dict[str, float]:
    """All loop residuals of a triangle in one dict (for reports/CLI).

    Keys: ``basic``, ``point_A``/``point_B``/``point_C``,
    ``line_a``/``line_b``/``line_c``, and ``holonomy_defect`` =
    |holonomy_angle + Delta|.
    """
    report = {"basic": basic_identity_residual(t)}
    for base in _POINT_BASES:
        report[f"point_{base}"] = point_loop_residual(t, base)
    for base in _LINE_BASES:
        report[f"line_{base}"] = line_loop_residual(t, base)
    report["holonomy_defect"] = abs(holonomy_angle(t) + t.excesses().angle_excess)
    return report
