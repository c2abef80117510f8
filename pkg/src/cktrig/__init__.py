"""Trigonometry of the nine two-dimensional Cayley-Klein geometries.

A pair of real labels (k1, k2) fixes a geometry: k1 scales lengths
(curvature), k2 scales angles (the signature of the metric on angles).
The sign choices in {-1, 0, +1} x {-1, 0, +1} give the nine classical
plane geometries; the three with k2 <= 0 rows double as (1+1)-dimensional
spacetimes.  This package provides the labeled trigonometric functions,
an exact matrix-group model used as an independent oracle, solvers for
generic and right triangles, residual checks for a catalog of identities,
and a command-line front end.

The subpackage layout:

- :mod:`cktrig.trig` — labeled cosine/sine/versine/tangent and inverses
- :mod:`cktrig.geometry` — the label pair, named presets, duality
- :mod:`cktrig.group` — the matrix model: points, motions, the oracle
- :mod:`cktrig.triangle` — the measured triangle, excesses, areas
- :mod:`cktrig.solver` — closing a triangle from given parts
- :mod:`cktrig.loops` — commutation and loop residuals, holonomy
- :mod:`cktrig.identities` — identity catalogs and residual suites
- :mod:`cktrig.orthogonal` — right triangles with a mixed side pair
- :mod:`cktrig.kinematics` — conventional units, spacetime readings
- :mod:`cktrig.cli` — the ``cktrig`` command
"""

from __future__ import annotations

from .errors import (
    CKTrigError,
    ConstraintError,
    DegenerateError,
    ExistenceError,
    ExtractionError,
    FormalOnlyError,
    InconsistentError,
    KindError,
    PoleError,
    RangeError,
    UnderdeterminedError,
    UnknownIdentityError,
)
from .geometry import (
    CANONICAL_NINE,
    CO_EUCLIDEAN,
    CO_HYPERBOLIC,
    CO_MINKOWSKIAN,
    DOUBLY_HYPERBOLIC,
    ELLIPTIC,
    EUCLIDEAN,
    GALILEAN,
    HYPERBOLIC,
    MINKOWSKIAN,
    NAMED_GEOMETRIES,
    Geometry,
    geometry_name,
    named_geometry,
)
from .group import (
    GroupElement,
    Point,
    apply,
    distance,
    make_triangle_sas,
    measure_triangle,
    origin,
    point_from_polar,
    polar_coordinates,
)
from .identities import (
    AppendixReport,
    IdentityReport,
    check,
    check_appendix,
    classical_residuals,
    run_appendix_suite,
    run_suite,
)
from .kinematics import (
    SPACETIME_NAMES,
    SpacetimeUnits,
    classical_spacetime_residuals,
    galilean_motion_residuals,
    scale_to_units,
    spacetime_units,
    twin_defect,
)
from .loops import (
    ConjugatedGenerators,
    basic_identity_residual,
    compatibility_residuals,
    conjugated_generators,
    holonomy_angle,
    line_loop_residual,
    loop_report,
    point_loop_residual,
)
from .orthogonal import (
    OrthoTriangle,
    classical_ortho_residuals,
    ortho_area,
    ortho_area_residuals,
    ortho_relation_residuals,
    solve_ortho,
)
from .solver import solve_aaa, solve_sas, solve_second_kind, solve_sss
from .triangle import (
    Excesses,
    SignedTriangle,
    Triangle,
    area,
    check_existence,
    coarea,
    dualize,
    external_angle,
    inner_angle,
)
from .trig import arc_k, cos_k, quadrant, sin_k, tan_k, versin_k

__version__ = "1.0.0"

__all__ = [
    "__version__",
    # labels and geometries
    "Geometry", "named_geometry", "geometry_name", "NAMED_GEOMETRIES",
    "CANONICAL_NINE", "ELLIPTIC", "EUCLIDEAN", "HYPERBOLIC", "CO_EUCLIDEAN",
    "GALILEAN", "CO_MINKOWSKIAN", "CO_HYPERBOLIC", "MINKOWSKIAN",
    "DOUBLY_HYPERBOLIC",
    # labeled trigonometry
    "cos_k", "sin_k", "versin_k", "tan_k", "arc_k", "quadrant",
    # matrix model
    "GroupElement", "Point", "origin", "point_from_polar",
    "polar_coordinates", "apply", "distance", "make_triangle_sas",
    "measure_triangle",
    # triangles
    "Triangle", "SignedTriangle", "Excesses", "area", "coarea", "dualize",
    "check_existence", "inner_angle", "external_angle",
    # solvers
    "solve_sas", "solve_sss", "solve_aaa", "solve_second_kind",
    # loops
    "ConjugatedGenerators", "conjugated_generators",
    "basic_identity_residual", "point_loop_residual", "line_loop_residual",
    "compatibility_residuals", "holonomy_angle", "loop_report",
    # identity suites
    "IdentityReport", "AppendixReport", "check", "check_appendix",
    "run_suite", "run_appendix_suite", "classical_residuals",
    # right triangles
    "OrthoTriangle", "solve_ortho", "ortho_area", "ortho_area_residuals",
    "ortho_relation_residuals", "classical_ortho_residuals",
    # kinematics
    "SpacetimeUnits", "SPACETIME_NAMES", "spacetime_units", "scale_to_units",
    "twin_defect", "classical_spacetime_residuals",
    "galilean_motion_residuals",
    # errors
    "CKTrigError", "PoleError", "ConstraintError", "FormalOnlyError",
    "DegenerateError", "KindError", "ExistenceError", "RangeError",
    "UnderdeterminedError", "InconsistentError", "UnknownIdentityError",
    "ExtractionError",
]
