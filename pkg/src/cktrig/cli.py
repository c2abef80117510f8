"""Command-line surface: solve, verify, run identity suites, print tables.

Subcommands
-----------
``solve``        complete a triangle from given parts and print all of it
``solve-ortho``  complete an orthogonal (right) triangle from two parts
``verify``       basic-identity and loop residuals of a triangle
``identities``   run the identity catalog and/or the raw one-label catalog
``table``        numeric confirmation of the classical per-geometry forms
``spacetime``    kinematical reading: proper times, rapidities, twin defect

The geometry is chosen by exactly one of ``--geometry NAME`` (canonical
names and spacetime aliases), ``--k1 X --k2 Y`` (arbitrary real labels),
or ``--sign S [--tau T] [--c C]`` (kinematical units).  Results are JSON
on stdout (``--output text`` renders the same record as key/value lines);
errors are JSON on stderr with exit code 2 (no such triangle), 3
(underdetermined), or 4 (bad request).  ``CKTRIG_TOL`` overrides the
default tolerance; ``--report-file PATH`` additionally dumps the record
as JSON to a file.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import random
import sys
from typing import Any

from .errors import (
    CKTrigError,
    ExistenceError,
    KindError,
    UnderdeterminedError,
    UnknownIdentityError,
)
from .geometry import CANONICAL_NINE, Geometry, geometry_name, named_geometry
from .identities import classical_residuals, run_appendix_suite, run_suite
from .kinematics import (
    SPACETIME_NAMES,
    SpacetimeUnits,
    classical_spacetime_residuals,
    galilean_motion_residuals,
    spacetime_units,
    twin_defect,
)
from .loops import loop_report
from .orthogonal import classical_ortho_residuals, ortho_area, ortho_relation_residuals, solve_ortho
from .solver import solve_aaa, solve_sas, solve_sss
from .triangle import Triangle, check_existence

__all__ = ["main"]

DEFAULT_TOL = 1e-9

_SIDE_KEYS = ("a", "b", "c")
_ANGLE_KEYS = ("A", "B", "C")
_EXIT_EXISTENCE = 2
_EXIT_UNDERDETERMINED = 3
_EXIT_PARSE = 4


class _RequestError(Exception):
    """A malformed request (maps to exit code 4)."""


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse hook: no SystemExit(2)
        raise _RequestError(message)


# ---------------------------------------------------------------------------
# Request parsing.
# ---------------------------------------------------------------------------


def _parse_float(text: str, what: str) -> float:
    try:
        return float(text)
    except ValueError:
        raise _RequestError(f"{what} must be a number, got {text!r}") from None


def _parse_assignments(text: str, what: str) -> dict[str, float]:
    """Parse "k=v,k=v" into an ordered dict of floats."""
    out: dict[str, float] = {}
    for item in text.split(","):
        item = item.strip()
        if not item:
            continue
        key, sep, value = item.partition("=")
        key = key.strip()
        if not sep or not key:
            raise _RequestError(f"{what} expects k=v pairs, got {item!r}")
        if key in out:
            raise _RequestError(f"{what} repeats {key!r}")
        out[key] = _parse_float(value.strip(), f"{what} value for {key}")
    if not out:
        raise _RequestError(f"{what} is empty")
    return out


def _add_geometry_options(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--geometry", metavar="NAME",
                     help="named geometry preset (spacetime aliases accepted)")
    sub.add_argument("--k1", type=float, help="length label")
    sub.add_argument("--k2", type=float, help="angle label")
    sub.add_argument("--tau", type=float, help="universe time radius (kinematical form)")
    sub.add_argument("--c", type=float, help="relativistic constant (kinematical form)")
    sub.add_argument("--sign", type=int, choices=(-1, 0, 1),
                     help="curvature sign (kinematical form)")
    sub.add_argument("--units", metavar="tau=T,c=C",
                     help="kinematical units for a named spacetime geometry")


def _add_common_options(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--output", choices=("json", "text"), default="json")
    sub.add_argument("--report-file", metavar="PATH",
                     help="also dump the JSON record to this file")


def _resolve_geometry(ns: argparse.Namespace) -> tuple[Geometry, SpacetimeUnits | None]:
    """Apply the exactly-one-geometry-spec rule.

    Returns the geometry and, when the kinematical form or a spacetime-name
    + --units combination was used, the spacetime units.
    """
    named = ns.geometry is not None
    labeled = ns.k1 is not None or ns.k2 is not None
    kinematic = ns.sign is not None
    if (ns.tau is not None or ns.c is not None) and not kinematic and not named:
        raise _RequestError("--tau/--c belong to the kinematical form: add --sign")
    if named + labeled + kinematic != 1:
        raise _RequestError(
            "choose exactly one geometry form: --geometry NAME, "
            "--k1 X --k2 Y, or --sign S [--tau T] [--c C]"
        )
    units_text = getattr(ns, "units", None)
    if units_text is not None and not named:
        raise _RequestError("--units applies to a named spacetime geometry")
    if named:
        try:
            g = named_geometry(ns.geometry)
        except KeyError as exc:
            raise _RequestError(str(exc.args[0])) from None
        units = None
        if units_text is not None or ns.tau is not None or ns.c is not None:
            pairs = _parse_assignments(units_text, "--units") if units_text else {}
            extra = set(pairs) - {"tau", "c"}
            if extra:
                raise _RequestError(f"--units accepts tau and c, got {sorted(extra)}")
            tau = pairs.get("tau", ns.tau if ns.tau is not None else 1.0)
            c = pairs.get("c", ns.c if ns.c is not None else 1.0)
            try:
                units = spacetime_units(ns.geometry, tau=tau, c=c)
            except KindError as exc:
                raise _RequestError(str(exc)) from None
            g = units.geometry()
        return g, units
    if labeled:
        if ns.k1 is None or ns.k2 is None:
            raise _RequestError("--k1 and --k2 must be given together")
        try:
            return Geometry(ns.k1, ns.k2), None
        except ValueError as exc:
            raise _RequestError(str(exc)) from None
    tau = ns.tau if ns.tau is not None else math.inf
    c = ns.c if ns.c is not None else math.inf
    try:
        units = SpacetimeUnits(tau=tau, c=c, curvature_sign=ns.sign)
    except ValueError as exc:
        raise _RequestError(str(exc)) from None
    return units.geometry(), units


def build_parser() -> _Parser:
    parser = _Parser(prog="cktrig", description=__doc__.splitlines()[0])
    subs = parser.add_subparsers(dest="subcommand", required=True)

    solve = subs.add_parser("solve", help="complete a triangle from given parts")
    _add_geometry_options(solve)
    _add_common_options(solve)
    solve.add_argument("--given", required=True, metavar="K=V,...",
                       help="known parts: a,b,C | a,c,B | a,b,c | A,B,C, or a "
                            "side pair at k2=0 / angle pair at k1=0")

    ortho = subs.add_parser("solve-ortho",
                            help="complete an orthogonal triangle from two parts")
    _add_geometry_options(ortho)
    _add_common_options(ortho)
    ortho.add_argument("--given", required=True, metavar="K=V,...",
                       help="exactly two of a, b, h, A, C")

    verify = subs.add_parser("verify",
                             help="basic-identity and loop residuals of a triangle")
    _add_geometry_options(verify)
    _add_common_options(verify)
    verify.add_argument("--given", required=True, metavar="K=V,...",
                        help="solve-style parts, or all six of a,b,c,A,B,C")
    verify.add_argument("--tol", type=float, default=None)

    idents = subs.add_parser("identities", help="run identity suites")
    _add_geometry_options(idents)
    _add_common_options(idents)
    idents.add_argument("--suite", choices=("bestiarium", "appendix", "all"),
                        default="all")
    idents.add_argument("--samples", type=int, default=200)
    idents.add_argument("--seed", type=int, default=0)
    idents.add_argument("--tol", type=float, default=None)

    table = subs.add_parser("table",
                            help="confirm the classical per-geometry forms numerically")
    _add_common_options(table)
    table.add_argument("--which", type=int, choices=(2, 3, 4), required=True)
    table.add_argument("--samples", type=int, default=100)
    table.add_argument("--seed", type=int, default=0)
    table.add_argument("--tol", type=float, default=None)
    table.add_argument("--units", metavar="tau=T,c=C",
                       help="kinematical units for --which 4 (default tau=1,c=1)")

    space = subs.add_parser("spacetime",
                            help="kinematical reading of a triangle")
    _add_geometry_options(space)
    _add_common_options(space)
    space.add_argument("--given", required=True, metavar="K=V,...",
                       help="solve-style parts in conventional units")
    return parser


# ---------------------------------------------------------------------------
# Record builders.
# ---------------------------------------------------------------------------


def _geometry_record(g: Geometry) -> dict[str, Any]:
    return {"k1": g.k1, "k2": g.k2, "name": geometry_name(g)}


def _triangle_record(t: Triangle) -> dict[str, Any]:
    signed = t.signed()
    ex = t.excesses()
    return {
        "geometry": _geometry_record(t.geom),
        "sides": {"a": t.a, "b": t.b, "c": t.c},
        "angles": {"A": t.A, "B": t.B, "C": t.C},
        "signed": {"sides": list(signed.sides), "angles": list(signed.angles)},
        "excesses": {
            "side_excess": ex.side_excess,
            "angle_excess": ex.angle_excess,
            "semiperimeter": ex.semiperimeter,
            "angle_half_sum": ex.angle_half_sum,
        },
        "area": t.area(),
        "coarea": t.coarea(),
        "existence": check_existence(t.geom, t.a, t.b, t.c, t.A, t.B, t.C),
        "determined": "full",
    }


def _complete_sides(g: Geometry, given: dict[str, float]) -> dict[str, float]:
    """Side completion by the linear law of a flat angle label (a = b + c)."""
    sides = dict(given)
    if "a" not in sides:
        sides["a"] = sides["b"] + sides["c"]
    elif "c" not in sides:
        sides["c"] = sides["a"] - sides["b"]
    else:
        sides["b"] = sides["a"] - sides["c"]
    if min(sides.values()) <= 0.0:
        raise ExistenceError(
            f"linear side completion gives a non-positive side: {sides}"
        )
    return {k: sides[k] for k in _SIDE_KEYS}


def _partial_record(g: Geometry, sides: dict[str, float] | None,
                    angles: dict[str, float] | None) -> dict[str, Any]:
    if sides is not None:
        existence = check_existence(g, sides["a"], sides["b"], sides["c"])
    else:
        # the completion is exact (A = B + C), so only the angular range
        # can fail: at a positive angle label, angles live in a half period
        if g.k2 > 0.0:
            half_period = math.pi / math.sqrt(g.k2)
            for name, value in angles.items():
                if value > half_period * (1.0 + 1e-9):
                    raise ExistenceError(
                        f"angle {name} = {value} exceeds the half period "
                        f"{half_period} for angle label {g.k2}"
                    )
        existence = True
    return {
        "geometry": _geometry_record(g),
        "sides": sides,
        "angles": angles,
        "signed": None,
        "excesses": {
            "side_excess": (-sides["a"] + sides["b"] + sides["c"]) if sides else None,
            "angle_excess": (-angles["A"] + angles["B"] + angles["C"]) if angles else None,
            "semiperimeter": (sides["a"] + sides["b"] + sides["c"]) / 2.0 if sides else None,
            "angle_half_sum": (angles["A"] + angles["B"] + angles["C"]) / 2.0 if angles else None,
        },
        "area": None,
        "coarea": None,
        "existence": existence,
        "determined": "sides" if sides else "angles",
    }


def _solve_from_given(g: Geometry, given: dict[str, float]) -> Triangle | dict[str, Any]:
    """Dispatch --given key sets to the solvers.

    Returns a Triangle for determinate sets; for the linear pair cases of a
    flat label (two sides at k2 = 0, two angles at k1 = 0) returns a partial
    record with the completed half and the other half undetermined.
    """
    keys = frozenset(given)
    if keys == {"a", "b", "C"}:
        return solve_sas(g, given["a"], given["b"], given["C"])
    if keys == {"a", "c", "B"}:
        t = solve_sas(g, given["a"], given["c"], given["B"])
        return Triangle(geom=g, a=t.a, b=t.c, c=t.b, A=t.A, B=t.C, C=t.B)
    if keys == {"a", "b", "c"}:
        return solve_sss(g, given["a"], given["b"], given["c"])
    if keys == {"A", "B", "C"}:
        return solve_aaa(g, given["A"], given["B"], given["C"])
    if keys < set(_SIDE_KEYS) and len(keys) == 2:
        if g.k2 != 0.0:
            raise UnderdeterminedError(
                "two sides fix a triangle only at a flat angle label (k2 = 0)"
            )
        return _partial_record(g, _complete_sides(g, given), None)
    if keys < set(_ANGLE_KEYS) and len(keys) == 2:
        if g.k1 != 0.0:
            raise UnderdeterminedError(
                "two angles fix the third only at a flat length label (k1 = 0)"
            )
        dual_given = {k.lower(): v for k, v in given.items()}
        completed = _complete_sides(g.dual(), dual_given)
        return _partial_record(g, None, {k.upper(): v for k, v in completed.items()})
    raise _RequestError(
        f"cannot solve from parts {sorted(keys)}: give a,b,C | a,c,B | a,b,c "
        f"| A,B,C, a side pair (k2=0 only), or an angle pair (k1=0 only)"
    )


def _default_tol(explicit: float | None, fallback: float) -> float:
    if explicit is not None:
        return explicit
    env = os.environ.get("CKTRIG_TOL")
    if env is not None:
        try:
            return float(env)
        except ValueError:
            raise _RequestError(f"CKTRIG_TOL must be a number, got {env!r}") from None
    return fallback


# ---------------------------------------------------------------------------
# Random corpora for table sweeps (deterministic in the seed).
# ---------------------------------------------------------------------------


def _sample_triangle(g: Geometry, rng: random.Random) -> Triangle:
    for _ in range(300):
        a = rng.uniform(0.05, 2.0)
        b = rng.uniform(0.05, 2.0)
        big_c = rng.uniform(0.1, 1.6)
        if g.k1 > 0.0:
            lim = 0.85 * math.pi / (2.0 * math.sqrt(g.k1))
            a, b = min(a, lim), min(b, lim)
        if g.k2 > 0.0:
            big_c = min(big_c, 0.85 * math.pi / math.sqrt(g.k2))
        try:
            return solve_sas(g, a, b, big_c)
        except CKTrigError:
            continue
    raise ExistenceError(f"no valid sample found for {g.label()}")


def _sample_ortho(g: Geometry, rng: random.Random):
    for _ in range(300):
        b = rng.uniform(0.05, 2.0)
        big_c = rng.uniform(0.05, 1.4)
        if g.k1 > 0.0:
            b = min(b, 0.85 * math.pi / (2.0 * math.sqrt(g.k1)))
        if g.k2 > 0.0:
            big_c = min(big_c, 0.85 * math.pi / (2.0 * math.sqrt(g.k2)))
        try:
            return solve_ortho(g, b=b, C=big_c)
        except CKTrigError:
            continue
    raise ExistenceError(f"no valid orthogonal sample found for {g.label()}")


def _sample_spacetime(units: SpacetimeUnits, rng: random.Random) -> Triangle:
    g = units.geometry()
    for _ in range(300):
        a = rng.uniform(0.1, 2.0) * units.side_scale()
        b = rng.uniform(0.1, 2.0) * units.side_scale()
        big_c = rng.uniform(0.1, 1.5) * units.angle_scale()
        if g.k1 > 0.0:
            lim = 0.8 * math.pi / (2.0 * math.sqrt(g.k1))
            a, b = min(a, lim), min(b, lim)
        try:
            return solve_sas(g, a, b, big_c)
        except CKTrigError:
            continue
    raise ExistenceError(f"no valid spacetime sample found for {g.label()}")


# ---------------------------------------------------------------------------
# Subcommand handlers.
# ---------------------------------------------------------------------------


def _cmd_solve(ns: argparse.Namespace) -> dict[str, Any]:
    g, _ = _resolve_geometry(ns)
    given = _parse_assignments(ns.given, "--given")
    unknown = set(given) - set(_SIDE_KEYS) - set(_ANGLE_KEYS)
    if unknown:
        raise _RequestError(f"unknown triangle parts {sorted(unknown)}")
    result = _solve_from_given(g, given)
    if isinstance(result, Triangle):
        return _triangle_record(result)
    return result


def _cmd_solve_ortho(ns: argparse.Namespace) -> dict[str, Any]:
    g, _ = _resolve_geometry(ns)
    given = _parse_assignments(ns.given, "--given")
    unknown = set(given) - {"a", "b", "h", "A", "C"}
    if unknown:
        raise _RequestError(f"unknown orthogonal parts {sorted(unknown)}; "
                            f"give two of a, b, h, A, C")
    t = solve_ortho(g, **given)
    return {
        "geometry": _geometry_record(g),
        "parts": t.parts(),
        "area": ortho_area(t),
        "relation_residuals": ortho_relation_residuals(t),
    }


def _cmd_verify(ns: argparse.Namespace) -> dict[str, Any]:
    g, _ = _resolve_geometry(ns)
    given = _parse_assignments(ns.given, "--given")
    tol = _default_tol(ns.tol, DEFAULT_TOL)
    if set(given) == set(_SIDE_KEYS) | set(_ANGLE_KEYS):
        t = Triangle(geom=g, a=given["a"], b=given["b"], c=given["c"],
                     A=given["A"], B=given["B"], C=given["C"])
    else:
        result = _solve_from_given(g, given)
        if not isinstance(result, Triangle):
            raise UnderdeterminedError(
                "verify needs a fully determined triangle; these parts fix "
                "only the " + result["determined"]
            )
        t = result
    residuals = loop_report(t)
    return {
        "geometry": _geometry_record(g),
        "triangle": {**{k: getattr(t, k) for k in _SIDE_KEYS},
                     **{k: getattr(t, k) for k in _ANGLE_KEYS}},
        "tol": tol,
        "residuals": residuals,
        "pass": max(residuals.values()) <= tol,
    }


def _cmd_identities(ns: argparse.Namespace) -> dict[str, Any]:
    if ns.samples <= 0:
        raise _RequestError(f"--samples must be positive, got {ns.samples}")
    record: dict[str, Any] = {"suite": ns.suite, "samples": ns.samples, "seed": ns.seed}
    ok = True
    if ns.suite in ("bestiarium", "all"):
        g, _ = _resolve_geometry(ns)
        tol = _default_tol(ns.tol, DEFAULT_TOL)
        report = run_suite(g, n=ns.samples, seed=ns.seed, tol=tol)
        record["bestiarium"] = report.to_dict()
        record["bestiarium"]["all_pass"] = report.all_pass
        ok = ok and report.all_pass
    else:
        # geometry spec is irrelevant for the raw catalog but must be valid
        # if offered
        if any(getattr(ns, flag) is not None
               for flag in ("geometry", "k1", "k2", "sign", "tau", "c")):
            _resolve_geometry(ns)
    if ns.suite in ("appendix", "all"):
        tol = _default_tol(ns.tol, 1e-12)
        report = run_appendix_suite(n=ns.samples, seed=ns.seed, tol=tol)
        record["appendix"] = report.to_dict()
        record["appendix"]["all_pass"] = report.all_pass
        ok = ok and report.all_pass
    record["all_pass"] = ok
    return record


def _cmd_table(ns: argparse.Namespace) -> dict[str, Any]:
    if ns.samples <= 0:
        raise _RequestError(f"--samples must be positive, got {ns.samples}")
    rng = random.Random(ns.seed)
    cells: dict[str, dict[str, float]] = {}
    if ns.which == 2:
        tol = _default_tol(ns.tol, 1e-11)
        for name, g in CANONICAL_NINE:
            worst: dict[str, float] = {}
            for _ in range(ns.samples):
                for key, r in classical_residuals(_sample_triangle(g, rng)).items():
                    worst[key] = max(worst.get(key, 0.0), r)
            cells[name] = worst
    elif ns.which == 3:
        tol = _default_tol(ns.tol, 1e-10)
        for name, g in CANONICAL_NINE:
            worst = {}
            for _ in range(ns.samples):
                for key, r in classical_ortho_residuals(_sample_ortho(g, rng)).items():
                    worst[key] = max(worst.get(key, 0.0), r)
            cells[name] = worst
    else:
        tol = _default_tol(ns.tol, 1e-9)
        pairs = _parse_assignments(ns.units, "--units") if ns.units else {}
        extra = set(pairs) - {"tau", "c"}
        if extra:
            raise _RequestError(f"--units accepts tau and c, got {sorted(extra)}")
        tau, c = pairs.get("tau", 1.0), pairs.get("c", 1.0)
        for name in SPACETIME_NAMES:
            units = spacetime_units(name, tau=tau, c=c)
            worst = {}
            for _ in range(ns.samples):
                t = _sample_spacetime(units, rng)
                for key, r in classical_spacetime_residuals(t, units).items():
                    worst[key] = max(worst.get(key, 0.0), r)
            cells[name] = worst
        record_units = {"tau": None if math.isinf(tau) else tau,
                        "c": None if math.isinf(c) else c}
    record: dict[str, Any] = {
        "which": ns.which,
        "samples": ns.samples,
        "seed": ns.seed,
        "tol": tol,
        "cells": cells,
        "all_pass": all(r <= tol for row in cells.values() for r in row.values()),
    }
    if ns.which == 4:
        record["units"] = record_units
    return record


def _cmd_spacetime(ns: argparse.Namespace) -> dict[str, Any]:
    g, units = _resolve_geometry(ns)
    if units is None:
        # a bare named/labelled geometry: natural units, provided k2 <= 0
        name = geometry_name(g)
        if name not in SPACETIME_NAMES:
            raise _RequestError(
                "spacetime needs a kinematical geometry: a spacetime name, "
                "or --sign S [--tau T] [--c C]"
            )
        units = spacetime_units(name)
        g = units.geometry()
    given = _parse_assignments(ns.given, "--given")
    result = _solve_from_given(g, given)
    if not isinstance(result, Triangle):
        raise UnderdeterminedError(
            "spacetime needs a fully determined triangle; these parts fix "
            "only the " + result["determined"]
        )
    t = result
    record = {
        "units": {
            "tau": None if math.isinf(units.tau) else units.tau,
            "c": None if math.isinf(units.c) else units.c,
            "curvature_sign": units.curvature_sign,
        },
        "geometry": _geometry_record(g),
        "proper_times": {"a": t.a, "b": t.b, "c": t.c},
        "rapidities": {"A": t.A, "B": t.B, "C": t.C},
        "area": t.area(),
        "coarea": t.coarea(),
        "twin_defect": twin_defect(t),
        "classical_rows": classical_spacetime_residuals(t, units),
    }
    if g.k1 == 0.0 and g.k2 == 0.0:
        record["galilean_laws"] = galilean_motion_residuals(t)
    return record


_HANDLERS = {
    "solve": _cmd_solve,
    "solve-ortho": _cmd_solve_ortho,
    "verify": _cmd_verify,
    "identities": _cmd_identities,
    "table": _cmd_table,
    "spacetime": _cmd_spacetime,
}


# ---------------------------------------------------------------------------
# Rendering and entry point.
# ---------------------------------------------------------------------------


def _jsonify(record: Any) -> Any:
    """Make the record strict-JSON safe: non-finite floats become null."""
    if isinstance(record, dict):
        return {k: _jsonify(v) for k, v in record.items()}
    if isinstance(record, (list, tuple)):
        return [_jsonify(v) for v in record]
    if isinstance(record, float) and not math.isfinite(record):
        return None
    return record


def _render_text(record: Any, prefix: str = "") -> list[str]:
    """Flatten the record into deterministic `path = value` lines."""
    if isinstance(record, dict):
        lines: list[str] = []
        for key, value in record.items():
            path = f"{prefix}.{key}" if prefix else str(key)
            lines.extend(_render_text(value, path))
        return lines
    if isinstance(record, (list, tuple)):
        if all(not isinstance(v, (dict, list, tuple)) for v in record):
            return [f"{prefix} = {' '.join(_scalar(v) for v in record)}"]
        lines = []
        for i, value in enumerate(record):
            lines.extend(_render_text(value, f"{prefix}[{i}]"))
        return lines
    return [f"{prefix} = {_scalar(record)}"]


def _scalar(value: Any) -> str:
    if value is None:
        return "null"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return repr(value)
    return str(value)


def _emit_error(exc: BaseException, code: int) -> int:
    payload = {"error": type(exc).__name__, "message": str(exc), "exit_code": code}
    print(json.dumps(payload), file=sys.stderr)
    return code


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except _RequestError as exc:
        return _emit_error(exc, _EXIT_PARSE)
    try:
        record = _HANDLERS[ns.subcommand](ns)
    except _RequestError as exc:
        return _emit_error(exc, _EXIT_PARSE)
    except UnknownIdentityError as exc:
        return _emit_error(exc, _EXIT_PARSE)
    except UnderdeterminedError as exc:
        return _emit_error(exc, _EXIT_UNDERDETERMINED)
    except CKTrigError as exc:
        return _emit_error(exc, _EXIT_EXISTENCE)
    except (ValueError, KeyError) as exc:
        return _emit_error(exc, _EXIT_PARSE)

    record = _jsonify(record)
    if ns.report_file:
        try:
            with open(ns.report_file, "w", encoding="utf-8") as fh:
                json.dump(record, fh, indent=2)
                fh.write("\n")
        except OSError as exc:
            return _emit_error(exc, 1)
    if ns.output == "text":
        print("\n".join(_render_text(record)))
    else:
        print(json.dumps(record, indent=2))
    return 0


if __name__ == "__main__":  # pragma: no cover
    raise SystemExit(main())
