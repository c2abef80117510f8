"""Spacetime units, twin defect, and the classical kinematic formulas."""

from __future__ import annotations

import math
import random

import pytest

from cktrig.errors import CKTrigError, KindError
from cktrig.geometry import ELLIPTIC, GALILEAN, MINKOWSKIAN, Geometry
from cktrig.kinematics import (
    SPACETIME_NAMES,
    SpacetimeUnits,
    classical_spacetime_residuals,
    galilean_motion_residuals,
    scale_to_units,
    spacetime_units,
    twin_defect,
)
from cktrig.solver import solve_sas, solve_sss
from cktrig.trig import cos_k

SIX_SPACETIMES = (
    "anti-de-sitter",
    "oscillating-nh",
    "minkowskian",
    "galilean",
    "de-sitter",
    "expanding-nh",
)


def sample_spacetime_triangle(units: SpacetimeUnits, rng: random.Random):
    """One random valid triangle at the units' geometry, curvature-scaled."""
    g = units.geometry()
    for _ in range(200):
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
    raise AssertionError(f"no valid spacetime draw found for {g}")


class TestUnits:
    def test_labels_from_tau_and_c(self):
        u = SpacetimeUnits(tau=2.0, c=3.0, curvature_sign=-1)
        assert u.k1 == -0.25
        assert u.k2 == pytest.approx(-1.0 / 9.0, abs=0.0)
        assert u.geometry() == Geometry(-0.25, -1.0 / 9.0)

    def test_infinite_radii_are_flat(self):
        assert SpacetimeUnits().geometry() == GALILEAN
        assert SpacetimeUnits(c=1.0).geometry() == MINKOWSKIAN
        assert SpacetimeUnits(tau=math.inf, c=2.0, curvature_sign=1).k1 == 0.0

    @pytest.mark.parametrize("bad", [dict(tau=0.0), dict(tau=-1.0), dict(tau=math.nan),
                                     dict(c=0.0), dict(c=math.nan), dict(curvature_sign=2)])
    def test_invalid_units_rejected(self, bad):
        with pytest.raises(ValueError):
            SpacetimeUnits(**bad)

    def test_named_spacetimes(self):
        assert spacetime_units("anti-de-sitter", tau=2.0, c=3.0).geometry() == \
            Geometry(0.25, -1.0 / 9.0)
        assert spacetime_units("ads").curvature_sign == 1
        assert spacetime_units("de-sitter").curvature_sign == -1
        assert spacetime_units("oscillating-newton-hooke", tau=2.0).geometry() == \
            Geometry(0.25, 0.0)
        # flat directions ignore the offered scale
        assert math.isinf(spacetime_units("galilean", tau=5.0, c=5.0).tau)
        assert math.isinf(spacetime_units("minkowskian", tau=5.0, c=2.0).tau)
        assert spacetime_units("minkowskian", c=2.0).c == 2.0

    def test_positive_angle_label_is_not_a_spacetime(self):
        for name in ("elliptic", "euclidean", "hyperbolic"):
            with pytest.raises(KindError):
                spacetime_units(name)
        with pytest.raises(KeyError):
            spacetime_units("flatland")

    def test_six_spacetimes_cover_the_k2_nonpositive_grid(self):
        assert len(SPACETIME_NAMES) == 6
        labels = {(spacetime_units(n).curvature_sign, spacetime_units(n).k2 != 0.0)
                  for n in SIX_SPACETIMES}
        assert len(labels) == 6


class TestScaling:
    def test_scaled_triangle_preserves_labeled_values(self):
        rng = random.Random(1)
        unit = spacetime_units("de-sitter")
        t0 = sample_spacetime_triangle(unit, rng)
        units = spacetime_units("de-sitter", tau=2.0, c=3.0)
        t1 = scale_to_units(t0, units)
        assert t1.geom == units.geometry()
        assert t1.a == 2.0 * t0.a and t1.c == 2.0 * t0.c
        assert t1.B == 3.0 * t0.B
        assert cos_k(t1.geom.k1, t1.a) == pytest.approx(cos_k(-1.0, t0.a), abs=1e-15)
        assert cos_k(t1.geom.k2, t1.A) == pytest.approx(cos_k(-1.0, t0.A), abs=1e-15)

    def test_scaling_agrees_with_solving_in_scaled_units(self):
        rng = random.Random(2)
        for name in SIX_SPACETIMES:
            unit = spacetime_units(name)
            units = spacetime_units(name, tau=2.0, c=3.0)
            for _ in range(25):
                t0 = sample_spacetime_triangle(unit, rng)
                t1 = scale_to_units(t0, units)
                direct = solve_sas(units.geometry(), t1.a, t1.b, t1.C)
                for part in ("a", "b", "c", "A", "B", "C"):
                    assert getattr(direct, part) == pytest.approx(
                        getattr(t1, part), rel=1e-10, abs=1e-12), (name, part)
                s, w = units.side_scale(), units.angle_scale()
                assert t1.area() == pytest.approx(s * s * w * t0.area(), rel=1e-10)
                assert t1.coarea() == pytest.approx(s * w * w * t0.coarea(), rel=1e-10)

    def test_geometry_mismatch_rejected(self):
        rng = random.Random(3)
        t0 = sample_spacetime_triangle(spacetime_units("minkowskian"), rng)
        with pytest.raises(ValueError):
            scale_to_units(t0, spacetime_units("de-sitter", tau=2.0))


class TestTwinDefect:
    def test_minkowskian_twins(self):
        t = solve_sss(MINKOWSKIAN, 3.0, 1.0, 1.5)
        assert twin_defect(t) == pytest.approx(0.5, abs=1e-12)

    def test_galilean_defect_is_exactly_zero(self):
        rng = random.Random(4)
        for _ in range(50):
            t = sample_spacetime_triangle(spacetime_units("galilean"), rng)
            assert twin_defect(t) == 0.0

    def test_defect_is_minus_label_times_coarea(self):
        rng = random.Random(5)
        for name in SIX_SPACETIMES:
            units = spacetime_units(name, tau=2.0, c=3.0)
            for _ in range(20):
                t = sample_spacetime_triangle(units, rng)
                defect = twin_defect(t)
                assert defect >= 0.0
                gap = abs(defect - (-t.geom.k2) * t.coarea())
                assert gap <= 1e-12 * max(1.0, abs(defect))

    def test_positive_angle_label_has_no_twins(self):
        t = solve_sas(ELLIPTIC, 0.8, 0.7, 0.9)
        with pytest.raises(KindError):
            twin_defect(t)


class TestClassicalRows:
    @pytest.mark.parametrize("name", SIX_SPACETIMES)
    @pytest.mark.parametrize("tau,c", [(1.0, 1.0), (2.0, 3.0)])
    def test_rows_vanish_on_engine_triangles(self, name, tau, c):
        units = spacetime_units(name, tau=tau, c=c)
        rng = random.Random(hash((name, tau, c)) & 0xFFFF)
        for _ in range(40):
            t = sample_spacetime_triangle(units, rng)
            rows = classical_spacetime_residuals(t, units)
            assert set(rows) == {"cagnoli", "heron_lhuillier", "area_coarea"}
            assert max(rows.values()) <= 1e-9

    def test_units_must_match_triangle(self):
        rng = random.Random(6)
        units = spacetime_units("minkowskian", c=2.0)
        t = sample_spacetime_triangle(units, rng)
        with pytest.raises(ValueError):
            classical_spacetime_residuals(t, spacetime_units("minkowskian", c=3.0))


class TestGalileanMotion:
    def test_linear_laws(self):
        rng = random.Random(7)
        for _ in range(50):
            t = sample_spacetime_triangle(spacetime_units("galilean"), rng)
            rows = galilean_motion_residuals(t)
            assert set(rows) == {"absolute_time", "rapidity_additivity",
                                 "proportionality", "area", "coarea"}
            # a - b - c is exactly zero (see twin-defect tests); re-adding
            # b + c may still differ from a by an ulp, hence the bound here
            assert max(rows.values()) <= 1e-14

    def test_only_galilean_accepted(self):
        t = solve_sss(MINKOWSKIAN, 3.0, 1.0, 1.5)
        with pytest.raises(ValueError):
            galilean_motion_residuals(t)
