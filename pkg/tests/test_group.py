"""Tests for the matrix realization: generators, isometry, distance,
triangle measurement and construction."""

from __future__ import annotations

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cktrig.errors import DegenerateError, ExistenceError
from cktrig.geometry import (
    CANONICAL_NINE,
    ELLIPTIC,
    EUCLIDEAN,
    GALILEAN,
    HYPERBOLIC,
    MINKOWSKIAN,
    Geometry,
)
from cktrig.group import (
    apply,
    distance,
    exp_j12,
    exp_p1,
    exp_p2,
    is_isometry,
    make_triangle_sas,
    measure_triangle,
    origin,
    point_from_polar,
    polar_coordinates,
)

labels = st.floats(min_value=-4.0, max_value=4.0, allow_nan=False)
params = st.floats(min_value=-5.0, max_value=5.0, allow_nan=False)
geometries = st.builds(Geometry, labels, labels)


class TestGenerators:
    def test_zero_parameter_is_identity(self):
        for name, g in CANONICAL_NINE:
            for gen in (exp_p1, exp_p2, exp_j12):
                np.testing.assert_allclose(gen(g, 0.0), np.eye(3), atol=0)

    def test_flat_translation_is_shear(self):
        np.testing.assert_allclose(
            exp_p1(EUCLIDEAN, 2.0),
            [[1, 0, 0], [2, 1, 0], [0, 0, 1]],
            atol=0,
        )

    def test_quarter_turn_translation(self):
        np.testing.assert_allclose(
            exp_p1(ELLIPTIC, math.pi / 2),
            [[0, -1, 0], [1, 0, 0], [0, 0, 1]],
            atol=1e-15,
        )

    def test_second_axis_flat_shear(self):
        np.testing.assert_allclose(
            exp_p2(GALILEAN, 3.0),
            [[1, 0, 0], [0, 1, 0], [3, 0, 1]],
            atol=0,
        )

    def test_second_axis_mixed_label(self):
        # k1 = 1, k2 = -1 gives the combined label -1: a boost block.
        g = Geometry(1.0, -1.0)
        m = exp_p2(g, 1.0)
        assert m[0, 0] == pytest.approx(math.cosh(1.0))
        assert m[0, 2] == pytest.approx(math.sinh(1.0))
        assert m[2, 0] == pytest.approx(math.sinh(1.0))
        assert m[1, 1] == 1.0

    def test_rotation_blocks(self):
        m = exp_j12(ELLIPTIC, math.pi / 2)
        np.testing.assert_allclose(m[1:, 1:], [[0, -1], [1, 0]], atol=1e-15)
        b = exp_j12(MINKOWSKIAN, 1.0)
        np.testing.assert_allclose(
            b[1:, 1:],
            [[math.cosh(1), math.sinh(1)], [math.sinh(1), math.cosh(1)]],
            atol=1e-15,
        )


class TestIsometry:
    def test_identity(self):
        for _, g in CANONICAL_NINE:
            assert is_isometry(g, np.eye(3))

    def test_scaling_fails(self):
        assert not is_isometry(ELLIPTIC, np.diag([1.0, 2.0, 1.0]))

    @given(g=geometries, a=params, b=params, c=params)
    @settings(max_examples=200)
    def test_generator_products(self, g, a, b, c):
        m = exp_p1(g, a) @ exp_j12(g, b) @ exp_p2(g, c)
        assert is_isometry(g, m, tol=1e-12)

    @given(a=params, b=params)
    @settings(max_examples=100)
    def test_elliptic_matrices_are_rotations(self, a, b):
        m = exp_p1(ELLIPTIC, a) @ exp_j12(ELLIPTIC, b)
        np.testing.assert_allclose(m.T @ m, np.eye(3), atol=1e-13)
        assert np.linalg.det(m) == pytest.approx(1.0, abs=1e-13)


class TestPointsAndDistance:
    def test_apply_translation_to_origin(self):
        g = HYPERBOLIC
        p = apply(exp_p1(g, 2.0), origin())
        np.testing.assert_allclose(p, [math.cosh(2), math.sinh(2), 0.0], atol=1e-14)

    @given(g=geometries, r=st.floats(min_value=0.0, max_value=1.4), chi=params)
    @settings(max_examples=200)
    def test_apply_preserves_quadric(self, g, r, chi):
        p = point_from_polar(g, r, chi)
        m = exp_p1(g, 0.7) @ exp_j12(g, chi / 2.0 + 0.1)
        q = apply(m, p)

        def form_terms(x):
            return x[0] ** 2, g.k1 * x[1] ** 2, g.k12 * x[2] ** 2

        # The form value can be a small difference of large terms, so the
        # comparison is scaled by the largest term entering it.
        scale = max(1.0, *(abs(t) for t in form_terms(p)), *(abs(t) for t in form_terms(q)))
        assert abs(sum(form_terms(q)) - sum(form_terms(p))) <= 1e-11 * scale

    def test_distance_spec_values(self):
        assert distance(ELLIPTIC, origin(), np.array([0.0, 1.0, 0.0])) == pytest.approx(
            math.pi / 2
        )
        far = np.array([math.cosh(2.0), math.sinh(2.0), 0.0])
        assert distance(HYPERBOLIC, origin(), far) == pytest.approx(2.0, abs=1e-14)
        assert distance(GALILEAN, origin(), origin()) == 0.0

    def test_distance_second_kind_pair(self):
        u = np.array([1.0, 0.0, 0.0])
        v = np.array([1.0, 0.0, 3.0])
        with pytest.raises(DegenerateError):
            distance(MINKOWSKIAN, u, v)

    def test_distance_translated_second_kind_pair(self):
        # Both displaced from the origin; their mutual separation is still
        # second-kind and must be rejected.
        u = np.array([1.0, 5.0, 1.0])
        v = np.array([1.0, 5.0, 4.0])
        with pytest.raises(DegenerateError):
            distance(MINKOWSKIAN, u, v)

    @given(
        g=geometries,
        r=st.floats(min_value=0.01, max_value=1.4),
        chi=st.floats(min_value=-1.4, max_value=1.4),
        m1=params,
        m2=params,
    )
    @settings(max_examples=200)
    def test_distance_invariance(self, g, r, chi, m1, m2):
        u = origin()
        v = point_from_polar(g, r, chi)
        d0 = distance(g, u, v)
        m = exp_j12(g, m2) @ exp_p1(g, m1)
        d1 = distance(g, apply(m, u), apply(m, v))
        # Transported coordinates carry noise quadratic in the transport
        # entries (cosh 5 ~ 74), so the match degrades with |m|.
        slack = 1e-13 * max(1.0, float(np.abs(m).max()) ** 2)
        assert abs(d1 - d0) <= max(1e-10, slack)

    @given(
        g=geometries,
        r=st.one_of(st.just(0.0), st.floats(min_value=1e-6, max_value=1.4)),
        chi=st.floats(min_value=-1.4, max_value=1.4),
    )
    @settings(max_examples=200)
    def test_polar_round_trip(self, g, r, chi):
        p = point_from_polar(g, r, chi)
        r2, chi2 = polar_coordinates(g, p)
        p2 = point_from_polar(g, r2, chi2)
        np.testing.assert_allclose(p2, p, atol=1e-12)


class TestMeasureTriangle:
    def test_octant(self):
        q = math.pi / 2
        t, verts = make_triangle_sas(ELLIPTIC, q, q, q)
        for v in (t.a, t.b, t.c, t.A, t.B, t.C):
            assert v == pytest.approx(q, abs=1e-12)
        t2 = measure_triangle(ELLIPTIC, *verts)
        assert t2.c == pytest.approx(q, abs=1e-12)

    def test_euclidean_3_4_5(self):
        Cv = origin()
        Av = np.array([1.0, 3.0, 0.0])
        Bv = np.array([1.0, 3.0, 4.0])
        t = measure_triangle(EUCLIDEAN, Cv, Av, Bv)
        assert sorted([t.a, t.b, t.c]) == pytest.approx([3.0, 4.0, 5.0], abs=1e-12)
        # The right angle sits at vertex A; stored A is its external value.
        assert t.A == pytest.approx(math.pi - math.pi / 2, abs=1e-12)

    def test_collinear_raises(self):
        Cv = origin()
        Av = np.array([1.0, 1.0, 0.0])
        Bv = np.array([1.0, 2.0, 0.0])
        with pytest.raises(DegenerateError):
            measure_triangle(EUCLIDEAN, Cv, Av, Bv)

    def test_coincident_raises(self):
        with pytest.raises(DegenerateError):
            measure_triangle(EUCLIDEAN, origin(), origin(), np.array([1.0, 1.0, 0.0]))


class TestMakeTriangle:
    def test_euclidean_sas(self):
        t, _ = make_triangle_sas(EUCLIDEAN, 3.0, math.pi / 2, 4.0)
        assert t.c == pytest.approx(5.0, abs=1e-12)

    def test_galilean_sas(self):
        t, _ = make_triangle_sas(GALILEAN, 5.0, 0.2, 2.0)
        assert t.c == pytest.approx(3.0, abs=1e-12)
        # Angle relations of the flat angular label: A = B + C.
        assert t.A == pytest.approx(t.B + t.C, abs=1e-12)

    def test_galilean_nonexistent(self):
        with pytest.raises(ExistenceError):
            make_triangle_sas(GALILEAN, 1.0, 0.2, 5.0)

    def test_minkowskian_closing_condition(self):
        # Sides too balanced for the reversed triangle inequality.
        with pytest.raises(ExistenceError):
            make_triangle_sas(MINKOWSKIAN, 1.0, 0.8, 1.0)

    def test_hyperbolic_equilateral_round_trip(self):
        # SSS-consistent equilateral: inner angle from the side-1 cosine rule.
        cos_inner = (math.cosh(1.0) ** 2 - math.cosh(1.0)) / math.sinh(1.0) ** 2
        inner = math.acos(cos_inner)
        t, _ = make_triangle_sas(HYPERBOLIC, 1.0, inner, 1.0)
        assert t.c == pytest.approx(1.0, abs=1e-12)
        assert t.C == pytest.approx(inner, abs=1e-12)
        assert t.B == pytest.approx(inner, abs=1e-12)
        assert t.A == pytest.approx(math.pi - inner, abs=1e-12)

    @given(
        g=geometries,
        a=st.floats(min_value=0.1, max_value=1.3),
        b=st.floats(min_value=0.1, max_value=1.3),
        C=st.floats(min_value=0.1, max_value=1.3),
    )
    @settings(max_examples=300)
    def test_round_trip_inputs(self, g, a, b, C):
        if g.k1 > 0:
            q = math.pi / (2 * math.sqrt(g.k1))
            a = min(a, 0.95 * q)
            b = min(b, 0.95 * q)
        if g.k2 > 0:
            C = min(C, 0.9 * math.pi / math.sqrt(g.k2))
        try:
            t, _ = make_triangle_sas(g, a, C, b)
        except (ExistenceError, DegenerateError):
            return
        assert t.a == pytest.approx(a, rel=1e-10, abs=1e-10)
        assert t.b == pytest.approx(b, rel=1e-10, abs=1e-10)
        assert t.C == pytest.approx(C, rel=1e-10, abs=1e-10)
