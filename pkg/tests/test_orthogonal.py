"""Orthogonal-triangle completion, relations, areas, and classical forms."""

from __future__ import annotations

import itertools
import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cktrig.errors import ExistenceError, InconsistentError, UnderdeterminedError
from cktrig.geometry import (
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
    Geometry,
)
from cktrig.orthogonal import (
    OrthoTriangle,
    classical_ortho_residuals,
    ortho_area,
    ortho_area_residuals,
    ortho_relation_residuals,
    solve_ortho,
)

from conftest import bounded_labels, sample_ortho

PART_NAMES = ("a", "b", "h", "C", "A")


class TestWorkedExamples:
    def test_euclidean_three_four_five(self):
        t = solve_ortho(EUCLIDEAN, a=3.0, h=4.0)
        assert t.b == pytest.approx(5.0, abs=1e-12)
        assert t.C == pytest.approx(math.asin(4.0 / 5.0), abs=1e-12)
        assert t.A == pytest.approx(t.C, abs=1e-12)
        assert ortho_area(t) == pytest.approx(6.0, abs=1e-12)

    def test_galilean_slope(self):
        t = solve_ortho(GALILEAN, a=2.0, h=1.0)
        assert t.b == 2.0
        assert t.C == pytest.approx(0.5, abs=1e-15)
        assert t.A == t.C

    def test_hyperbolic_from_b_and_inner_angle(self):
        t = solve_ortho(HYPERBOLIC, b=1.0, C=0.6)
        # frozen from math.asinh(math.sinh(1) * math.sin(0.6)) and
        # math.atanh(math.tanh(1) * math.cos(0.6))
        assert t.h == pytest.approx(0.6225654512003399, abs=1e-12)
        assert t.a == pytest.approx(0.7390498846693818, abs=1e-12)
        assert t.h == pytest.approx(math.asinh(math.sinh(1.0) * math.sin(0.6)), abs=1e-12)
        assert t.a == pytest.approx(math.atanh(math.tanh(1.0) * math.cos(0.6)), abs=1e-12)

    def test_dict_round_trip(self):
        t = solve_ortho(HYPERBOLIC, b=1.0, C=0.6)
        again = OrthoTriangle.from_dict(t.to_dict())
        assert again == t


class TestDispatch:
    def test_every_pair_round_trips(self):
        rng = random.Random(11)
        for _, g in CANONICAL_NINE:
            for _ in range(12):
                t = sample_ortho(g, rng)
                parts = t.parts()
                for pair in itertools.combinations(PART_NAMES, 2):
                    kwargs = {k: parts[k] for k in pair}
                    try:
                        solved = solve_ortho(g, **kwargs)
                    except UnderdeterminedError:
                        flat_ab = g.k2 == 0.0 and set(pair) == {"a", "b"}
                        flat_ca = g.k1 == 0.0 and set(pair) == {"C", "A"}
                        assert flat_ab or flat_ca
                        continue
                    for name in PART_NAMES:
                        expected = parts[name]
                        got = getattr(solved, name)
                        assert got == pytest.approx(expected, rel=1e-10, abs=1e-10), (
                            g, pair, name)

    def test_wrong_arity_rejected(self):
        with pytest.raises(UnderdeterminedError):
            solve_ortho(EUCLIDEAN)
        with pytest.raises(UnderdeterminedError):
            solve_ortho(EUCLIDEAN, a=1.0)
        with pytest.raises(UnderdeterminedError):
            solve_ortho(EUCLIDEAN, a=1.0, b=2.0, h=1.5)

    def test_nonpositive_parts_rejected(self):
        with pytest.raises(ExistenceError):
            solve_ortho(EUCLIDEAN, a=-1.0, h=2.0)
        with pytest.raises(ExistenceError):
            solve_ortho(EUCLIDEAN, a=0.0, h=2.0)
        with pytest.raises(ExistenceError):
            solve_ortho(EUCLIDEAN, a=math.nan, h=2.0)


class TestDegeneratePairs:
    @pytest.mark.parametrize("geom", [CO_EUCLIDEAN, GALILEAN, CO_MINKOWSKIAN])
    def test_sides_alone_underdetermined_at_flat_angle_label(self, geom):
        with pytest.raises(UnderdeterminedError):
            solve_ortho(geom, a=1.2, b=1.2)

    @pytest.mark.parametrize("geom", [CO_EUCLIDEAN, GALILEAN, CO_MINKOWSKIAN])
    def test_unequal_sides_inconsistent_at_flat_angle_label(self, geom):
        with pytest.raises(InconsistentError):
            solve_ortho(geom, a=1.0, b=1.5)

    @pytest.mark.parametrize("geom", [EUCLIDEAN, GALILEAN, MINKOWSKIAN])
    def test_angles_alone_underdetermined_at_flat_side_label(self, geom):
        with pytest.raises(UnderdeterminedError):
            solve_ortho(geom, C=0.7, A=0.7)

    @pytest.mark.parametrize("geom", [EUCLIDEAN, GALILEAN, MINKOWSKIAN])
    def test_unequal_angles_inconsistent_at_flat_side_label(self, geom):
        with pytest.raises(InconsistentError):
            solve_ortho(geom, C=0.7, A=0.9)


class TestExistenceLimits:
    def test_minkowskian_hypotenuse_must_dominate(self):
        # b^2 = a^2 - h^2 has no solution when h > a
        with pytest.raises(ExistenceError):
            solve_ortho(MINKOWSKIAN, a=1.0, h=2.0)

    def test_doubly_hyperbolic_sine_bound(self):
        # sin h = sinh b sinh C caps the product at 1
        with pytest.raises(ExistenceError):
            solve_ortho(DOUBLY_HYPERBOLIC, b=2.0, C=2.0)

    def test_elliptic_needs_wider_inner_angle(self):
        # cos C = cos A cos h forces C > A when the side label is positive
        with pytest.raises(ExistenceError):
            solve_ortho(ELLIPTIC, C=0.4, A=0.9)

    def test_co_minkowskian_needs_wider_external_angle(self):
        # C^2 = A^2 - h^2 forces C < A
        with pytest.raises(ExistenceError):
            solve_ortho(CO_MINKOWSKIAN, C=0.9, A=0.4)


class TestRelations:
    def test_twelve_relation_catalog_shape(self):
        rng = random.Random(0)
        t = sample_ortho(ELLIPTIC, rng)
        rows = ortho_relation_residuals(t)
        assert set(rows) == {
            "side_cosine_a", "side_cosine_b", "side_cosine_h",
            "angle_sine_A", "angle_balance", "angle_cosine_C",
            "sine_a", "sine_h",
            "tangent_C", "tangent_Ch", "tangent_Ah", "tangent_A",
        }

    @pytest.mark.parametrize("name,geom", CANONICAL_NINE, ids=[n for n, _ in CANONICAL_NINE])
    def test_relations_hold_in_canonical_geometries(self, name, geom):
        rng = random.Random(hash(name) & 0xFFFF)
        for _ in range(60):
            t = sample_ortho(geom, rng)
            assert max(ortho_relation_residuals(t).values()) <= 1e-12
            assert max(ortho_area_residuals(t).values()) <= 1e-12

    def test_galilean_relations_exact(self):
        rng = random.Random(5)
        for _ in range(20):
            t = sample_ortho(GALILEAN, rng)
            assert max(ortho_relation_residuals(t).values()) == 0.0

    @settings(max_examples=120, deadline=None)
    @given(
        k1=bounded_labels,
        k2=bounded_labels,
        b=st.floats(min_value=0.05, max_value=2.0),
        C=st.floats(min_value=0.05, max_value=1.4),
    )
    def test_relations_hold_at_arbitrary_labels(self, k1, k2, b, C):
        g = Geometry(k1, k2)
        if g.k1 > 0.0:
            b = min(b, 0.85 * math.pi / (2.0 * math.sqrt(g.k1)))
        elif g.k1 < -1.0:
            b /= math.sqrt(-g.k1)
        if g.k2 > 0.0:
            C = min(C, 0.85 * math.pi / (2.0 * math.sqrt(g.k2)))
        elif g.k2 < -1.0:
            C /= math.sqrt(-g.k2)
        try:
            t = solve_ortho(g, b=b, C=C)
        except ExistenceError:
            return
        assert max(ortho_relation_residuals(t).values()) <= 1e-11
        assert max(ortho_area_residuals(t).values()) <= 1e-11


class TestAreas:
    def test_flat_branch_is_half_leg_product(self):
        t = solve_ortho(EUCLIDEAN, a=3.0, h=4.0)
        assert ortho_area(t) == 6.0
        t = solve_ortho(MINKOWSKIAN, a=3.0, h=1.0)
        assert ortho_area(t) == 1.5

    def test_curved_area_is_angle_gap(self):
        rng = random.Random(21)
        for geom in (ELLIPTIC, HYPERBOLIC, CO_HYPERBOLIC, DOUBLY_HYPERBOLIC):
            t = sample_ortho(geom, rng)
            assert ortho_area(t) == (t.C - t.A) / geom.k1
            assert ortho_area(t) > 0.0

    def test_both_labeled_formulas_agree(self):
        rng = random.Random(22)
        for _, geom in CANONICAL_NINE:
            for _ in range(30):
                rows = ortho_area_residuals(sample_ortho(geom, rng))
                assert rows["sine_area"] <= 1e-12
                assert rows["cosine_area"] <= 1e-12


class TestTable3:
    EXPECTED_KEYS = {
        "elliptic": {"side_b", "angle_C", "sine_h", "tangent_h",
                     "sine_a", "tangent_a", "area"},
        "euclidean": {"side_b", "angle_C", "sine_h", "tangent_a", "area"},
        "hyperbolic": {"side_b", "angle_C", "sine_h", "tangent_h",
                       "sine_a", "tangent_a", "area"},
        "co-euclidean": {"side_b", "angle_C", "sine_h", "tangent_h", "area"},
        "galilean": {"side_b", "angle_C", "sine_h", "area"},
        "co-minkowskian": {"side_b", "angle_C", "sine_h", "tangent_h", "area"},
        "co-hyperbolic": {"side_b", "angle_C", "sine_h", "tangent_h",
                          "sine_a", "tangent_a", "area"},
        "minkowskian": {"side_b", "angle_C", "sine_h", "tangent_a", "area"},
        "doubly-hyperbolic": {"side_b", "angle_C", "sine_h", "tangent_h",
                              "sine_a", "tangent_a", "area"},
    }

    @pytest.mark.parametrize("name,geom", CANONICAL_NINE, ids=[n for n, _ in CANONICAL_NINE])
    def test_classical_forms_match_labeled_solution(self, name, geom):
        rng = random.Random(len(name))
        for _ in range(40):
            rows = classical_ortho_residuals(sample_ortho(geom, rng))
            assert set(rows) == self.EXPECTED_KEYS[name]
            assert max(rows.values()) <= 1e-12

    def test_non_unit_labels_rejected(self):
        t = solve_ortho(Geometry(2.0, 1.0), b=0.4, C=0.4)
        with pytest.raises(ValueError):
            classical_ortho_residuals(t)
