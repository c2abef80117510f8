"""End-to-end checks of the command-line interface.

Every test drives :func:`cktrig.cli.main` in-process and parses the JSON
it prints, so the exit-code contract and the record schema are both pinned.
"""

from __future__ import annotations

import json
import math

import pytest

from cktrig.cli import main

RIGHT = 1.5707963267948966


def run(capsys, *args):
    """Invoke the CLI and return (exit_code, stdout-record, stderr-record)."""
    code = main(list(args))
    captured = capsys.readouterr()
    out = json.loads(captured.out) if captured.out.strip().startswith("{") else captured.out
    err = json.loads(captured.err) if captured.err else None
    return code, out, err


class TestGeometryChoice:
    def test_named_preset(self, capsys):
        code, rec, _ = run(capsys, "solve", "--geometry", "hyperbolic",
                           "--given", "a=1,b=1,C=1")
        assert code == 0
        assert rec["geometry"] == {"k1": -1.0, "k2": 1.0, "name": "hyperbolic"}

    def test_spacetime_alias(self, capsys):
        code, rec, _ = run(capsys, "solve", "--geometry", "anti-de-sitter",
                           "--given", "a=1.57,b=0.3,C=1.39")
        assert code == 0
        assert rec["geometry"]["k1"] == 1.0 and rec["geometry"]["k2"] == -1.0

    def test_label_form(self, capsys):
        code, rec, _ = run(capsys, "solve", "--k1", "0.5", "--k2", "-2",
                           "--given", "a=1.85,b=0.49,C=0.62")
        assert code == 0
        assert rec["geometry"]["k1"] == 0.5
        assert rec["geometry"]["name"] is None

    def test_sign_form_picks_unit_labels(self, capsys):
        code, rec, _ = run(capsys, "spacetime", "--sign", "0", "--c", "2",
                           "--given", "a=3,b=1,c=1.5")
        assert code == 0
        assert rec["geometry"]["k1"] == 0.0
        assert rec["geometry"]["k2"] == -0.25

    def test_missing_geometry_is_a_request_error(self, capsys):
        code, _, err = run(capsys, "solve", "--given", "a=1,b=1,C=1")
        assert code == 4
        assert err["exit_code"] == 4

    def test_two_geometry_forms_rejected(self, capsys):
        code, _, err = run(capsys, "solve", "--geometry", "euclidean",
                           "--k1", "0", "--k2", "1", "--given", "a=1,b=1,C=1")
        assert code == 4

    def test_half_label_form_rejected(self, capsys):
        code, _, _ = run(capsys, "solve", "--k1", "1", "--given", "a=1,b=1,C=1")
        assert code == 4

    def test_unknown_name_rejected(self, capsys):
        code, _, err = run(capsys, "solve", "--geometry", "nonsense",
                           "--given", "a=1,b=1,C=1")
        assert code == 4 and "nonsense" in err["message"]

    def test_tau_without_sign_or_name_rejected(self, capsys):
        code, _, _ = run(capsys, "solve", "--tau", "2", "--given", "a=1,b=1,C=1")
        assert code == 4

    def test_units_with_label_form_rejected(self, capsys):
        code, _, _ = run(capsys, "solve", "--k1", "0", "--k2", "-1",
                         "--units", "c=2", "--given", "a=3,b=1,c=1.5")
        assert code == 4

    def test_units_on_non_spacetime_name_rejected(self, capsys):
        code, _, _ = run(capsys, "solve", "--geometry", "elliptic",
                         "--units", "tau=2,c=3", "--given", "a=1,b=1,C=1")
        assert code == 4


class TestSolve:
    def test_euclidean_right_triangle(self, capsys):
        code, rec, _ = run(capsys, "solve", "--geometry", "euclidean",
                           "--given", f"a=3,b=4,C={RIGHT}")
        assert code == 0
        assert rec["sides"]["c"] == pytest.approx(5.0, abs=1e-9)
        assert rec["area"] == pytest.approx(6.0, abs=1e-9)
        assert rec["existence"] is True
        assert rec["determined"] == "full"
        assert rec["signed"]["sides"][0] == -3.0

    def test_side_angle_side_other_labeling(self, capsys):
        _, direct, _ = run(capsys, "solve", "--geometry", "hyperbolic",
                           "--given", "a=1,b=1.2,C=0.8")
        code, relabeled, _ = run(capsys, "solve", "--geometry", "hyperbolic",
                                 "--given",
                                 f"a=1,c=1.2,B=0.8")
        assert code == 0
        assert relabeled["sides"]["b"] == pytest.approx(direct["sides"]["c"], rel=1e-12)
        assert relabeled["angles"]["C"] == pytest.approx(direct["angles"]["B"], rel=1e-12)
        assert relabeled["angles"]["A"] == pytest.approx(direct["angles"]["A"], rel=1e-12)

    def test_three_sides(self, capsys):
        code, rec, _ = run(capsys, "solve", "--geometry", "euclidean",
                           "--given", "a=3,b=4,c=5")
        assert code == 0
        assert rec["angles"]["C"] == pytest.approx(RIGHT, rel=1e-12)

    def test_three_angles_fix_an_elliptic_triangle(self, capsys):
        code, rec, _ = run(capsys, "solve", "--geometry", "elliptic",
                           "--given", "A=1.9,B=0.9,C=1.2")
        assert code == 0
        assert rec["excesses"]["angle_excess"] == pytest.approx(0.2, rel=1e-9)
        assert rec["area"] == pytest.approx(0.2, rel=1e-9)

    def test_galilean_side_pair_closes_linearly(self, capsys):
        code, rec, _ = run(capsys, "solve", "--geometry", "galilean",
                           "--given", "b=2,c=3")
        assert code == 0
        assert rec["sides"] == {"a": 5.0, "b": 2.0, "c": 3.0}
        assert rec["angles"] is None
        assert rec["determined"] == "sides"
        assert rec["existence"] is True
        assert rec["excesses"]["side_excess"] == 0.0

    def test_co_minkowskian_side_pair_with_a_given(self, capsys):
        code, rec, _ = run(capsys, "solve", "--geometry", "co-minkowskian",
                           "--given", "a=5,b=2")
        assert code == 0
        assert rec["sides"]["c"] == 3.0

    def test_euclidean_angle_pair_closes_linearly(self, capsys):
        code, rec, _ = run(capsys, "solve", "--geometry", "euclidean",
                           "--given", "B=0.5,C=0.7")
        assert code == 0
        assert rec["angles"] == {"A": 1.2, "B": 0.5, "C": 0.7}
        assert rec["sides"] is None
        assert rec["determined"] == "angles"

    def test_curved_side_pair_is_underdetermined(self, capsys):
        code, _, err = run(capsys, "solve", "--geometry", "hyperbolic",
                           "--given", "a=1,b=2")
        assert code == 3
        assert err["error"] == "UnderdeterminedError"

    def test_curved_angle_pair_is_underdetermined(self, capsys):
        code, _, _ = run(capsys, "solve", "--geometry", "elliptic",
                         "--given", "B=0.5,C=0.7")
        assert code == 3

    def test_overlong_euclidean_angle_pair_rejected(self, capsys):
        code, _, err = run(capsys, "solve", "--geometry", "euclidean",
                           "--given", "B=2,C=2")
        assert code == 2 and err["error"] == "ExistenceError"

    def test_impossible_triangle_exits_2(self, capsys):
        code, _, err = run(capsys, "solve", "--geometry", "euclidean",
                           "--given", "a=1,b=1,c=5")
        assert code == 2
        assert err["error"] == "ExistenceError" and err["exit_code"] == 2

    def test_unknown_part_names_rejected(self, capsys):
        code, _, _ = run(capsys, "solve", "--geometry", "euclidean",
                         "--given", "a=1,b=1,Z=1")
        assert code == 4

    def test_unsupported_part_combination_rejected(self, capsys):
        code, _, _ = run(capsys, "solve", "--geometry", "euclidean",
                         "--given", "b=1,c=1,A=1")
        assert code == 4

    def test_non_numeric_value_rejected(self, capsys):
        code, _, _ = run(capsys, "solve", "--geometry", "euclidean",
                         "--given", "a=xyz,b=1,C=1")
        assert code == 4

    def test_repeated_part_rejected(self, capsys):
        code, _, _ = run(capsys, "solve", "--geometry", "euclidean",
                         "--given", "a=1,a=2,C=1")
        assert code == 4


class TestSolveOrtho:
    def test_euclidean_from_leg_and_hypotenuse(self, capsys):
        code, rec, _ = run(capsys, "solve-ortho", "--geometry", "euclidean",
                           "--given", "a=3,h=4")
        assert code == 0
        assert rec["parts"]["b"] == pytest.approx(5.0, abs=1e-12)
        assert rec["area"] == pytest.approx(6.0, abs=1e-12)
        assert max(rec["relation_residuals"].values()) <= 1e-12

    def test_one_part_is_underdetermined(self, capsys):
        code, _, _ = run(capsys, "solve-ortho", "--geometry", "euclidean",
                         "--given", "a=3")
        assert code == 3

    def test_flat_side_pair_conflict_exits_2(self, capsys):
        code, _, err = run(capsys, "solve-ortho", "--geometry", "galilean",
                           "--given", "a=1,b=2")
        assert code == 2 and err["error"] == "InconsistentError"

    def test_unknown_part_rejected(self, capsys):
        code, _, _ = run(capsys, "solve-ortho", "--geometry", "euclidean",
                         "--given", "a=3,B=1")
        assert code == 4


class TestVerify:
    def test_solved_triangle_passes(self, capsys):
        code, rec, _ = run(capsys, "verify", "--geometry", "doubly-hyperbolic",
                           "--given", "a=1.57,b=0.3,C=1.39")
        assert code == 0
        assert rec["pass"] is True
        assert set(rec["residuals"]) == {
            "basic", "point_A", "point_B", "point_C",
            "line_a", "line_b", "line_c", "holonomy_defect",
        }

    def test_all_six_parts_accepted(self, capsys):
        _, solved, _ = run(capsys, "verify", "--geometry", "hyperbolic",
                           "--given", "a=1,b=1.2,C=0.8")
        t = solved["triangle"]
        given = ",".join(f"{k}={t[k]!r}" for k in ("a", "b", "c", "A", "B", "C"))
        code, rec, _ = run(capsys, "verify", "--geometry", "hyperbolic",
                           "--given", given)
        assert code == 0 and rec["pass"] is True

    def test_tol_flag_controls_the_verdict(self, capsys):
        code, rec, _ = run(capsys, "verify", "--geometry", "hyperbolic",
                           "--given", "a=1,b=1.2,C=0.8", "--tol", "1e-30")
        assert code == 0
        assert rec["pass"] is False and rec["tol"] == 1e-30

    def test_env_tolerance_is_the_default(self, capsys, monkeypatch):
        monkeypatch.setenv("CKTRIG_TOL", "1e-3")
        code, rec, _ = run(capsys, "verify", "--geometry", "euclidean",
                           "--given", "a=3,b=4,c=5")
        assert code == 0 and rec["tol"] == 1e-3

    def test_partial_parts_cannot_be_verified(self, capsys):
        code, _, _ = run(capsys, "verify", "--geometry", "galilean",
                         "--given", "b=2,c=3")
        assert code == 3


class TestIdentities:
    def test_full_run_passes(self, capsys):
        code, rec, _ = run(capsys, "identities", "--geometry", "de-sitter",
                           "--samples", "100", "--seed", "7", "--tol", "1e-9")
        assert code == 0
        assert rec["all_pass"] is True
        assert rec["bestiarium"]["all_pass"] is True
        assert rec["appendix"]["all_pass"] is True
        assert {row["status"] for row in rec["bestiarium"]["rows"]} <= {
            "pass", "degenerate-pass", "skipped"}

    def test_appendix_suite_needs_no_geometry(self, capsys):
        code, rec, _ = run(capsys, "identities", "--suite", "appendix",
                           "--samples", "50", "--seed", "1")
        assert code == 0 and rec["all_pass"] is True
        assert "bestiarium" not in rec

    def test_bestiarium_suite_needs_a_geometry(self, capsys):
        code, _, _ = run(capsys, "identities", "--suite", "bestiarium")
        assert code == 4

    def test_nonpositive_samples_rejected(self, capsys):
        code, _, _ = run(capsys, "identities", "--geometry", "euclidean",
                         "--samples", "0")
        assert code == 4


class TestTable:
    @pytest.mark.parametrize("which,cells", [(2, 9), (3, 9), (4, 6)])
    def test_sweeps_pass(self, capsys, which, cells):
        code, rec, _ = run(capsys, "table", "--which", str(which),
                           "--samples", "20", "--seed", "5")
        assert code == 0
        assert rec["all_pass"] is True
        assert len(rec["cells"]) == cells

    def test_kinematical_units_sweep(self, capsys):
        code, rec, _ = run(capsys, "table", "--which", "4", "--samples", "10",
                           "--seed", "5", "--units", "tau=2,c=3")
        assert code == 0
        assert rec["all_pass"] is True and rec["units"] == {"tau": 2.0, "c": 3.0}

    def test_unknown_table_rejected(self, capsys):
        code, _, _ = run(capsys, "table", "--which", "7")
        assert code == 4

    def test_deterministic_for_fixed_seed(self, capsys):
        _, first, _ = run(capsys, "table", "--which", "2", "--samples", "5",
                          "--seed", "11")
        _, second, _ = run(capsys, "table", "--which", "2", "--samples", "5",
                           "--seed", "11")
        assert first == second


class TestSpacetime:
    def test_minkowskian_twin_defect(self, capsys):
        code, rec, _ = run(capsys, "spacetime", "--geometry", "minkowskian",
                           "--units", "c=1", "--given", "a=3,b=1,c=1.5")
        assert code == 0
        assert rec["twin_defect"] == pytest.approx(0.5, abs=1e-12)
        assert rec["units"] == {"tau": None, "c": 1.0, "curvature_sign": 0}
        assert max(rec["classical_rows"].values()) <= 1e-10

    def test_galilean_motion_laws_included(self, capsys):
        code, rec, _ = run(capsys, "spacetime", "--geometry", "galilean",
                           "--given", "a=5,b=2,C=0.7")
        assert code == 0
        assert rec["twin_defect"] == 0.0
        assert max(rec["galilean_laws"].values()) <= 1e-14

    def test_sign_form(self, capsys):
        code, rec, _ = run(capsys, "spacetime", "--sign", "-1", "--tau", "2",
                           "--c", "3", "--given", "a=2.4,b=0.5,C=2.0")
        assert code == 0
        assert rec["geometry"]["k1"] == -0.25
        assert rec["twin_defect"] >= 0.0
        assert "galilean_laws" not in rec

    def test_non_spacetime_geometry_rejected(self, capsys):
        code, _, _ = run(capsys, "spacetime", "--geometry", "elliptic",
                         "--given", "a=1,b=1,C=0.5")
        assert code == 4

    def test_partial_parts_rejected(self, capsys):
        code, _, _ = run(capsys, "spacetime", "--geometry", "galilean",
                         "--given", "b=2,c=3")
        assert code == 3


class TestOutput:
    def test_text_is_a_flat_rendering(self, capsys):
        code = main(["solve", "--geometry", "euclidean",
                     "--given", "a=3,b=4,c=5", "--output", "text"])
        lines = capsys.readouterr().out.splitlines()
        assert code == 0
        assert "geometry.name = euclidean" in lines
        assert any(line.startswith("sides.c = 5.0") for line in lines)

    def test_text_matches_json_content(self, capsys):
        _, rec, _ = run(capsys, "solve", "--geometry", "euclidean",
                        "--given", "a=3,b=4,c=5")
        main(["solve", "--geometry", "euclidean", "--given", "a=3,b=4,c=5",
              "--output", "text"])
        text = capsys.readouterr().out
        assert f"area = {rec['area']!r}" in text

    def test_report_file_mirrors_stdout(self, capsys, tmp_path):
        path = tmp_path / "record.json"
        code, rec, _ = run(capsys, "solve", "--geometry", "euclidean",
                           "--given", "a=3,b=4,c=5",
                           "--report-file", str(path))
        assert code == 0
        assert json.loads(path.read_text()) == rec

    def test_report_file_written_even_for_text_output(self, capsys, tmp_path):
        path = tmp_path / "record.json"
        code = main(["verify", "--geometry", "euclidean",
                     "--given", "a=3,b=4,c=5", "--output", "text",
                     "--report-file", str(path)])
        capsys.readouterr()
        assert code == 0
        assert json.loads(path.read_text())["pass"] is True

    def test_error_payload_shape(self, capsys):
        code, _, err = run(capsys, "solve", "--geometry", "euclidean",
                           "--given", "a=1,b=1,c=9")
        assert code == 2
        assert set(err) == {"error", "message", "exit_code"}

    def test_infinite_scales_serialize_as_null(self, capsys):
        code, rec, _ = run(capsys, "spacetime", "--geometry", "galilean",
                           "--given", "a=5,b=2,C=0.7")
        assert code == 0
        assert rec["units"]["tau"] is None and rec["units"]["c"] is None
        assert json.dumps(rec)  # strict JSON round-trip

    def test_json_output_is_deterministic(self, capsys):
        args = ["identities", "--geometry", "hyperbolic", "--samples", "30",
                "--seed", "9"]
        _, first, _ = run(capsys, *args)
        _, second, _ = run(capsys, *args)
        assert first == second
