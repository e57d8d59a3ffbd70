"""Tests for the command line interface: exit codes, JSON round trips, and
deterministic output."""

import json

import pytest

from braidops.cli import main, poly_from_json, poly_to_json
from braidops.multipoly import MultiPoly
from braidops.words import staircase


def run(argv, capsys):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestJsonForms:
    def test_round_trip(self):
        p = staircase(3) + MultiPoly.variable(3, 2).scale("1/2-2z")
        assert poly_from_json(poly_to_json(p), 3) == p

    def test_wrong_arity_rejected(self):
        with pytest.raises(Exception):
            poly_from_json([{"e": [1, 0], "c": "1"}], 3)


class TestVerify:
    def test_passing_family_exits_zero(self, capsys):
        code, out, _ = run(
            ["verify", "--n", "4", "--family", "case1", "--params", "1,2,1,2,3"],
            capsys,
        )
        assert code == 0
        assert "overall: pass" in out

    def test_constraint_violation_exits_two(self, capsys):
        code, _, err = run(
            ["verify", "--n", "3", "--family", "case1", "--params", "1,1,1,0,1"],
            capsys,
        )
        assert code == 2
        assert "ad" in err

    def test_missing_params_exits_two(self, capsys):
        code, _, err = run(["verify", "--n", "3", "--family", "case1"], capsys)
        assert code == 2

    def test_unknown_family_exits_two(self, capsys):
        code, _, err = run(
            ["verify", "--n", "3", "--family", "nope", "--params", "1"], capsys
        )
        assert code == 2

    def test_random_trials_deterministic(self, capsys):
        argv = [
            "verify", "--n", "4", "--family", "case2",
            "--random-trials", "3", "--rng-seed", "5",
        ]
        code1, out1, _ = run(argv, capsys)
        code2, out2, _ = run(argv, capsys)
        assert code1 == code2 == 0
        assert out1 == out2

    def test_json_output(self, capsys):
        code, out, _ = run(
            [
                "verify", "--n", "4", "--family", "case2",
                "--params", "0,1,0,0", "--lines", "l1,l2,l4",
                "--output", "json",
            ],
            capsys,
        )
        assert code == 0
        data = json.loads(out)
        assert data["passed"] is True
        assert set(data["cubic"]) == {"1,2", "2,3"}


class TestHecke:
    def test_case1_values(self, capsys):
        code, out, _ = run(
            [
                "hecke", "--n", "3", "--family", "case1",
                "--params", "1,2,1,2,3", "--output", "json",
            ],
            capsys,
        )
        assert code == 0
        data = json.loads(out)
        assert data["hecke"] == [
            {"index": 1, "mu": "1", "nu": "6"},
            {"index": 2, "mu": "1", "nu": "6"},
        ]


class TestTable:
    def test_six_entries_for_s3(self, capsys):
        code, out, _ = run(
            [
                "table", "--n", "3", "--family", "preset:pure_ddiff",
                "--params", "1", "--output", "json",
            ],
            capsys,
        )
        assert code == 0
        data = json.loads(out)
        assert data["n"] == 3
        assert len(data["entries"]) == 6
        polys = {
            tuple(e["perm"]): poly_from_json(e["poly"], 3) for e in data["entries"]
        }
        assert polys[(3, 2, 1)] == staircase(3)
        assert polys[(1, 2, 3)] == MultiPoly.const(3, 1)

    def test_byte_identical_across_runs(self, capsys):
        argv = ["table", "--n", "3", "--family", "preset:demazure"]
        _, out1, _ = run(argv, capsys)
        _, out2, _ = run(argv, capsys)
        assert out1 == out2

    def test_custom_seed_inline(self, capsys):
        seed = json.dumps(poly_to_json(MultiPoly.monomial(3, (1, 0, 0))))
        code, out, _ = run(
            [
                "apply", "--n", "3", "--family", "preset:pure_ddiff",
                "--word", "1", "--seed-poly", seed, "--output", "json",
            ],
            capsys,
        )
        assert code == 0
        data = json.loads(out)
        assert poly_from_json(data["poly"], 3) == MultiPoly.const(3, 1)


class TestApply:
    def test_empty_word(self, capsys):
        code, out, _ = run(
            ["apply", "--n", "3", "--family", "preset:demazure", "--output", "json"],
            capsys,
        )
        assert code == 0
        data = json.loads(out)
        assert poly_from_json(data["poly"], 3) == staircase(3)


class TestCommute:
    def test_consecutive_demazure_fails(self, capsys):
        code, out, _ = run(
            [
                "commute", "--n", "4",
                "--family", "preset:demazure",
                "--family2", "preset:demazure",
            ],
            capsys,
        )
        assert code == 1
        assert "overall: FAIL" in out


class TestConfigFamilies:
    def test_degen_t_from_config(self, tmp_path, capsys):
        cfg = {
            "qhat": [{"e": [0, 0], "c": "1"}],
            "p": ["0", "1"],
            "pairs": [[["0", "1"], ["1"]], [["1"], ["0", "1"]]],
        }
        path = tmp_path / "degent.json"
        path.write_text(json.dumps(cfg))
        code, out, _ = run(
            ["verify", "--n", "3", "--family", "degen-t", "--config", str(path)],
            capsys,
        )
        assert code == 0

    def test_vanq0_from_config(self, tmp_path, capsys):
        cfg = {
            "mu": "1",
            "isolated": [
                {
                    "index": 1,
                    "phi": [{"e": [0, 0], "c": "1"}],
                    "psi": [{"e": [1, 0], "c": "1"}],
                }
            ],
            "intervals": [],
        }
        path = tmp_path / "vanq0.json"
        path.write_text(json.dumps(cfg))
        code, out, _ = run(
            ["verify", "--n", "4", "--family", "vanq0", "--config", str(path)],
            capsys,
        )
        assert code == 0

    def test_missing_config_exits_two(self, capsys):
        code, _, err = run(["verify", "--n", "4", "--family", "vanq0"], capsys)
        assert code == 2
