"""CLI tests: parsing, output schema, exit codes, selftest."""

import cmath
import json
import math

import pytest

from gausshyp import HypParams, euler_integral
from gausshyp.cli import main, parse_complex
from conftest import Z_EXC, rel_err


class TestParseComplex:
    def test_plain_real(self):
        assert parse_complex("0.5") == 0.5 + 0j
        assert parse_complex("-5") == -5.0 + 0j
        assert parse_complex("1.5e-3") == 0.0015 + 0j

    def test_cartesian(self):
        assert parse_complex("0.5+0.8660254i") == complex(0.5, 0.8660254)
        assert parse_complex("-1-1i") == complex(-1, -1)
        assert parse_complex("2-3j") == complex(2, -3)
        assert parse_complex("1.5e-3+2e+1i") == complex(0.0015, 20.0)

    def test_pure_imaginary(self):
        assert parse_complex("i") == 1j
        assert parse_complex("-i") == -1j
        assert parse_complex("2.5j") == 2.5j

    def test_bare_sign_imaginary_part(self):
        assert parse_complex("1+i") == complex(1, 1)
        assert parse_complex("1-i") == complex(1, -1)

    def test_exceptional_tokens(self):
        assert parse_complex("exp(i*pi/3)") == cmath.exp(1j * math.pi / 3)
        assert parse_complex("exp(-i*pi/3)") == cmath.exp(-1j * math.pi / 3)

    def test_rejects_garbage(self):
        import argparse

        for bad in ("abc", "1+2", "i*pi", "--3"):
            with pytest.raises(argparse.ArgumentTypeError):
                parse_complex(bad)


class TestEvalCommand:
    def test_json_schema_and_value(self, capsys):
        code = main(["eval", "--a", "1", "--b", "1", "--c", "2", "--z", "0.5"])
        assert code == 0
        payload = json.loads(capsys.readouterr().out)
        assert set(payload) == {"value", "method", "terms", "est_error", "in_region_margin"}
        assert abs(payload["value"]["re"] - 2.0 * math.log(2.0)) <= 1e-7
        assert payload["method"] == "maclaurin"

    def test_threepoint_at_exceptional_point(self, capsys):
        code = main(
            [
                "eval",
                "--a", "1.2", "--b", "2.1", "--c", "3",
                "--z", "exp(i*pi/3)",
                "--method", "threepoint",
                "--terms", "20",
            ]
        )
        assert code == 0
        payload = json.loads(capsys.readouterr().out)
        got = complex(payload["value"]["re"], payload["value"]["im"])
        ref = euler_integral(HypParams(1.2, 2.1, 3.0), Z_EXC).value
        assert rel_err(got, ref) <= 1e-12
        assert payload["method"] == "threepoint"
        assert payload["in_region_margin"] > 0

    def test_text_format(self, capsys):
        code = main(["eval", "--a", "1", "--b", "1", "--c", "2", "--z", "0.5", "--format", "text"])
        assert code == 0
        out = capsys.readouterr().out
        assert "method     = maclaurin" in out
        assert "converged  = True" in out

    def test_integer_difference_exit_code(self, capsys):
        code = main(
            ["eval", "--a", "1.2", "--b", "2.2", "--c", "3", "--z", "-5", "--method", "buhring"]
        )
        assert code == 4
        assert "IntegerDifferenceError" in capsys.readouterr().err

    def test_domain_error_exit_code(self, capsys):
        code = main(
            ["eval", "--a", "1.2", "--b", "2.1", "--c", "3", "--z", "3", "--method", "maclaurin"]
        )
        assert code == 3

    def test_usage_error_exit_code(self, capsys):
        assert main(["eval", "--a", "1", "--b", "1", "--c", "2", "--z", "nonsense"]) == 2
        assert main(["eval", "--a", "1"]) == 2
        assert main(["bogus"]) == 2

    def test_out_file(self, tmp_path, capsys):
        target = tmp_path / "result.json"
        code = main(
            ["eval", "--a", "1", "--b", "1", "--c", "2", "--z", "0.5", "--out", str(target)]
        )
        assert code == 0
        payload = json.loads(target.read_text())
        assert abs(payload["value"]["re"] - 2.0 * math.log(2.0)) <= 1e-7


class TestTableCommand:
    def test_csv_stdout(self, capsys):
        assert main(["table", "--id", "1"]) == 0
        out = capsys.readouterr().out
        lines = out.strip().split("\n")
        assert lines[0] == "row,method,0,5,10,15,20"
        assert len(lines) == 11

    def test_json_format(self, capsys):
        assert main(["table", "--id", "4", "--format", "json"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["table"] == 4
        assert payload["rows"][0]["errors"]["threepoint"]["20"] < 1e-10

    def test_bad_id(self, capsys):
        assert main(["table", "--id", "9"]) == 2


class TestRegionCommand:
    def test_csv(self, capsys):
        code = main(
            [
                "region", "--method", "twopoint",
                "--xmin", "-4", "--xmax", "4", "--ymin", "-4", "--ymax", "4",
                "--res", "17",
            ]
        )
        assert code == 0
        lines = capsys.readouterr().out.strip().split("\n")
        assert lines[0] == "x,y,inside,margin"
        assert len(lines) == 1 + 17 * 17

    def test_resolution_guard(self, capsys):
        code = main(
            [
                "region", "--method", "twopoint",
                "--xmin", "-4", "--xmax", "4", "--ymin", "-4", "--ymax", "4",
                "--res", "5000",
            ]
        )
        assert code == 2

    def test_onepoint_w_missing_w(self, capsys):
        code = main(
            [
                "region", "--method", "onepoint-w",
                "--xmin", "-2", "--xmax", "2", "--ymin", "-2", "--ymax", "2",
                "--res", "9",
            ]
        )
        assert code == 2


class TestSelftest:
    def test_all_checks_pass(self, capsys):
        assert main(["selftest"]) == 0
        out = capsys.readouterr().out
        assert "FAIL" not in out
        assert out.strip().endswith("checks passed")
