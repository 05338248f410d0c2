"""The command-line surface: formats, exit codes, determinism."""
from __future__ import annotations

import json

import pytest

from refdata import FDECOMP_TABLE, TSUM_TABLE, VALUES_TABLE
from torusideals.cli import fdecomp_string, main, tsum_string, values_rows
from torusideals.intpoly import intpoly_from_json, laurent_from_json
from torusideals.zeta import local_zeta_factors, zeta_from_json


def run(capsys, *argv: str) -> tuple[int, str]:
    code = main(list(argv))
    return code, capsys.readouterr().out


class TestCompute:
    def test_eval(self, capsys):
        code, out = run(capsys, "compute", "pg", "--n", "6", "--eval", "3")
        assert code == 0 and out.strip() == "200"
        code, out = run(capsys, "compute", "fpoly", "--n", "14", "--eval", "3")
        assert code == 0 and out.strip() == "1149851"
        code, out = run(capsys, "compute", "pg", "--n", "16", "--eval", "5")
        assert code == 0 and out.strip() == "20344613659"

    def test_polynomial_text(self, capsys):
        code, out = run(capsys, "compute", "pg", "--n", "5")
        assert code == 0 and out.strip() == "X^4 + X^3 - 3*X^2 - 3*X"
        code, out = run(capsys, "compute", "tcheb", "--n", "0")
        assert code == 0 and out.strip() == "2"

    def test_json_round_trip(self, capsys):
        code, out = run(capsys, "compute", "pg", "--n", "8", "--format", "json")
        assert code == 0
        obj = json.loads(out)
        from torusideals.hilbert import pg_via_interval

        assert intpoly_from_json(obj) == pg_via_interval(8)

        code, out = run(capsys, "compute", "cn", "--n", "4", "--format", "json")
        obj = json.loads(out)
        from torusideals.hilbert import cn_via_odd_divisors

        assert laurent_from_json(obj) == cn_via_odd_divisors(4).full

        code, out = run(capsys, "compute", "zeta", "--n", "3", "--format", "json")
        obj = json.loads(out)
        assert zeta_from_json({k: obj[k] for k in ("n", "num", "den")}) == \
            local_zeta_factors(3)

    def test_zeta_text(self, capsys):
        code, out = run(capsys, "compute", "zeta", "--n", "4")
        assert code == 0
        assert out.strip() == "(1-q*t)(1-q^7*t) / (1-t)(1-q^8*t)"

    def test_zeta_rejects_eval(self, capsys):
        code, _ = run(capsys, "compute", "zeta", "--n", "4", "--eval", "1")
        assert code == 2

    def test_bad_index(self, capsys):
        code, _ = run(capsys, "compute", "pg", "--n", "0")
        assert code == 2
        code, _ = run(capsys, "compute", "tcheb", "--n", "-1")
        assert code == 2

    def test_usage_error_exit_code(self):
        with pytest.raises(SystemExit) as exc:
            main(["compute", "nonsense", "--n", "3"])
        assert exc.value.code == 2


class TestTable:
    def test_values_match_reference(self):
        rows = values_rows(16, [3, 4, 5])
        for row in rows:
            n = row["n"]
            pg3, f3, pg4, f4, pg5, f5 = VALUES_TABLE[n]
            assert row[3][:2] == (pg3, f3)
            assert row[4][:2] == (pg4, f4)
            assert row[5][:2] == (pg5, f5)

    def test_decomposition_strings(self):
        for n in range(1, 17):
            assert tsum_string(n) == TSUM_TABLE[n]
            assert fdecomp_string(n) == FDECOMP_TABLE[n]

    def test_values_csv(self, capsys):
        code, out = run(capsys, "table", "values", "--max-n", "3",
                        "--format", "csv")
        assert code == 0
        lines = out.strip().split("\n")
        assert lines[0] == "n,pg_3,f_3,rel_3,pg_4,f_4,rel_4,pg_5,f_5,rel_5"
        assert lines[1] == "1,1,1,equal,1,1,equal,1,1,equal"
        assert lines[3] == "3,10,11,off_by_one,18,19,off_by_one,28,29,off_by_one"

    def test_table_json(self, capsys):
        code, out = run(capsys, "table", "fpoly", "--max-n", "2",
                        "--format", "json")
        assert code == 0
        obj = json.loads(out)
        assert obj["table"] == "fpoly"
        assert obj["rows"][2] == {"n": 2, "coeffs": ["-1", "1", "1"]}

    def test_decomp_text(self, capsys):
        code, out = run(capsys, "table", "decomp", "--max-n", "15")
        assert code == 0
        assert "F14 - F6 + F3 + F0" in out

    def test_default_ranges(self, capsys):
        code, out = run(capsys, "table", "pg")
        assert code == 0
        assert out.strip().split("\n")[-1].startswith("12")


class TestVerify:
    def test_pass_exit_zero(self, capsys):
        code, out = run(capsys, "verify", "cheb", "--max-n", "16")
        assert code == 0 and "PASS" in out

    def test_all_suites_small(self, capsys):
        code, out = run(capsys, "verify", "all", "--max-n", "12")
        assert code == 0
        assert out.count("PASS") == 6

    def test_json_report(self, capsys):
        code, out = run(capsys, "verify", "zeta", "--max-n", "10",
                        "--format", "json")
        assert code == 0
        reports = json.loads(out)
        assert reports[0]["suite"] == "zeta" and reports[0]["failed"] == 0


class TestOeisCheck:
    def test_check_pass_and_fail(self, capsys, tmp_path):
        good = tmp_path / "good.txt"
        good.write_text("1 1\n2 3\n3 4\n4 7\n", encoding="utf-8")
        code, out = run(capsys, "oeis-check", "sigma", str(good))
        assert code == 0 and "PASS" in out

        bad = tmp_path / "bad.txt"
        bad.write_text("1 1\n2 99\n", encoding="utf-8")
        code, out = run(capsys, "oeis-check", "sigma", str(bad))
        assert code == 1 and "FAIL" in out

    def test_parse_error_exit_two(self, capsys, tmp_path):
        mangled = tmp_path / "mangled.txt"
        mangled.write_text("1 1\nnot numbers\n", encoding="utf-8")
        code, _ = run(capsys, "oeis-check", "sigma", str(mangled))
        assert code == 2

    def test_missing_at(self, capsys, tmp_path):
        b = tmp_path / "b.txt"
        b.write_text("1 1\n", encoding="utf-8")
        code, _ = run(capsys, "oeis-check", "pg_eval", str(b))
        assert code == 2

    def test_emit_only(self, capsys, tmp_path):
        out_file = tmp_path / "cand.txt"
        code, _ = run(capsys, "oeis-check", "pg_eval", "--at", "4",
                      "--emit", str(out_file), "--max-n", "8")
        assert code == 0
        lines = out_file.read_text().strip().split("\n")
        assert lines[0] == "1 1" and len(lines) == 8

    def test_no_bfile_no_emit(self, capsys):
        code, _ = run(capsys, "oeis-check", "sigma")
        assert code == 2


class TestOutputFile:
    def test_out_flag_writes_file(self, capsys, tmp_path):
        target = tmp_path / "out.txt"
        code, out = run(capsys, "compute", "pg", "--n", "3", "--out", str(target))
        assert code == 0 and out == ""
        assert target.read_text().strip() == "X^2 + X - 2"

    def test_determinism(self, capsys):
        _, first = run(capsys, "table", "values", "--max-n", "16")
        _, second = run(capsys, "table", "values", "--max-n", "16")
        assert first == second
