"""CLI surface: subcommands, exit codes, JSON validity, determinism."""

import json


import galrep.cli as cli
from galrep.classify import Verification


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr().out
    return code, out


class TestClassifyCommand:
    def test_json_report(self, capsys):
        code, out = run(capsys, "classify", "--p", "5", "--f", "x^5-5", "--n", "1")
        assert code == 0
        data = json.loads(out)
        assert data["schema"] == 1
        assert data["psi"]["label"] == "wild--"
        assert data["conductor"] == {"exponent": 9, "status": "computed"}
        assert data["verification"]["match"] is True

    def test_coefficient_list_input(self, capsys):
        code, out = run(capsys, "classify", "--p", "5", "--f", '["-5","0","0","0","0","1"]', "--n", "1")
        assert code == 0
        assert json.loads(out)["input"]["f"] == ["-5", "0", "0", "0", "0", "1"]

    def test_text_format(self, capsys):
        code, out = run(capsys, "classify", "--p", "5", "--f", "x^5-5", "--n", "1", "--format", "text")
        assert code == 0
        assert "conductor exponent N = 9" in out
        assert "√5" in out

    def test_refused_exit_three(self, capsys):
        code, out = run(capsys, "classify", "--p", "5", "--f", "x^5+x+1", "--n", "1")
        assert code == 3
        data = json.loads(out)
        assert "irreducibility" in data["refused"]["failures"]

    def test_bad_polynomial_exit_two(self, capsys):
        code, out = run(capsys, "classify", "--p", "5", "--f", "x^4-5", "--n", "1")
        assert code == 2
        assert json.loads(out)["error"]["code"] == "degree_mismatch"

    def test_unparsable_exit_two(self, capsys):
        code, out = run(capsys, "classify", "--p", "5", "--f", "x**5-5", "--n", "1")
        assert code == 2
        assert json.loads(out)["error"]["code"] == "poly_parse"

    def test_missing_flag_exit_two(self, capsys):
        code = cli.main(["classify", "--p", "5", "--f", "x^5-5"])
        capsys.readouterr()
        assert code == 2


class TestChartabCommand:
    def test_full_p7_has_19_rows(self, capsys):
        code, out = run(capsys, "chartab", "--p", "7", "--group", "full")
        assert code == 0
        data = json.loads(out)
        assert len(data["rows"]) == 19
        assert len(data["classes"]) == 19
        dims = sorted(r["dimension"] for r in data["rows"])
        assert dims == [1] * 12 + [2] * 3 + [6] * 4

    def test_text_rendering(self, capsys):
        code, out = run(capsys, "chartab", "--p", "3", "--group", "inertia", "--format", "text")
        assert code == 0
        assert "wild-" in out and "tame0" in out

    def test_group_bound(self, capsys):
        code, out = run(capsys, "chartab", "--p", "17")
        assert code == 2
        assert json.loads(out)["error"]["code"] == "p_beyond_bound"


class TestCountCommand:
    def test_curve(self, capsys):
        code, out = run(capsys, "count", "--mode", "curve", "--p", "5", "--m", "2")
        assert code == 0
        data = json.loads(out)
        assert data == {"mode": "curve", "p": 5, "m": 2, "affine": 5, "total": 6, "trace": 20}

    def test_twisted(self, capsys):
        code, out = run(capsys, "count", "--mode", "twisted", "--p", "3", "--n", "3")
        assert code == 0
        data = json.loads(out)
        assert data["affine_solutions"] == 36
        assert data["trace_sigma_frob"] == -9

    def test_twisted_naive(self, capsys):
        code, out = run(capsys, "count", "--mode", "twisted-naive", "--p", "3", "--n", "1")
        assert code == 0
        assert json.loads(out)["affine_solutions"] == 0

    def test_missing_mode_flags(self, capsys):
        code, out = run(capsys, "count", "--mode", "curve", "--p", "5")
        assert code == 2
        assert json.loads(out)["error"]["code"] == "missing_flag"

    def test_budget_override(self, capsys):
        code, out = run(capsys, "count", "--mode", "curve", "--p", "3", "--m", "4", "--enum-budget", "10")
        assert code == 2
        assert json.loads(out)["error"]["code"] == "budget_exceeded"


class TestVerifyCommand:
    def test_single_pair(self, capsys):
        code, out = run(capsys, "verify", "--p", "3", "--n", "1")
        assert code == 0
        data = json.loads(out)
        assert data["all_match"] is True
        assert data["pairs"] == [
            {"p": 3, "n": 1, "status": "ok", "trace_counted": 3, "trace_predicted": 3, "match": True}
        ]

    def test_mismatch_exit_four(self, capsys, monkeypatch):
        broken = Verification(status="mismatch", trace_counted=1, trace_predicted=2, match=False)
        monkeypatch.setattr(cli, "verify_consistency", lambda *a, **k: broken)
        code, out = run(capsys, "verify", "--p", "3", "--n", "1")
        assert code == 4
        assert json.loads(out)["all_match"] is False

    def test_incomplete_pair_flags(self, capsys):
        code, out = run(capsys, "verify", "--p", "3")
        assert code == 2
        assert json.loads(out)["error"]["code"] == "missing_flag"


class TestDeterminism:
    def test_repeated_runs_byte_identical(self, capsys):
        _, first = run(capsys, "classify", "--p", "5", "--f", "x^5-5", "--n", "1")
        _, second = run(capsys, "classify", "--p", "5", "--f", "x^5-5", "--n", "1")
        assert first == second

    def test_separate_processes_byte_identical(self):
        # fresh interpreters have different hash seeds; output must not care
        import subprocess
        import sys

        cmd = [sys.executable, "-m", "galrep", "classify", "--p", "5", "--f", "x^5-5", "--n", "1"]
        first = subprocess.run(cmd, capture_output=True, check=True).stdout
        second = subprocess.run(cmd, capture_output=True, check=True).stdout
        assert first == second and first

    def test_worker_count_does_not_change_output(self, capsys):
        outputs = []
        for workers in ("1", "3", "4"):
            _, out = run(capsys, "count", "--mode", "curve", "--p", "3", "--m", "4",
                         "--workers", workers)
            outputs.append(out)
        assert outputs[0] == outputs[1] == outputs[2]

    def test_chartab_round_trips_through_json(self, capsys):
        _, out = run(capsys, "chartab", "--p", "5", "--group", "full")
        data = json.loads(out)
        assert json.loads(json.dumps(data)) == data
