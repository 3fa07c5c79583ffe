import csv
import io
import json
import subprocess
import sys

import pytest

from catalyxis.cli import main

SIMPLE = ["--p", "0.45,0.35,0.12,0.08", "--q", "0.56,0.21,0.17,0.06"]
TWO = ["--p", "0.49,0.30,0.13,0.06,0.02", "--q", "0.56,0.25,0.10,0.08,0.01"]
HIGHER = ["--p", "0.47,0.38,0.13,0.02", "--q", "0.53,0.31,0.15,0.01"]
D3 = ["--p", "0.5,0.4,0.1", "--q", "0.6,0.2,0.2"]
COMPARABLE = ["--p", "0.25,0.25,0.25,0.25", "--q", "0.56,0.21,0.17,0.06"]


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv)
    assert code == 0, err
    return json.loads(out)


class TestCheck:
    def test_incomparable(self, capsys):
        d = run_json(capsys, "check", *SIMPLE)
        assert d["order"] == "Incomparable"
        assert d["violation_set"]["indices"] == [2]

    def test_equal(self, capsys):
        d = run_json(capsys, "check", "--p", "0.5,0.5", "--q", "0.5,0.5")
        assert d["order"] == "Equal"
        assert d["delta"]["exact"] == "0" and d["pmax"]["exact"] == "1"

    def test_bad_sum(self, capsys):
        code, out, err = run(capsys, "check", "--p", "0.5,0.4", "--q", "1")
        assert code == 2 and out == "" and "p:" in err

    def test_negative_entry(self, capsys):
        assert run(capsys, "check", "--p", "1.5,-0.5", "--q", "1")[0] == 2

    def test_file_and_flags_conflict(self, capsys, tmp_path):
        f = tmp_path / "x.json"
        f.write_text('{"p": ["1"], "q": ["1"]}')
        assert run(capsys, "check", str(f), "--p", "1")[0] == 2

    def test_missing_file(self, capsys, tmp_path):
        assert run(capsys, "check", str(tmp_path / "nope.json"))[0] == 2

    def test_csv_file(self, capsys, tmp_path):
        f = tmp_path / "pair.csv"
        f.write_text("p,0.45,0.35,0.12,0.08\nq,0.56,0.21,0.17,0.06\n")
        assert run_json(capsys, "check", str(f)) == run_json(capsys, "check", *SIMPLE)

    def test_out_file(self, capsys, tmp_path):
        target = tmp_path / "o.json"
        code, out, _ = run(capsys, "check", *SIMPLE, "--out", str(target))
        assert code == 0 and out == ""
        assert json.loads(target.read_text())["kind"] == "check"


class TestBounds:
    def test_higher_example(self, capsys):
        d = run_json(capsys, "bounds", *HIGHER)
        t1 = d["theorem1"]
        assert (t1["a"]["exact"], t1["b"]["exact"]) == ("53/31", "31/15")
        assert d["dimension_bound"]["k_min"] == 3
        assert d["dimension_bound"]["value"] == pytest.approx(2.35359, abs=1e-5)
        s = d["sanders"]
        assert s["dim_bound"] == pytest.approx(0.918917, abs=1e-6) and s["dim_trivial"]
        assert s["R_bound"]["exact"] == "-363/2125" and s["R_trivial"]

    def test_window(self, capsys):
        w = run_json(capsys, "bounds", *SIMPLE)["qubit_window"]
        assert (w["t_lo"]["exact"], w["t_hi"]["exact"]) == ("3/11", "17/38")

    def test_comparable_exit(self, capsys):
        code, out, err = run(capsys, "bounds", *COMPARABLE)
        assert code == 3 and out == "" and "majorized" in err


class TestCurve:
    def test_default_grid(self, capsys):
        code, out, _ = run(capsys, "curve", *TWO)
        assert code == 0
        rows = list(csv.DictReader(io.StringIO(out)))
        assert list(rows[0]) == ["t", "pmax", "delta", "catalytic"]
        assert len(rows) == 1001
        flag = {r["t"]: r["catalytic"] for r in rows}
        assert flag["0.2"] == "1" and flag["0.35"] == "1" and flag["0.3"] == "0"
        assert flag["0"] == "0" and flag["0.5"] == "0"
        for r in rows:
            assert (r["catalytic"] == "1") == (r["delta"] == "0") == (r["pmax"] == "1")

    def test_samples_validation(self, capsys):
        assert run(capsys, "curve", *TWO, "--samples", "1")[0] == 2


class TestScan:
    @pytest.mark.parametrize("args,count", [(TWO, 2), (SIMPLE, 1), (D3, 0)])
    def test_region_counts(self, capsys, args, count):
        d = run_json(capsys, "scan", *args, "--resolution", "200")
        assert d["region_count"] == len(d["regions"]) == count

    def test_comparable_exit(self, capsys):
        assert run(capsys, "scan", *COMPARABLE)[0] == 3

    def test_bad_options(self, capsys):
        assert run(capsys, "scan", *SIMPLE, "--resolution", "3")[0] == 2
        assert run(capsys, "scan", *SIMPLE, "--precision", "abc")[0] == 2


class TestSearch:
    def test_higher_qubit_empty(self, capsys):
        d = run_json(capsys, "search", *HIGHER, "--k", "2", "--resolution", "100")
        assert d["count"] == 0 and d["exhausted"] and d["catalysts"] == []

    def test_two_region_hits(self, capsys):
        d = run_json(capsys, "search", *TWO, "--k", "2", "--resolution", "20")
        assert ["4/5", "1/5"] in d["catalysts"]
        assert d["count"] == len(d["catalysts"])

    def test_k1_empty(self, capsys):
        assert run_json(capsys, "search", *SIMPLE, "--k", "1")["count"] == 0

    def test_limit_exit(self, capsys):
        code, out, err = run(capsys, "search", *SIMPLE, "--k", "4", "--resolution", "60", "--limit", "100")
        assert code == 4 and out == ""

    def test_bad_k(self, capsys):
        assert run(capsys, "search", *SIMPLE, "--k", "0")[0] == 2


def test_output_is_deterministic(tmp_path):
    cmd = [sys.executable, "-m", "catalyxis", "scan", *TWO, "--resolution", "100"]
    a = subprocess.run(cmd, capture_output=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert a == b and a


def test_help_lists_subcommands(capsys):
    with pytest.raises(SystemExit) as info:
        main(["--help"])
    assert info.value.code == 0
    out = capsys.readouterr().out
    for name in ("check", "bounds", "curve", "scan", "search"):
        assert name in out
