import csv
import json
from pathlib import Path

from subseqbounds import TransformTrace
from subseqbounds.cli import EXIT_FAILED, EXIT_OK, EXIT_USAGE, main

FIXTURES = Path(__file__).parent / "fixtures"


class TestCount:
    def test_runs(self, capsys):
        assert main(["count", "--runs", "0:3,7,2,1,2", "--t", "6"]) == EXIT_OK
        assert capsys.readouterr().out == "43\n"

    def test_bits_with_oracle(self, capsys):
        argv = ["count", "--bits", "0011100111100", "--t", "5", "--oracle"]
        assert main(argv) == EXIT_OK
        assert capsys.readouterr().out == "60\n"

    def test_zero_deletions(self, capsys):
        assert main(["count", "--bits", "0110", "--t", "0"]) == EXIT_OK
        assert capsys.readouterr().out == "1\n"

    def test_constant_string(self, capsys):
        assert main(["count", "--bits", "000", "--t", "1"]) == EXIT_OK
        assert capsys.readouterr().out == "1\n"

    def test_oracle_cap(self, capsys):
        argv = ["count", "--bits", "0011", "--t", "1", "--oracle", "--oracle-cap", "3"]
        assert main(argv) == EXIT_USAGE
        assert "oracle cap" in capsys.readouterr().err

    def test_bad_bits(self, capsys):
        assert main(["count", "--bits", "0021", "--t", "1"]) == EXIT_USAGE
        assert capsys.readouterr().err.startswith("error:")

    def test_missing_string(self, capsys):
        assert main(["count", "--t", "1"]) == EXIT_USAGE
        capsys.readouterr()


class TestBounds:
    def test_shape(self, capsys):
        assert main(["bounds", "--n", "13", "--r", "5", "--t", "5"]) == EXIT_OK
        out = capsys.readouterr().out
        assert "new_lower=8" in out
        assert "exact" not in out

    def test_shape_from_string(self, capsys, tmp_path):
        path = tmp_path / "report.json"
        argv = ["bounds", "--runs", "0:2,3,2,4,2", "--t", "5", "--save", str(path)]
        assert main(argv) == EXIT_OK
        assert "exact=60" in capsys.readouterr().out
        assert json.loads(path.read_text())["exact"] == 60

    def test_needs_shape(self, capsys):
        assert main(["bounds", "--t", "2"]) == EXIT_USAGE
        assert "--n and --r" in capsys.readouterr().err


class TestSweep:
    def test_to_file(self, tmp_path, capsys):
        out = tmp_path / "sweep.csv"
        argv = ["sweep", "--n", "15", "--r", "5", "--exact", "0:3,7,2,1,2"]
        assert main(argv + ["--out", str(out), "--check"]) == EXIT_OK
        rows = list(csv.DictReader(out.open()))
        assert len(rows) == 16
        assert rows[6]["exact"] == "43"
        assert rows[6]["new_upper"] == "105"
        assert capsys.readouterr().err == ""

    def test_stdout(self, capsys):
        assert main(["sweep", "--n", "4", "--r", "2"]) == EXIT_OK
        assert capsys.readouterr().out.splitlines()[0].startswith("t,lev_lower")

    def test_bad_k(self, capsys):
        assert main(["sweep", "--n", "10", "--r", "3", "--k", "2"]) == EXIT_USAGE
        assert "below ceil" in capsys.readouterr().err


class TestTrace:
    def test_balance_matches_fixture(self, capsys):
        assert main(["trace", "balance", "--runs", "0:3,7,2,1,2", "--t", "6"]) == EXIT_OK
        assert capsys.readouterr().out == (FIXTURES / "table1.txt").read_text()

    def test_unbalance_save(self, capsys, tmp_path):
        path = tmp_path / "trace.json"
        argv = ["trace", "unbalance", "--bits", "0011100111100", "--t", "5", "--save", str(path)]
        assert main(argv) == EXIT_OK
        assert capsys.readouterr().out == (FIXTURES / "table2.txt").read_text()
        assert TransformTrace.load(path).counts == [60, 38, 26, 20, 14, 10]

    def test_already_balanced(self, capsys):
        assert main(["trace", "balance", "--runs", "0:3,3", "--t", "1"]) == EXIT_OK
        assert len(capsys.readouterr().out.splitlines()) == 2

    def test_flip(self, capsys):
        assert main(["trace", "flip", "--bits", "0011", "--t", "1"]) == EXIT_OK
        assert capsys.readouterr().out.splitlines()[-1].split()[1] == "0101"

    def test_precondition_failure(self, capsys):
        assert main(["trace", "balance", "--runs", "0:2,3", "--t", "1"]) == EXIT_USAGE
        assert "not divisible" in capsys.readouterr().err

    def test_unknown_kind(self, capsys):
        assert main(["trace", "shuffle", "--bits", "01", "--t", "1"]) == EXIT_USAGE
        capsys.readouterr()


class TestGap:
    def test_lower(self, capsys):
        assert main(["gap", "lower", "--n", "300", "--r", "200", "--t", "100"]) == EXIT_OK
        assert "log2=" in capsys.readouterr().out

    def test_patterns(self, capsys):
        assert main(["gap", "patterns", "--r", "20", "--k", "10", "--t", "100"]) == EXIT_OK
        assert "B_(r=20,k=10)" in capsys.readouterr().out

    def test_missing_arguments(self, capsys):
        assert main(["gap", "lower", "--r", "5", "--t", "2"]) == EXIT_USAGE
        assert main(["gap", "patterns", "--r", "5", "--t", "2"]) == EXIT_USAGE
        capsys.readouterr()


class TestVerify:
    def test_single_suite(self, capsys):
        argv = ["verify", "sandwiches", "--max-n", "5", "--samples", "10"]
        assert main(argv) == EXIT_OK
        assert "[sandwiches] ok" in capsys.readouterr().out

    def test_unknown_suite(self, capsys):
        assert main(["verify", "nope"]) == EXIT_USAGE
        capsys.readouterr()

    def test_exit_codes_are_distinct(self):
        assert len({EXIT_OK, EXIT_FAILED, EXIT_USAGE}) == 3


def test_help(capsys):
    assert main(["--help"]) == EXIT_OK
    assert "verify" in capsys.readouterr().out
