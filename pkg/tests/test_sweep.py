import csv
import io

import pytest

from subseqbounds import RunString, SweepRow, check_sweep, sweep_rows, write_csv
from subseqbounds.sweep import CSV_HEADER


class TestSweepRows:
    def test_one_row_per_t(self):
        rows = sweep_rows(13, 5)
        assert [row.t for row in rows] == list(range(14))
        assert rows[5].new_lower == 8

    def test_exact_column(self):
        rows = sweep_rows(4, 2, x=RunString.from_bits("0011"))
        assert [row.exact for row in rows] == [1, 2, 3, 2, 1]
        assert check_sweep(rows, 4, 2) == []

    def test_no_string_leaves_exact_empty(self):
        rows = sweep_rows(6, 3)
        assert all(row.exact is None for row in rows)
        assert rows[0].cells()[CSV_HEADER.index("exact")] == ""

    def test_larger_k_is_still_an_upper_bound(self):
        tight = sweep_rows(12, 4)
        loose = sweep_rows(12, 4, k=5)
        assert all(a.new_upper <= b.new_upper for a, b in zip(tight, loose))

    def test_k_below_ceiling(self):
        with pytest.raises(ValueError, match="below ceil"):
            sweep_rows(10, 3, k=3)

    def test_shape_mismatch(self):
        with pytest.raises(ValueError, match="string has n=4"):
            sweep_rows(5, 2, x=RunString.from_bits("0011"))

    def test_bad_runs(self):
        with pytest.raises(ValueError, match="1 <= r <= n"):
            sweep_rows(4, 5)

    def test_verbose(self, capsys):
        rows = sweep_rows(8, 4, verbose=True)
        assert len(rows) == 9
        assert "sweep n=8 r=4" in capsys.readouterr().err


class TestWriteCsv:
    def test_header_and_rows(self):
        buf = io.StringIO()
        write_csv(sweep_rows(4, 2, x=RunString.from_bits("0011")), buf)
        lines = buf.getvalue().split("\n")
        assert lines[0] == ",".join(CSV_HEADER)
        assert lines[-1] == ""
        assert len(lines) == 7
        parsed = list(csv.DictReader(io.StringIO(buf.getvalue())))
        assert [row["exact"] for row in parsed] == ["1", "2", "3", "2", "1"]

    def test_file_is_deterministic(self, tmp_path):
        first, second = tmp_path / "a.csv", tmp_path / "b.csv"
        write_csv(sweep_rows(20, 6), first)
        write_csv(sweep_rows(20, 6), str(second))
        data = first.read_bytes()
        assert data == second.read_bytes()
        assert b"\r" not in data

    def test_stdout(self, capsys):
        write_csv(sweep_rows(3, 3), "-")
        out = capsys.readouterr().out
        assert out.startswith("t,lev_lower,hr_lower,new_lower,exact,")
        assert out.count("\n") == 5

    def test_big_integers_are_exact(self):
        buf = io.StringIO()
        write_csv(sweep_rows(120, 24), buf)
        parsed = list(csv.DictReader(io.StringIO(buf.getvalue())))
        assert int(parsed[0]["naive_upper"]) == 2**120
        assert "e" not in parsed[0]["naive_upper"]


class TestCheckSweep:
    def test_divisible_shape(self):
        assert check_sweep(sweep_rows(120, 24), 120, 24) == []

    @pytest.mark.slow
    def test_uneven_shape(self):
        assert check_sweep(sweep_rows(300, 200), 300, 200) == []

    def test_exact_outside(self):
        row = SweepRow(
            t=1,
            lev_lower=1,
            hr_lower=1,
            new_lower=3,
            exact=2,
            new_upper=4,
            hr_upper=4,
            lev_upper=4,
            naive_upper=8,
        )
        problems = check_sweep([row], 4, 2)
        assert problems == ["t=1: exact 2 outside [3, 4]"]

    def test_upper_above_levenshtein(self):
        row = SweepRow(1, 1, 1, 1, None, 5, 9, 4, 8)
        assert check_sweep([row], 4, 2) == ["t=1: new_upper 5 > lev_upper 4"]
