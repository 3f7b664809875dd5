from __future__ import annotations

import csv
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import IO, Iterable, List, Optional, Union

from tqdm import tqdm

from subseqbounds.balanced import BalancedCounter
from subseqbounds.bounds import hr_lower, hr_upper, lev_lower, lev_upper, naive_upper
from subseqbounds.exact import count_all_t
from subseqbounds.runstring import RunString
from subseqbounds.unbalanced import lower_bound_general

CSV_HEADER = [
    "t",
    "lev_lower",
    "hr_lower",
    "new_lower",
    "exact",
    "new_upper",
    "hr_upper",
    "lev_upper",
    "naive_upper",
]


@dataclass
class SweepRow:
    t: int
    lev_lower: int
    hr_lower: int
    new_lower: int
    exact: Optional[int]
    new_upper: int
    hr_upper: int
    lev_upper: int
    naive_upper: int

    def cells(self) -> List[str]:
        return [
            "" if getattr(self, name) is None else str(getattr(self, name)) for name in CSV_HEADER
        ]


def sweep_rows(
    n: int,
    r: int,
    k: Optional[int] = None,
    x: Optional[RunString] = None,
    verbose: bool = False,
) -> List[SweepRow]:
    """One row of bounds per t = 0..n for r-run strings of length n.

    ``k`` defaults to ceil(n/r); a larger k still gives a valid upper bound.
    ``x`` adds its exact counts as the ``exact`` column.
    """
    if not 1 <= r <= n:
        raise ValueError(f"need 1 <= r <= n, got n={n}, r={r}")
    k_min = -(-n // r)
    if k is None:
        k = k_min
    if k < k_min:
        raise ValueError(f"k={k} is below ceil(n/r)={k_min}; B_(r,k) would be shorter than n")
    exact = None
    if x is not None:
        if (x.length, x.num_runs) != (n, r):
            raise ValueError(f"string has n={x.length}, r={x.num_runs}, sweep is for n={n}, r={r}")
        exact = count_all_t(x)

    counter = BalancedCounter(k)
    ts: Iterable[int] = range(n + 1)
    if verbose:
        ts = tqdm(ts, desc=f"sweep n={n} r={r}")
    rows = []
    for t in ts:
        rows.append(
            SweepRow(
                t=t,
                lev_lower=lev_lower(r, t),
                hr_lower=hr_lower(r, t),
                new_lower=lower_bound_general(n, r, t),
                exact=None if exact is None else exact[t],
                new_upper=counter.b_closed(r, t),
                hr_upper=hr_upper(n, t),
                lev_upper=lev_upper(r, t),
                naive_upper=naive_upper(n, t),
            )
        )
    return rows


def write_csv(rows: Iterable[SweepRow], out: Union[str, Path, IO[str]]) -> None:
    if isinstance(out, (str, Path)):
        if str(out) == "-":
            _write(rows, sys.stdout)
            return
        with open(out, "w", newline="") as fh:
            _write(rows, fh)
    else:
        _write(rows, out)


def _write(rows: Iterable[SweepRow], fh: IO[str]) -> None:
    writer = csv.writer(fh, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for row in rows:
        writer.writerow(row.cells())


def check_sweep(rows: Iterable[SweepRow], n: int, r: int) -> List[str]:
    problems = []
    for row in rows:
        if row.new_upper > row.lev_upper:
            problems.append(f"t={row.t}: new_upper {row.new_upper} > lev_upper {row.lev_upper}")
        if n % r == 0 and row.new_upper > row.hr_upper:
            problems.append(f"t={row.t}: new_upper {row.new_upper} > hr_upper {row.hr_upper}")
        if row.t <= r and row.new_lower < row.hr_lower:
            problems.append(f"t={row.t}: new_lower {row.new_lower} < hr_lower {row.hr_lower}")
        if row.exact is not None and not row.new_lower <= row.exact <= row.new_upper:
            problems.append(
                f"t={row.t}: exact {row.exact} outside [{row.new_lower}, {row.new_upper}]"
            )
    return problems
