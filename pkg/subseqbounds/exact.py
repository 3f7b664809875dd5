from __future__ import annotations

from itertools import islice
from typing import Iterator, List, Sequence, Set

from subseqbounds.runstring import RunString

ORACLE_MAX_LENGTH = 22


class OracleCapExceeded(ValueError):
    pass


def _suffix_counts(runs: Sequence[int], t_max: int) -> List[int]:
    """Counts |D_t| of the whole string for t = 0..t_max.

    Every suffix is identified by (run index, unconsumed length of that run),
    which is the same as its start position. Rows are filled from the last
    suffix backwards using the split

        |D_t(s^a e^j Y)| = |D_t(s^{a-1} e^j Y)| + |D_{t-a}(e^{j-1} Y)|,  t < |X|

    so each state is evaluated once. The table is local to the call.
    """
    n = sum(runs)
    remaining = []
    for length in runs:
        remaining.extend(range(length, 0, -1))
    last_run_start = n - runs[-1] if runs else 0

    table: List[List[int]] = [[] for _ in range(n + 1)]
    table[n] = [1] + [0] * t_max
    for p in range(n - 1, -1, -1):
        size = n - p
        a = remaining[p]
        row = [0] * (t_max + 1)
        top = min(size, t_max)
        if p >= last_run_start:
            for t in range(top + 1):
                row[t] = 1
        else:
            nxt = table[p + 1]
            jump = table[p + a + 1]
            for t in range(top + 1):
                if t == 0 or t == size:
                    row[t] = 1
                elif t >= a:
                    row[t] = nxt[t] + jump[t - a]
                else:
                    row[t] = nxt[t]
        table[p] = row
    return table[0]


def _count_runs(runs: Sequence[int], t: int) -> int:
    n = sum(runs)
    if t < 0 or t > n:
        return 0
    if not runs or t == 0 or t == n:
        return 1
    return _suffix_counts(runs, t)[t]


def count_subsequences(x: RunString, t: int) -> int:
    if t < 0:
        raise ValueError(f"t must be nonnegative, got {t}")
    return _count_runs(x.runs, t)


def count_all_t(x: RunString) -> List[int]:
    return _suffix_counts(x.runs, x.length)


def _strip_first_symbol_of_second_run(runs: Sequence[int]) -> List[int]:
    rest = list(runs[1:])
    rest[0] -= 1
    return rest if rest[0] > 0 else rest[1:]


def count_subsequences_by_first_run(x: RunString, t: int) -> int:
    """|D_t(x)| via the first-run expansion

        |D_t(x_1..x_r)| = |D_t(x_2..x_r)| + sum_{i=1}^{x_1} |D_{t-i}(x_2-1, x_3..x_r)|
                          + [n - x_1 < t <= n]
    """
    if t < 0:
        raise ValueError(f"t must be nonnegative, got {t}")
    runs = x.runs
    n = x.length
    if t > n:
        return 0
    if len(runs) == 1:
        return 1
    x1 = runs[0]
    tail = _strip_first_symbol_of_second_run(runs)
    total = _count_runs(runs[1:], t)
    total += sum(_count_runs(tail, t - i) for i in range(1, x1 + 1))
    if t > n - x1:
        total += 1
    return total


def count_subsequences_by_last_run(x: RunString, t: int) -> int:
    return count_subsequences_by_first_run(x.reverse(), t)


def enumerate_subsequences(
    x: RunString, t: int, max_length: int = ORACLE_MAX_LENGTH
) -> Set[str]:
    """The literal set D_t(x), built one deletion at a time.

    Deleting any symbol of a run gives the same string, so each layer only
    removes the first symbol of every run.
    """
    if t < 0:
        raise ValueError(f"t must be nonnegative, got {t}")
    _check_oracle(x, max_length)
    if t > x.length:
        return set()
    return next(islice(_deletion_layers(x.to_bits()), t, None))


def oracle_counts(x: RunString, max_length: int = ORACLE_MAX_LENGTH) -> List[int]:
    _check_oracle(x, max_length)
    return [len(layer) for layer in _deletion_layers(x.to_bits())]


def _check_oracle(x: RunString, max_length: int) -> None:
    if x.length > max_length:
        raise OracleCapExceeded(
            f"enumeration refused: length {x.length} exceeds the oracle cap {max_length}"
        )


def _deletion_layers(bits: str) -> Iterator[Set[str]]:
    layer = {bits}
    yield layer
    for _ in range(len(bits)):
        layer = {
            s[:i] + s[i + 1 :]
            for s in layer
            for i in range(len(s))
            if i == 0 or s[i] != s[i - 1]
        }
        yield layer
