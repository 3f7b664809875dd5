from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property
from pathlib import Path
from typing import List, Optional, Sequence, Tuple, Union

from subseqbounds.exact import count_subsequences
from subseqbounds.runstring import RunString, make_unbalanced, parse_string
from subseqbounds.unbalanced import u_recursive

INCREASING = "increasing"
DECREASING = "decreasing"


class PreconditionError(ValueError):
    def __init__(self, condition: str, message: str):
        super().__init__(f"{condition}: {message}")
        self.condition = condition


def _complement_bits(bits: str) -> str:
    return bits.translate(str.maketrans("01", "10"))


def insert_symbol(x: RunString, pos: int, bit: int) -> RunString:
    if not 0 <= pos <= x.length:
        raise PreconditionError("position", f"pos {pos} outside [0, {x.length}]")
    if bit not in (0, 1):
        raise PreconditionError("symbol", f"bit must be 0 or 1, got {bit!r}")
    bits = x.to_bits()
    return RunString.from_bits(bits[:pos] + str(bit) + bits[pos:])


def flip_suffix(x: RunString, i: int) -> RunString:
    bits = x.to_bits()
    if not 0 <= i < len(bits) - 1:
        raise PreconditionError("position", f"need 0 <= i < {len(bits) - 1}, got {i}")
    if bits[i] != bits[i + 1]:
        raise PreconditionError("equal-pair", f"bits {i} and {i + 1} differ")
    return RunString.from_bits(bits[: i + 1] + _complement_bits(bits[i + 1 :]))


def _check_pair(x: RunString, i: int, j: int) -> None:
    r = x.num_runs
    if not (1 <= i <= r and 1 <= j <= r):
        raise PreconditionError("run-index", f"runs {i}, {j} must lie in [1, {r}]")
    if i == j:
        raise PreconditionError("distinct-runs", f"run {i} cannot be paired with itself")
    lo, hi = min(i, j), max(i, j)
    inner = x.runs[lo : hi - 1]
    if inner != inner[::-1]:
        raise PreconditionError(
            "symmetric-block", f"runs between {lo} and {hi} {inner} are not a palindrome"
        )


def balance_step(x: RunString, i: int, j: int) -> RunString:
    """Shorten run ``i`` by one and lengthen run ``j`` by one.

    Requires x_i - x_j > 1 and a palindromic block of runs between them. Either
    order of i and j is accepted, the mirrored case follows by reversal.
    """
    _check_pair(x, i, j)
    runs = list(x.runs)
    if runs[i - 1] - runs[j - 1] <= 1:
        raise PreconditionError(
            "imbalance", f"x_{i} - x_{j} = {runs[i - 1] - runs[j - 1]}, must exceed 1"
        )
    runs[i - 1] -= 1
    runs[j - 1] += 1
    return x.with_runs(runs)


def unbalance_step(x: RunString, p: int, j: int) -> RunString:
    """Shorten run ``p`` by one and lengthen the pivot run ``j`` by one.

    The reverse of a balancing step: requires x_p > 1, x_j >= x_p and a
    palindromic block of runs between them.
    """
    _check_pair(x, p, j)
    runs = list(x.runs)
    if runs[p - 1] < 2:
        raise PreconditionError("shrinkable", f"run {p} has length 1 and cannot shrink")
    if runs[j - 1] < runs[p - 1]:
        raise PreconditionError("pivot-longest", f"x_{j} = {runs[j - 1]} < x_{p} = {runs[p - 1]}")
    runs[p - 1] -= 1
    runs[j - 1] += 1
    return x.with_runs(runs)


@dataclass
class BoundRecord:
    string: RunString
    value: int


@dataclass
class TransformTrace:
    steps: List[RunString]
    direction: str
    t: int
    kind: str = "balance"
    bound: Optional[BoundRecord] = None
    _counts: Optional[List[int]] = field(default=None, repr=False, compare=False)

    @cached_property
    def counts(self) -> List[int]:
        if self._counts is not None:
            return list(self._counts)
        return [count_subsequences(s, self.t) for s in self.steps]

    @property
    def potentials(self) -> List[int]:
        return [s.potential for s in self.steps]

    def __len__(self) -> int:
        return len(self.steps)

    def render(self) -> str:
        show_potential = self.kind == "balance"
        header = ["i", "X_i", "runs"] + (["sum_sq"] if show_potential else []) + [f"D_{self.t}"]
        lines = [" ".join(header)]
        for i, (step, count) in enumerate(zip(self.steps, self.counts)):
            cells = [str(i), step.to_bits(), _runs_cell(step)]
            if show_potential:
                cells.append(str(step.potential))
            cells.append(str(count))
            lines.append(" ".join(cells))
        if self.bound is not None:
            lines.append("--")
            edge = self.bound.string
            lines.append(f"* {edge.to_bits()} {_runs_cell(edge)} {self.bound.value}")
        return "\n".join(lines) + "\n"

    def report(self) -> None:
        print(self.render(), end="")

    def save(self, path: Union[str, Path]) -> None:
        data = {
            "kind": self.kind,
            "direction": self.direction,
            "t": self.t,
            "steps": [s.run_form() for s in self.steps],
            "counts": self.counts,
            "bound": None
            if self.bound is None
            else {"string": self.bound.string.run_form(), "value": self.bound.value},
        }
        Path(path).write_text(json.dumps(data))

    @classmethod
    def load(cls, path: Union[str, Path]) -> TransformTrace:
        data = json.loads(Path(path).read_text())
        bound = data.get("bound")
        return cls(
            steps=[parse_string(s) for s in data["steps"]],
            direction=data["direction"],
            t=data["t"],
            kind=data["kind"],
            bound=None
            if bound is None
            else BoundRecord(parse_string(bound["string"]), bound["value"]),
            _counts=data.get("counts"),
        )


def _runs_cell(x: RunString) -> str:
    return "{" + ",".join(map(str, x.runs)) + "}"


def _choose_balance_pair(runs: Sequence[int]) -> Optional[Tuple[int, int]]:
    """(shrink, grow) 1-based run indices for the next balancing step.

    Pairs with |x_p - x_q| > 1 at minimal distance q - p; among those the
    largest difference, then a longer left run, then the smallest p.
    """
    r = len(runs)
    for gap in range(1, r):
        best = None
        best_key = None
        for p in range(r - gap):
            q = p + gap
            diff = abs(runs[p] - runs[q])
            if diff <= 1:
                continue
            key = (diff, runs[p] > runs[q], -p)
            if best_key is None or key > best_key:
                best, best_key = (p, q), key
        if best is not None:
            p, q = best
            return (p + 1, q + 1) if runs[p] > runs[q] else (q + 1, p + 1)
    return None


def balance_trace(x: RunString, t: int) -> TransformTrace:
    if x.length % x.num_runs:
        raise ValueError(
            f"n={x.length} is not divisible by r={x.num_runs}; use upper_bound_general instead"
        )
    steps = [x]
    while True:
        pair = _choose_balance_pair(steps[-1].runs)
        if pair is None:
            break
        steps.append(balance_step(steps[-1], *pair))
    return TransformTrace(steps=steps, direction=INCREASING, t=t, kind="balance")


def _choose_unbalance_run(runs: Sequence[int], j: int) -> Optional[int]:
    """Nearest run p != j with x_p > 1 and only length-1 runs between p and j.

    Equal distances go to the left run.
    """
    best = None
    for p in range(len(runs)):
        if p == j or runs[p] < 2:
            continue
        lo, hi = min(p, j), max(p, j)
        if any(v != 1 for v in runs[lo + 1 : hi]):
            continue
        if best is None or abs(p - j) < abs(best - j):
            best = p
    return best


def unbalance_trace(x: RunString, t: int) -> TransformTrace:
    """Unbalance ``x`` into U^{(j)}_{n,r}, j the first maximal run.

    The trace ends with a bound record: the edge-pivot string U^{(1)}_{n,r},
    written with the pivot run's symbol first, and u(n, r, t).
    """
    j = x.runs.index(max(x.runs))
    steps = [x]
    while True:
        p = _choose_unbalance_run(steps[-1].runs, j)
        if p is None:
            break
        steps.append(unbalance_step(steps[-1], p + 1, j + 1))
    last = steps[-1]
    edge = make_unbalanced(x.length, x.num_runs, 1)
    edge = RunString(last.run_symbol(j + 1), edge.runs)
    bound = BoundRecord(edge, u_recursive(x.length, x.num_runs, t))
    return TransformTrace(steps=steps, direction=DECREASING, t=t, kind="unbalance", bound=bound)


def flip_trace(x: RunString, t: int) -> TransformTrace:
    steps = [x]
    while True:
        bits = steps[-1].to_bits()
        i = next((i for i in range(len(bits) - 1) if bits[i] == bits[i + 1]), None)
        if i is None:
            break
        steps.append(flip_suffix(steps[-1], i))
    return TransformTrace(steps=steps, direction=INCREASING, t=t, kind="flip")


def pivot_dominates(n: int, r: int, j: int, t: int) -> bool:
    return count_subsequences(make_unbalanced(n, r, j), t) >= u_recursive(n, r, t)


@dataclass
class MonotoneVerdict:
    ok: bool
    index: Optional[int] = None
    message: str = ""


def verify_monotone(trace: TransformTrace) -> MonotoneVerdict:
    counts = trace.counts
    for i in range(1, len(counts)):
        prev, cur = counts[i - 1], counts[i]
        if (trace.direction == INCREASING and cur < prev) or (
            trace.direction == DECREASING and cur > prev
        ):
            return MonotoneVerdict(
                False, i, f"step {i}: count {cur} after {prev} in a {trace.direction} trace"
            )
    if trace.bound is not None and counts and trace.bound.value > counts[-1]:
        return MonotoneVerdict(
            False,
            len(counts),
            f"bound {trace.bound.value} exceeds the last count {counts[-1]}",
        )
    return MonotoneVerdict(True)
