from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence, Tuple

MAX_GENERATED_LENGTH = 10**6


@dataclass(frozen=True)
class RunString:
    """A nonempty binary string stored as its first bit and its run lengths.

    ``RunString(0, (1, 2, 3))`` is ``011000``. Adjacent runs alternate symbols,
    so the first bit determines every other symbol.
    """

    first_bit: int
    runs: Tuple[int, ...]

    def __post_init__(self) -> None:
        if self.first_bit not in (0, 1):
            raise ValueError(f"first_bit must be 0 or 1, got {self.first_bit!r}")
        if not isinstance(self.runs, tuple):
            object.__setattr__(self, "runs", tuple(self.runs))
        if not self.runs:
            raise ValueError("a run string needs at least one run")
        for i, length in enumerate(self.runs):
            if length < 1:
                raise ValueError(f"run {i + 1} has length {length}, runs must be >= 1")

    @classmethod
    def from_runs(cls, runs: Iterable[int], first_bit: int = 0) -> RunString:
        return cls(first_bit, tuple(runs))

    @classmethod
    def from_bits(cls, bits: str) -> RunString:
        if not bits:
            raise ValueError("cannot build a run string from an empty string")
        bad = set(bits) - {"0", "1"}
        if bad:
            raise ValueError(f"non-binary symbols {sorted(bad)} in {bits!r}")
        runs = []
        length = 1
        for prev, cur in zip(bits, bits[1:]):
            if cur == prev:
                length += 1
            else:
                runs.append(length)
                length = 1
        runs.append(length)
        return cls(int(bits[0]), tuple(runs))

    @property
    def length(self) -> int:
        return sum(self.runs)

    @property
    def num_runs(self) -> int:
        return len(self.runs)

    @property
    def potential(self) -> int:
        return sum(x * x for x in self.runs)

    def run_symbol(self, i: int) -> int:
        if not 1 <= i <= self.num_runs:
            raise ValueError(f"run index {i} outside [1, {self.num_runs}]")
        return self.first_bit ^ ((i - 1) & 1)

    def to_bits(self) -> str:
        return "".join(
            str(self.first_bit ^ (i & 1)) * length for i, length in enumerate(self.runs)
        )

    def complement(self) -> RunString:
        return RunString(1 - self.first_bit, self.runs)

    def reverse(self) -> RunString:
        return RunString(self.run_symbol(self.num_runs), self.runs[::-1])

    def with_runs(self, runs: Sequence[int]) -> RunString:
        return RunString(self.first_bit, tuple(runs))

    def run_form(self) -> str:
        return f"{self.first_bit}:" + ",".join(map(str, self.runs))

    def __len__(self) -> int:
        return self.length

    def __str__(self) -> str:
        return self.to_bits()


def parse_string(text: str) -> RunString:
    text = text.strip()
    if ":" not in text:
        return RunString.from_bits(text)
    head, _, tail = text.partition(":")
    if head not in ("0", "1"):
        raise ValueError(f"run form must start with 0: or 1:, got {text!r}")
    try:
        runs = tuple(int(part) for part in tail.split(","))
    except ValueError:
        raise ValueError(f"run lengths in {text!r} must be integers") from None
    return RunString(int(head), runs)


def _check_generated(n: int, max_length: int) -> None:
    if n > max_length:
        raise ValueError(f"requested length {n} exceeds the generator cap {max_length}")


def make_balanced(r: int, k: int, max_length: int = MAX_GENERATED_LENGTH) -> RunString:
    if r < 1 or k < 1:
        raise ValueError(f"balanced strings need r >= 1 and k >= 1, got r={r}, k={k}")
    _check_generated(r * k, max_length)
    return RunString(0, (k,) * r)


def make_balanced_prime(r: int, k: int, max_length: int = MAX_GENERATED_LENGTH) -> RunString:
    if r < 1 or k < 1:
        raise ValueError(f"balanced strings need r >= 1 and k >= 1, got r={r}, k={k}")
    if r == 1 and k == 1:
        raise ValueError("B'_{1,1} is the empty string")
    _check_generated(r * k - 1, max_length)
    if k == 1:
        return RunString(1, (1,) * (r - 1))
    return RunString(0, (k - 1,) + (k,) * (r - 1))


def make_unbalanced(
    n: int, r: int, i: int, max_length: int = MAX_GENERATED_LENGTH
) -> RunString:
    if not 1 <= r <= n:
        raise ValueError(f"unbalanced strings need 1 <= r <= n, got n={n}, r={r}")
    if not 1 <= i <= r:
        raise ValueError(f"pivot index {i} outside [1, {r}]")
    _check_generated(n, max_length)
    runs = [1] * r
    runs[i - 1] = n - r + 1
    return RunString(0, tuple(runs))


def make_cyclic(n: int, max_length: int = MAX_GENERATED_LENGTH) -> RunString:
    if n < 1:
        raise ValueError(f"cyclic strings need n >= 1, got {n}")
    _check_generated(n, max_length)
    return RunString(0, (1,) * n)
