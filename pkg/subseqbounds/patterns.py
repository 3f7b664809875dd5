from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence

from subseqbounds.bounds import binomial, hr_upper, lev_upper, multiset_coeff
from subseqbounds.exact import count_subsequences
from subseqbounds.runstring import RunString


def pattern_count_bounded(bounds: Sequence[int], t: int) -> int:
    if t < 0:
        return 0
    ways: List[int] = [1] + [0] * t
    for bound in bounds:
        if bound < 0:
            raise ValueError(f"run bounds must be nonnegative, got {bound}")
        # sliding window sum over ways[s - bound .. s]
        nxt = [0] * (t + 1)
        window = 0
        for s in range(t + 1):
            window += ways[s]
            if s - bound - 1 >= 0:
                window -= ways[s - bound - 1]
            nxt[s] = window
        ways = nxt
    return ways[t]


def pattern_count(x: RunString, t: int) -> int:
    if t < 0:
        raise ValueError(f"t must be nonnegative, got {t}")
    return pattern_count_bounded(x.runs, t)


def pattern_count_balanced(r: int, k: int, t: int) -> int:
    """|P_t(B_{r,k})| = sum_i (-1)^i C(r, i) C(r + t - i(k+1) - 1, r - 1)."""
    if r < 1 or k < 1:
        raise ValueError(f"need r >= 1 and k >= 1, got r={r}, k={k}")
    if t < 0:
        raise ValueError(f"t must be nonnegative, got {t}")
    total = 0
    for i in range(t // (k + 1) + 1):
        term = binomial(r, i) * binomial(r + t - i * (k + 1) - 1, r - 1)
        total += -term if i & 1 else term
    return total


@dataclass
class SandwichCheck:
    reduced_patterns: int
    subsequences: int
    patterns: int

    @property
    def holds(self) -> bool:
        return self.reduced_patterns <= self.subsequences <= self.patterns


def pattern_sandwich_check(x: RunString, t: int) -> SandwichCheck:
    """|P_t(X')| <= |D_t(X)| <= |P_t(X)|, X' keeping one symbol of every run.

    X' is never built as a string: its patterns are compositions with bounds
    x_i - 1, which may be 0.
    """
    if t < 0:
        raise ValueError(f"t must be nonnegative, got {t}")
    return SandwichCheck(
        reduced_patterns=pattern_count_bounded([v - 1 for v in x.runs], t),
        subsequences=count_subsequences(x, t),
        patterns=pattern_count(x, t),
    )


def pattern_symmetry_check(x: RunString, t: int) -> bool:
    if not 0 <= t <= x.length:
        raise ValueError(f"need 0 <= t <= {x.length}, got {t}")
    return pattern_count(x, t) == pattern_count(x, x.length - t)


def balanced_pattern_upper(r: int, k: int, t: int) -> int:
    return min(multiset_coeff(r, t), (k + 1) ** r)


def pattern_gap_constant(k: int) -> float:
    return math.e * (1 + k / 2) / ((k + 1) * (1 + 2 / k))


def pattern_gap_factor(r: int, k: int) -> float:
    return pattern_gap_constant(k) ** r / (12 * k * math.sqrt(r))


def _log2_ratio(a: int, b: int) -> float:
    return math.log2(a) - math.log2(b)


@dataclass
class PatternGapReport:
    r: int
    k: int
    t: int
    patterns: int
    hr_upper: int
    lev_upper: int

    @property
    def hr_ratio(self) -> Fraction:
        return Fraction(self.hr_upper, self.patterns)

    @property
    def lev_ratio(self) -> Fraction:
        return Fraction(self.lev_upper, self.patterns)

    def report(self) -> None:
        print(f"Deletion patterns of B_(r={self.r},k={self.k}) at t={self.t}:")
        print(f"  patterns={self.patterns}")
        for name, bound in (("hr_upper", self.hr_upper), ("lev_upper", self.lev_upper)):
            print(f"  {name}={bound}, log2 ratio={_log2_ratio(bound, self.patterns):.4f}")
        if 2 * self.t == self.r * self.k:
            print(f"  gap factor at t=rk/2 >= {pattern_gap_factor(self.r, self.k):.4g}")


def pattern_gap_report(r: int, k: int, t: int) -> PatternGapReport:
    if not 0 <= t <= r * k:
        raise ValueError(f"need 0 <= t <= rk = {r * k}, got {t}")
    return PatternGapReport(
        r=r,
        k=k,
        t=t,
        patterns=pattern_count_balanced(r, k, t),
        hr_upper=hr_upper(r * k, t),
        lev_upper=lev_upper(r, t),
    )
