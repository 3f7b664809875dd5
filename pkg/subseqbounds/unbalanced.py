from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from subseqbounds.bounds import d_cyclic


def _check_runs(n: int, r: int) -> None:
    if r < 1 or n < 1:
        raise ValueError(f"need n >= 1 and r >= 1, got n={n}, r={r}")
    if r > n:
        raise ValueError(f"an r-run string needs r <= n, got n={n}, r={r}")


def u_recursive(n: int, r: int, t: int) -> int:
    """u(n, r, t) = |D_t(U^{(1)}_{n,r})| by unrolling the recursion over n.

    Each unrolled step contributes d(r-2, t+r-m-1) until m reaches r (value
    d(r, t)) or t = m - 1 (value 2).
    """
    _check_runs(n, r)
    if t < 0:
        raise ValueError(f"t must be nonnegative, got {t}")
    if t > n:
        return 0
    if t == 0 or t == n:
        return 1
    if r <= 2:
        return r
    total = 0
    m = n
    while True:
        if t == m - 1:
            return total + 2
        if m == r:
            return total + d_cyclic(r, t)
        total += d_cyclic(r - 2, t + r - m - 1)
        m -= 1


def _d_sum(r: int, lo: int, hi: int) -> int:
    return sum(d_cyclic(r, i) for i in range(max(lo, 0), hi + 1))


def u_closed(n: int, r: int, t: int) -> int:
    _check_runs(n, r)
    if r <= 2:
        raise ValueError(f"the closed form needs r > 2, got r={r}")
    if not 1 <= t < n:
        raise ValueError(f"the closed form needs 1 <= t < n, got t={t}, n={n}")
    lo = t + r - n - 1
    if r > t:
        return d_cyclic(r, t) + _d_sum(r - 2, lo, t - 2)
    return 2 + _d_sum(r - 2, lo, r - 3)


def u_corollary(r: int, t: int) -> int:
    if r <= 2 or t < 1:
        raise ValueError(f"need r > 2 and t >= 1, got r={r}, t={t}")
    if r > t:
        return d_cyclic(r, t) + _d_sum(r - 2, 0, t - 2)
    return 2 + _d_sum(r - 2, 0, r - 3)


def lower_bound_general(n: int, r: int, t: int) -> int:
    _check_runs(n, r)
    if t < 0 or t > n:
        raise ValueError(f"need 0 <= t <= n, got t={t}, n={n}")
    if t == 0 or t == n:
        return 1
    if r <= 2:
        return r
    return u_closed(n, r, t)


def lower_bound_unified(n: int, r: int, t: int) -> int:
    """The single-expression bound d(r,t) + sum_{i=t+r-n-1}^{min(t-2, r-3)} d(r-2, i).

    Equal to u(n, r, t) when r > t and smaller by 2 - d(r, t) otherwise.
    """
    _check_runs(n, r)
    if r <= 2 or t >= n:
        raise ValueError(f"need r > 2 and t < n, got n={n}, r={r}, t={t}")
    return d_cyclic(r, t) + _d_sum(r - 2, t + r - n - 1, min(t - 2, r - 3))


@dataclass
class LowerGapReport:
    n: int
    r: int
    t: int
    u: int
    d: int
    in_regime: bool

    @property
    def ratio(self) -> Optional[Fraction]:
        return Fraction(self.u, self.d) if self.d else None

    @property
    def ratio_float(self) -> Optional[float]:
        ratio = self.ratio
        return float(ratio) if ratio is not None else None

    @property
    def log2_ratio(self) -> Optional[float]:
        if not self.d:
            return None
        return math.log2(self.u) - math.log2(self.d)

    def report(self) -> None:
        flag = "" if self.in_regime else " (outside 1/3 + 1/r <= t/r < 1, t <= n - r + 1)"
        print(f"Lower bound gap for n={self.n}, r={self.r}, t={self.t}{flag}:")
        print(f"  u={self.u}")
        print(f"  d={self.d}")
        if self.d:
            print(f"  ratio~{self.ratio_float:.6g}, log2={self.log2_ratio:.4f}")
        else:
            print("  ratio undefined (d=0)")


def in_gap_regime(n: int, r: int, t: int) -> bool:
    return 3 * t >= r + 3 and t < r and t <= n - r + 1


def lower_gap_report(n: int, r: int, t: int) -> LowerGapReport:
    return LowerGapReport(
        n=n,
        r=r,
        t=t,
        u=lower_bound_general(n, r, t),
        d=d_cyclic(r, t),
        in_regime=in_gap_regime(n, r, t),
    )
