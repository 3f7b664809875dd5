from __future__ import annotations

import json
import math
from dataclasses import asdict, dataclass
from pathlib import Path
from typing import Optional, Union

from subseqbounds.exact import count_subsequences
from subseqbounds.runstring import RunString


def binomial(n: int, i: int) -> int:
    if n < 0:
        raise ValueError(f"binomial upper index must be nonnegative, got {n}")
    if i < 0 or i > n:
        return 0
    return math.comb(n, i)


def multiset_coeff(a: int, b: int) -> int:
    if a < 0:
        raise ValueError(f"number of types must be nonnegative, got {a}")
    if b < 0:
        return 0
    if b == 0:
        return 1
    return binomial(a + b - 1, b)


def d_cyclic(r: int, t: int) -> int:
    if t < 0 or t > r:
        return 0
    if t == 0:
        return 1
    return sum(binomial(r - t, i) for i in range(t + 1))


def lev_lower(r: int, t: int) -> int:
    return binomial(r - t + 1, t) if r - t + 1 >= 0 else 0


def lev_upper(r: int, t: int) -> int:
    return binomial(r + t - 1, t) if r + t - 1 >= 0 else 0


def hr_lower(r: int, t: int) -> int:
    return d_cyclic(r, t)


def hr_upper(n: int, t: int) -> int:
    if t < 0 or t > n:
        return 0
    return sum(binomial(n - t, i) for i in range(t + 1))


def naive_upper(n: int, t: int) -> int:
    if t < 0 or t > n:
        return 0
    return 2 ** (n - t)


@dataclass
class BoundsReport:
    n: int
    r: int
    t: int
    k_ceil: int
    lev_lower: int
    hr_lower: int
    new_lower: int
    lev_upper: int
    hr_upper: int
    new_upper: int
    naive_upper: int
    exact: Optional[int] = None

    def lower_bounds(self) -> dict:
        return {"lev_lower": self.lev_lower, "hr_lower": self.hr_lower, "new_lower": self.new_lower}

    def upper_bounds(self) -> dict:
        return {
            "new_upper": self.new_upper,
            "hr_upper": self.hr_upper,
            "lev_upper": self.lev_upper,
            "naive_upper": self.naive_upper,
        }

    def violations(self) -> list:
        if self.exact is None:
            return []
        bad = [name for name, v in self.lower_bounds().items() if v > self.exact]
        bad += [name for name, v in self.upper_bounds().items() if v < self.exact]
        return bad

    def report(self) -> None:
        print(f"Bounds on |D_t(X)| for n={self.n}, r={self.r}, t={self.t} (k={self.k_ceil}):")
        for name, value in self.lower_bounds().items():
            print(f"  {name}={value}")
        if self.exact is not None:
            print(f"  exact={self.exact}")
        for name, value in self.upper_bounds().items():
            print(f"  {name}={value}")

    def save(self, path: Union[str, Path]) -> None:
        Path(path).write_text(json.dumps(asdict(self)))

    @classmethod
    def load(cls, path: Union[str, Path]) -> BoundsReport:
        return cls(**json.loads(Path(path).read_text()))


def bounds_report(n: int, r: int, t: int, x: Optional[RunString] = None) -> BoundsReport:
    from subseqbounds.balanced import upper_bound_general
    from subseqbounds.unbalanced import lower_bound_general

    if not 1 <= r <= n:
        raise ValueError(f"need 1 <= r <= n, got n={n}, r={r}")
    if not 0 <= t <= n:
        raise ValueError(f"need 0 <= t <= n, got t={t}, n={n}")
    exact = None
    if x is not None:
        if (x.length, x.num_runs) != (n, r):
            raise ValueError(
                f"string has n={x.length}, r={x.num_runs} but the report is for n={n}, r={r}"
            )
        exact = count_subsequences(x, t)
    return BoundsReport(
        n=n,
        r=r,
        t=t,
        k_ceil=-(-n // r),
        lev_lower=lev_lower(r, t),
        hr_lower=hr_lower(r, t),
        new_lower=lower_bound_general(n, r, t),
        lev_upper=lev_upper(r, t),
        hr_upper=hr_upper(n, t),
        new_upper=upper_bound_general(n, r, t),
        naive_upper=naive_upper(n, t),
        exact=exact,
    )
