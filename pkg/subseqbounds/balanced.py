from __future__ import annotations

from typing import Dict, List, Tuple

from subseqbounds.bounds import binomial, multiset_coeff


class BalancedCounter:
    def __init__(self, k: int):
        if k < 1:
            raise ValueError(f"run length k must be >= 1, got {k}")
        self.k = k
        self._p0: Dict[Tuple[int, int], int] = {}
        self._p: Dict[Tuple[int, int], int] = {}

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}(k={self.k})"

    def b_prime_table(self, r: int, t: int) -> List[List[int]]:
        k = self.k
        rows: List[List[int]] = []

        def get(rr: int, tt: int) -> int:
            if rr < 0 or tt < 0:
                return 0
            return rows[rr][tt]

        for rr in range(r + 1):
            row = []
            for tt in range(t + 1):
                if tt >= k * rr:
                    value = 0
                elif tt >= k * (rr - 1):
                    value = 1 + sum(get(rr - 1, tt - i) for i in range(1, k))
                else:
                    value = get(rr - 2, tt - k) + sum(get(rr - 1, tt - i) for i in range(k))
                row.append(value)
            rows.append(row)
        return rows

    def b_prime_recursive(self, r: int, t: int) -> int:
        if t < 0 or r <= 0 or t >= self.k * r:
            return 0
        return self.b_prime_table(r, t)[r][t]

    def b_recursive(self, r: int, t: int) -> int:
        if r < 1:
            raise ValueError(f"B_(r,k) needs r >= 1, got {r}")
        n = r * self.k
        if t < 0 or t > n:
            return 0
        if t == 0 or t == n:
            return 1
        return self.b_prime_recursive(r, t) + self.b_prime_recursive(r - 1, t - self.k)

    def p0_count(self, dr: int, dt: int) -> int:
        """Ordered dr-tuples of integers in [0, k-1] summing to dt (inclusion-exclusion)."""
        if dr < 0 or dt < 0:
            return 0
        key = (dr, dt)
        if key in self._p0:
            return self._p0[key]
        k = self.k
        total = 0
        for i in range(dt // k + 1):
            term = binomial(dr, i) * multiset_coeff(dr, dt - i * k)
            total += -term if i & 1 else term
        if total < 0:
            raise ArithmeticError(f"negative tuple count {total} for dr={dr}, dt={dt}, k={k}")
        self._p0[key] = total
        return total

    def p_count(self, dr: int, dt: int) -> int:
        """Ordered sequences over {(2,k), (1,0), ..., (1,k-1)} with component sums (dr, dt)."""
        if dr < 0 or dt < 0:
            return 0
        key = (dr, dt)
        if key in self._p:
            return self._p[key]
        k = self.k
        total = 0
        for j in range(dt // k + 1):
            if dr - 2 * j < 0:
                break
            total += binomial(dr - j, j) * self.p0_count(dr - 2 * j, dt - j * k)
        self._p[key] = total
        return total

    def b_prime_closed(self, r: int, t: int) -> int:
        if t < 0 or r < 0:
            return 0
        k = self.k
        return sum(self.p_count(r - i // k - 1, t - i) for i in range(t + 1))

    def b_closed(self, r: int, t: int) -> int:
        if r < 1:
            raise ValueError(f"B_(r,k) needs r >= 1, got {r}")
        n = r * self.k
        if t < 0 or t > n:
            return 0
        if t == n:
            return 1
        return self.b_prime_closed(r, t) + self.b_prime_closed(r - 1, t - self.k)


def b_prime_recursive(r: int, k: int, t: int) -> int:
    return BalancedCounter(k).b_prime_recursive(r, t)


def b_recursive(r: int, k: int, t: int) -> int:
    return BalancedCounter(k).b_recursive(r, t)


def p0_count(dr: int, dt: int, k: int) -> int:
    return BalancedCounter(k).p0_count(dr, dt)


def p_count(dr: int, dt: int, k: int) -> int:
    return BalancedCounter(k).p_count(dr, dt)


def b_prime_closed(r: int, k: int, t: int) -> int:
    return BalancedCounter(k).b_prime_closed(r, t)


def b_closed(r: int, k: int, t: int) -> int:
    return BalancedCounter(k).b_closed(r, t)


def upper_bound_general(n: int, r: int, t: int) -> int:
    if not 1 <= r <= n:
        raise ValueError(f"need 1 <= r <= n, got n={n}, r={r}")
    return BalancedCounter(-(-n // r)).b_closed(r, t)
