from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable, Dict, Iterable, Iterator, List, Optional

from tqdm import tqdm

from subseqbounds.balanced import BalancedCounter
from subseqbounds.bounds import (
    d_cyclic,
    hr_lower,
    hr_upper,
    lev_lower,
    lev_upper,
    naive_upper,
)
from subseqbounds.exact import (
    ORACLE_MAX_LENGTH,
    count_all_t,
    count_subsequences,
    count_subsequences_by_first_run,
    count_subsequences_by_last_run,
    oracle_counts,
)
from subseqbounds.patterns import (
    pattern_count,
    pattern_count_balanced,
    pattern_count_bounded,
    pattern_sandwich_check,
    pattern_symmetry_check,
)
from subseqbounds.runstring import (
    RunString,
    make_balanced,
    make_balanced_prime,
    make_cyclic,
    make_unbalanced,
)
from subseqbounds.transforms import (
    PreconditionError,
    balance_step,
    flip_suffix,
    insert_symbol,
    pivot_dominates,
    unbalance_step,
)
from subseqbounds.unbalanced import (
    lower_bound_general,
    lower_bound_unified,
    u_closed,
    u_corollary,
    u_recursive,
)

DEFAULT_SEED = 7
DEFAULT_MAX_N = 12
DEFAULT_RANDOM_SAMPLES = 1000
MAX_REPORTED_FAILURES = 10


@dataclass
class SuiteConfig:
    seed: int = DEFAULT_SEED
    max_n: int = DEFAULT_MAX_N
    samples: int = DEFAULT_RANDOM_SAMPLES
    verbose: bool = False


@dataclass
class SuiteResult:
    name: str
    checks: int = 0
    failed: int = 0
    failures: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.failed == 0

    @property
    def counterexample(self) -> Optional[str]:
        return self.failures[0] if self.failures else None

    def expect(self, condition: bool, message: str, *args: object) -> None:
        self.checks += 1
        if condition:
            return
        self.failed += 1
        if len(self.failures) < MAX_REPORTED_FAILURES:
            self.failures.append(message.format(*args))

    def report(self) -> None:
        status = "ok" if self.ok else "FAILED"
        print(f"[{self.name}] {status}: {self.checks} checks, {self.failed} failures")
        if not self.ok:
            print(f"  counterexample: {self.counterexample}")
            for extra in self.failures[1:]:
                print(f"  also: {extra}")


SuiteFn = Callable[[SuiteConfig, SuiteResult], None]


class SuiteRegistry:
    def __init__(self) -> None:
        self._suites: Dict[str, SuiteFn] = {}

    def register(self, name: str) -> Callable[[SuiteFn], SuiteFn]:
        def decorator(fn: SuiteFn) -> SuiteFn:
            self._suites[name] = fn
            return fn

        return decorator

    @property
    def names(self) -> List[str]:
        return list(self._suites)

    def run(self, name: str, config: Optional[SuiteConfig] = None) -> SuiteResult:
        if name not in self._suites:
            raise ValueError(f"unknown suite {name!r}; choose from {', '.join(self._suites)}")
        result = SuiteResult(name)
        self._suites[name](config or SuiteConfig(), result)
        return result


SUITES = SuiteRegistry()


def run_suite(
    name: str,
    seed: int = DEFAULT_SEED,
    max_n: int = DEFAULT_MAX_N,
    samples: int = DEFAULT_RANDOM_SAMPLES,
    verbose: bool = False,
) -> SuiteResult:
    return SUITES.run(name, SuiteConfig(seed=seed, max_n=max_n, samples=samples, verbose=verbose))


def all_strings(n: int) -> Iterator[RunString]:
    for mask in range(1 << (n - 1)):
        tail = format(mask, f"0{n - 1}b") if n > 1 else ""
        yield RunString.from_bits("0" + tail)


def random_string(rng: random.Random, n: int) -> RunString:
    return RunString.from_bits("".join(rng.choice("01") for _ in range(n)))


def _lengths(config: SuiteConfig, top: int, desc: str) -> Iterable[int]:
    lengths: Iterable[int] = range(1, top + 1)
    if config.verbose:
        lengths = tqdm(lengths, desc=desc)
    return lengths


def _samples(config: SuiteConfig, desc: str) -> Iterable[int]:
    samples: Iterable[int] = range(config.samples)
    if config.verbose:
        samples = tqdm(samples, desc=desc)
    return samples


def _random_length(config: SuiteConfig, rng: random.Random, cap: int) -> int:
    return rng.randint(1, max(1, min(config.max_n + 6, cap)))


@SUITES.register("oracle-equivalence")
def _oracle_equivalence(config: SuiteConfig, result: SuiteResult) -> None:
    top = min(config.max_n, ORACLE_MAX_LENGTH)
    for n in _lengths(config, top, "oracle"):
        for x in all_strings(n):
            _check_against_oracle(x, result)
        for t, c in enumerate(count_all_t(make_cyclic(n))):
            d = d_cyclic(n, t)
            result.expect(c == d, "C_{} t={}: {} != d={}", n, t, c, d)
    rng = random.Random(config.seed)
    for _ in _samples(config, "oracle random"):
        _check_against_oracle(random_string(rng, _random_length(config, rng, 18)), result)


def _check_against_oracle(x: RunString, result: SuiteResult) -> None:
    counts = count_all_t(x)
    expected = oracle_counts(x)
    result.expect(counts == expected, "{}: dp {} != oracle {}", x, counts, expected)
    mid = x.length // 2
    single = count_subsequences(x, mid)
    result.expect(single == counts[mid], "{} t={}: single-t count {}", x, mid, single)
    for t in range(x.length + 1):
        first = count_subsequences_by_first_run(x, t)
        last = count_subsequences_by_last_run(x, t)
        result.expect(first == counts[t], "{} t={}: first-run split {}", x, t, first)
        result.expect(last == counts[t], "{} t={}: last-run split {}", x, t, last)


@SUITES.register("sandwiches")
def _sandwiches(config: SuiteConfig, result: SuiteResult) -> None:
    counters: Dict[int, BalancedCounter] = {}
    for n in _lengths(config, config.max_n, "sandwiches"):
        for x in all_strings(n):
            _check_bounds(x, count_all_t(x), counters, result)
    rng = random.Random(config.seed)
    for _ in _samples(config, "sandwiches random"):
        x = random_string(rng, rng.randint(1, 40))
        _check_bounds(x, count_all_t(x), counters, result)


def _check_bounds(
    x: RunString, counts: List[int], counters: Dict[int, BalancedCounter], result: SuiteResult
) -> None:
    n, r = x.length, x.num_runs
    k = -(-n // r)
    counter = counters.setdefault(k, BalancedCounter(k))
    for t, c in enumerate(counts):
        lower = max(lev_lower(r, t), hr_lower(r, t), lower_bound_general(n, r, t))
        upper = min(
            lev_upper(r, t), hr_upper(n, t), naive_upper(n, t), counter.b_closed(r, t)
        )
        result.expect(lower <= c <= upper, "{} t={}: {} outside [{}, {}]", x, t, c, lower, upper)


def _every_pair(r: int) -> Iterator[tuple]:
    for i in range(1, r + 1):
        for j in range(1, r + 1):
            if i != j:
                yield i, j


def _neighbours(x: RunString) -> Iterator[tuple]:
    for pos in range(x.length + 1):
        for bit in (0, 1):
            yield "insert", insert_symbol(x, pos, bit)
    bits = x.to_bits()
    for i in range(x.length - 1):
        if bits[i] == bits[i + 1]:
            yield "flip", flip_suffix(x, i)
    for i, j in _every_pair(x.num_runs):
        try:
            yield "balance", balance_step(x, i, j)
        except PreconditionError:
            pass
        try:
            yield "unbalance", unbalance_step(x, i, j)
        except PreconditionError:
            pass


def _check_step(
    x: RunString, base: List[int], kind: str, y: RunString, result: SuiteResult
) -> None:
    after = count_all_t(y)
    for t in range(x.length + 1):
        if kind == "unbalance":
            ok = after[t] <= base[t]
        else:
            ok = after[t] >= base[t]
        result.expect(ok, "{} {} -> {} at t={}: {} then {}", kind, x, y, t, base[t], after[t])


@SUITES.register("monotone-ops")
def _monotone_ops(config: SuiteConfig, result: SuiteResult) -> None:
    for n in _lengths(config, config.max_n, "monotone"):
        for x in all_strings(n):
            base = count_all_t(x)
            for kind, y in _neighbours(x):
                _check_step(x, base, kind, y, result)
    rng = random.Random(config.seed)
    for _ in _samples(config, "monotone random"):
        x = random_string(rng, rng.randint(config.max_n + 1, config.max_n + 6))
        base = count_all_t(x)
        by_kind: Dict[str, List[RunString]] = {}
        for kind, y in _neighbours(x):
            by_kind.setdefault(kind, []).append(y)
        for kind, options in sorted(by_kind.items()):
            _check_step(x, base, kind, rng.choice(options), result)


@SUITES.register("recursion-vs-closed")
def _recursion_vs_closed(config: SuiteConfig, result: SuiteResult) -> None:
    for k in _lengths(config, 6, "balanced"):
        counter = BalancedCounter(k)
        for r in range(1, 13):
            for t in range(r * k + 1):
                rec, closed = counter.b_recursive(r, t), counter.b_closed(r, t)
                result.expect(rec == closed, "b({},{},{}): {} != {}", r, k, t, rec, closed)
                if t < r * k:
                    rec, closed = counter.b_prime_recursive(r, t), counter.b_prime_closed(r, t)
                    result.expect(rec == closed, "b'({},{},{}): {} != {}", r, k, t, rec, closed)
            if r * k <= config.max_n:
                counts = count_all_t(make_balanced(r, k))
                for t, c in enumerate(counts):
                    value = counter.b_closed(r, t)
                    result.expect(c == value, "B_({},{}) t={}: {} != {}", r, k, t, c, value)
                if r * k > 1:
                    prime = count_all_t(make_balanced_prime(r, k))
                    for t, c in enumerate(prime):
                        value = counter.b_prime_closed(r, t)
                        result.expect(c == value, "B'_({},{}) t={}: {} != {}", r, k, t, c, value)
    for n in _lengths(config, 40, "unbalanced"):
        for r in range(1, n + 1):
            exact = count_all_t(make_unbalanced(n, r, 1)) if n <= config.max_n else None
            for t in range(n + 1):
                u = u_recursive(n, r, t)
                result.expect(
                    u == lower_bound_general(n, r, t), "u({},{},{}) general", n, r, t
                )
                if exact is not None:
                    result.expect(u == exact[t], "U_({},{}) t={}: {} != {}", n, r, t, exact[t], u)
                if r > 2 and 1 <= t < n:
                    closed = u_closed(n, r, t)
                    result.expect(u == closed, "u({},{},{}): {} != closed {}", n, r, t, u, closed)
                    unified = lower_bound_unified(n, r, t)
                    result.expect(unified <= u, "u({},{},{}): unified {} > {}", n, r, t, unified, u)
                    if t <= n - r + 1:
                        short = u_corollary(r, t)
                        result.expect(
                            u == short, "u({},{},{}): {} != short form {}", n, r, t, u, short
                        )


@SUITES.register("patterns")
def _patterns(config: SuiteConfig, result: SuiteResult) -> None:
    for n in _lengths(config, config.max_n, "patterns"):
        for x in all_strings(n):
            for t in range(n + 1):
                check = pattern_sandwich_check(x, t)
                result.expect(check.holds, "{} t={}: sandwich {}", x, t, check)
    rng = random.Random(config.seed)
    for _ in _samples(config, "patterns random"):
        x = random_string(rng, rng.randint(1, config.max_n + 8))
        for t in range(x.length + 1):
            result.expect(pattern_symmetry_check(x, t), "{} t={}: not symmetric", x, t)
    for r in range(1, 11):
        for k in range(1, 6):
            for t in range(r * k + 1):
                closed = pattern_count_balanced(r, k, t)
                dp = pattern_count_bounded([k] * r, t)
                result.expect(closed == dp, "P_{}(B_({},{})): {} != {}", t, r, k, closed, dp)
                via_string = pattern_count(make_balanced(r, k), t)
                result.expect(via_string == dp, "P_{}(B_({},{})) by string", t, r, k)


@SUITES.register("extremality")
def _extremality(config: SuiteConfig, result: SuiteResult) -> None:
    counters: Dict[int, BalancedCounter] = {}
    for n in _lengths(config, config.max_n, "extremality"):
        for x in all_strings(n):
            r = x.num_runs
            if r > 5:
                continue
            k = -(-n // r)
            counter = counters.setdefault(k, BalancedCounter(k))
            for t, c in enumerate(count_all_t(x)):
                lo, hi = u_recursive(n, r, t), counter.b_closed(r, t)
                result.expect(lo <= c <= hi, "{} t={}: {} outside [u={}, b={}]", x, t, c, lo, hi)
        for r in range(1, n + 1):
            for j in range(1, r + 1):
                for t in range(n + 1):
                    result.expect(pivot_dominates(n, r, j, t), "U^({})_({},{}) t={}", j, n, r, t)


@SUITES.register("lower-gap")
def _lower_gap(config: SuiteConfig, result: SuiteResult) -> None:
    n, r = 300, 200
    for t in _lengths(config, r, "lower gap"):
        u, d = lower_bound_general(n, r, t), d_cyclic(r, t)
        result.expect(u >= d, "t={}: u={} < d={}", t, u, d)
        if t >= 2:
            result.expect(u > d, "t={}: u={} not above d={}", t, u, d)
    # the new bound never loses to the cyclic bound for any smaller shape either
    for n in range(3, config.max_n * 3 + 1):
        for r in range(3, n + 1):
            for t in range(1, min(r, n - 1) + 1):
                u, d = lower_bound_general(n, r, t), d_cyclic(r, t)
                result.expect(u >= d, "({},{},{}): u={} < d={}", n, r, t, u, d)

