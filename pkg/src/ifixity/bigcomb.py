"""Exact combinatorics on Python integers.

Factorials, binomials with the vanishing convention, the partition function,
involution class sizes in alternating groups, and log ratios.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass

from ifixity import interval


class DomainError(ValueError):
    """Raised when an argument lies outside an operation's domain."""


def factorial(n: int) -> int:
    if n < 0:
        raise DomainError(f"factorial of negative number {n}")
    return math.factorial(n)


def binomial(m: int, k: int) -> int:
    """C(m, k), zero when k < 0 or k > m."""
    if k < 0 or m < 0 or k > m:
        return 0
    return math.comb(m, k)


_partition_cache = [1]
_partition_lock = threading.Lock()


def _pentagonal_offsets(limit: int):
    """Yield (sign, offset) for generalized pentagonal numbers <= limit."""
    j = 1
    while True:
        g1 = j * (3 * j - 1) // 2
        if g1 > limit:
            return
        sign = 1 if j % 2 else -1
        yield sign, g1
        g2 = j * (3 * j + 1) // 2
        if g2 <= limit:
            yield sign, g2
        j += 1


def partitions(m: int) -> int:
    """Number of partitions of m, by Euler's pentagonal number recurrence."""
    if m < 0:
        raise DomainError(f"partitions of negative number {m}")
    with _partition_lock:
        cache = _partition_cache
        for n in range(len(cache), m + 1):
            total = 0
            for sign, g in _pentagonal_offsets(n):
                total += sign * cache[n - g]
            cache.append(total)
        return cache[m]


def partition_bound_interval(ctx, m: int):
    """m^(-3/4) * exp(pi*sqrt(2/3)*sqrt(m)) as an interval in ``ctx``."""
    c = ctx.pi * ctx.sqrt(ctx.mpf(2) / 3)
    mm = ctx.mpf(m)
    return ctx.exp(c * ctx.sqrt(mm)) / mm ** (ctx.mpf(3) / 4)


def partition_upper_bound(m: int, precision: int = interval.START_BITS) -> interval.Enclosure:
    """Rigorous enclosure of the analytic upper bound m^(-3/4) e^(c sqrt m)."""
    if m < 1:
        raise DomainError("partition_upper_bound needs m >= 1")
    ctx = interval.context(precision)
    return interval.enclosure(partition_bound_interval(ctx, m), precision)


def partition_bound_verdict(m: int, precision: int = interval.START_BITS,
                            cap: int = interval.CAP_BITS) -> str:
    """Whether p(m) < m^(-3/4) e^(c sqrt m); "inconclusive" if undecided."""
    if m < 1:
        raise DomainError("partition_bound_verdict needs m >= 1")
    p = partitions(m)
    verdict, _ = interval.sign_of(lambda ctx: partition_bound_interval(ctx, m) - p,
                                  bits=precision, cap=cap)
    return verdict


def alt_involution_class_size(m: int, k: int) -> int:
    """Number of involutions of cycle shape (2^k, 1^(m-2k)) in S_m."""
    if k < 0 or 2 * k > m:
        raise DomainError(f"no cycle shape with {k} transpositions on {m} points")
    return math.factorial(m) // (math.factorial(k) * math.factorial(m - 2 * k) * 2**k)


def max_alt_involution_class_size(m: int) -> tuple[int, int]:
    """Largest involution class of A_m as (j, size) with 2j transpositions.

    Ties go to the smallest j.
    """
    if m < 4:
        raise DomainError(f"A_{m} has no involutions")
    best_j, best = 0, -1
    for j in range(1, m // 4 + 1):
        size = alt_involution_class_size(m, 2 * j)
        if size > best:
            best_j, best = j, size
    return best_j, best


def involution_count_symmetric(m: int) -> int:
    """Number of involutions in S_m (identity excluded)."""
    return sum(alt_involution_class_size(m, k) for k in range(1, m // 2 + 1))


@dataclass(frozen=True)
class LogRatio:
    numerator_log: float
    denominator_log: float
    ratio: float


def log_ratio(a: int, b: int) -> LogRatio:
    """log a / log b for positive integers, exact enough for 1e-12 relative."""
    if b < 2:
        raise DomainError(f"log_ratio needs b >= 2, got {b}")
    if a < 1:
        raise DomainError(f"log_ratio needs a >= 1, got {a}")
    num = math.log(a)
    den = math.log(b)
    return LogRatio(num, den, 0.0 if a == 1 else num / den)
