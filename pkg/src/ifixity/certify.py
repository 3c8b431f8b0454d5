"""Certificates for the numerical inequalities behind the fixity bounds.

Each registered inequality is checked at every admissible integer point of a
finite range. Inequalities built from factorials, powers and rationals are
decided exactly after clearing rational exponents; those involving e, pi or
square roots go through directed-rounding interval arithmetic. A certificate
states the range it covers and makes no claim beyond it.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from ifixity import interval
from ifixity.bigcomb import (DomainError, binomial, factorial,
                             involution_count_symmetric, max_alt_involution_class_size, partitions)
from ifixity.families import is_prime, partition_count_f
from ifixity.interval import FAILS, HOLDS, INCONCLUSIVE

EXACT = "exact"
INTERVAL = "interval"

# factorials up to this argument are formed exactly in the (q^(l-2))! comparisons
EXACT_FACTORIAL_LIMIT = 5000
# largest factorial argument for which ratio identities are re-derived from the defining expressions
IDENTITY_LIMIT = 4000


@dataclass(frozen=True)
class PointResult:
    verdict: str
    margin: float | None  # log2(lhs/rhs) for exact checks, a lower bound of ln(lhs/rhs) for interval ones
    method: str


@dataclass(frozen=True)
class CertResult:
    inequality_id: str
    domain_checked: tuple
    method: str
    verdict: str
    margin: str
    points_checked: int = 0
    counterexample: object = None
    details: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        if self.method == EXACT and self.verdict == INCONCLUSIVE:
            raise ValueError("an exact certificate cannot be inconclusive")
        if self.verdict == FAILS and self.counterexample is None:
            raise ValueError("a failing certificate needs a counterexample")

    def to_record(self) -> dict:
        rec = {
            "id": self.inequality_id,
            "range": [str(x) for x in self.domain_checked],
            "points": self.points_checked,
            "method": self.method,
            "verdict": self.verdict,
            "margin": self.margin,
        }
        if self.counterexample is not None:
            rec["counterexample"] = str(self.counterexample)
        return rec

    def summary(self) -> str:
        lo, hi = self.domain_checked
        text = f"{self.inequality_id} [{lo}..{hi}] points={self.points_checked} {self.method} {self.verdict}"
        if self.counterexample is not None:
            text += f" counterexample={self.counterexample}"
        return f"{text} margin: {self.margin}"


# --- point evaluators --------------------------------------------------------------------

def _log2(x) -> float:
    if isinstance(x, Fraction):
        return math.log2(x.numerator) - math.log2(x.denominator)
    return math.log2(x)


def _exact(lhs, rhs) -> PointResult:
    """lhs > rhs for positive integers or fractions."""
    lhs, rhs = Fraction(lhs), Fraction(rhs)
    if lhs <= 0 or rhs <= 0:
        verdict = HOLDS if lhs > rhs else FAILS
        return PointResult(verdict, None, EXACT)
    return PointResult(HOLDS if lhs > rhs else FAILS, _log2(lhs) - _log2(rhs), EXACT)


def _interval(expr: Callable) -> PointResult:
    verdict, enc = interval.sign_of(expr)
    return PointResult(verdict, float(enc.lo), INTERVAL)


def _both(*results: PointResult) -> PointResult:
    """Conjunction of several checks at one point."""
    for verdict in (FAILS, INCONCLUSIVE):
        for r in results:
            if r.verdict == verdict:
                return r
    margins = [r.margin for r in results if r.margin is not None]
    method = INTERVAL if any(r.method == INTERVAL for r in results) else EXACT
    return PointResult(HOLDS, min(margins) if margins else None, method)


def _identity(lhs, rhs) -> PointResult:
    """An exact identity used inside a ratio argument."""
    return PointResult(HOLDS if Fraction(lhs) == Fraction(rhs) else FAILS, None, EXACT)


def _ratio_step(size: int, ratio: Callable[[], Fraction], stated: Fraction, *checks: PointResult) -> PointResult:
    """Ratio argument at one point: the stated closed form is compared exactly, and it is
    cross-checked against the quotient of the defining expressions while ``size`` (the
    largest factorial argument involved) is at most IDENTITY_LIMIT."""
    if size <= IDENTITY_LIMIT:
        checks = (_identity(ratio(), stated),) + checks
    return _both(*checks)


# intransitive

def intrans_h_squared(m: int) -> Fraction:
    a = (m + 1) * (Fraction(2, 3) * m * m - 4 * m + Fraction(21, 4))
    b = 4 * m * (m - 2) * (m - 3)
    return binomial(m, 2) * a * a / (b * b)


def _intrans_h(m):
    return _exact(intrans_h_squared(m), 1)


def _intrans_h_ratio(m):
    return _exact(intrans_h_squared(m + 1), intrans_h_squared(m))


# imprimitive

def imprim_g(k: int, r: int) -> Fraction:
    f = partition_count_f
    if k == 2:
        return Fraction(9 * f(2, r - 2) ** 2, f(2, r))
    num = binomial(k * r - 4, k - 2) ** 2 * binomial(k * r - k - 2, k - 2) ** 2 * f(k, r - 2) ** 2
    return Fraction(num, f(k, r))


def _imprim_g2(r):
    return _exact(imprim_g(2, r), 1)


def _imprim_g2_ratio(r):
    return _ratio_step(2 * r + 2, lambda: imprim_g(2, r + 1) / imprim_g(2, r),
                       Fraction((2 * r - 3) ** 2, 2 * r + 1), _exact((2 * r - 3) ** 2, 2 * r + 1))


def _imprim_g3r(r):
    return _exact(imprim_g(3, r), 1)


def _imprim_g3r_ratio(r):
    return _exact(imprim_g(3, r + 1), imprim_g(3, r))


def _imprim_gk2(k):
    return _exact(imprim_g(k, 2), 1)


def _imprim_gk2_ratio(k):
    stated = Fraction(2 * (2 * k - 3) ** 2 * (k + 1), (k - 1) ** 2 * (2 * k + 1))
    return _ratio_step(2 * k + 2, lambda: imprim_g(k + 1, 2) / imprim_g(k, 2), stated, _exact(stated, 1))


# affine, d = 1: f(p)^9 = (2^h h!)^9 / ((p-1)^9 (p-2)!^4), h = (p-1)/2

def aff1_f_ninth(p: int) -> Fraction:
    h = (p - 1) // 2
    return Fraction((2**h * factorial(h)) ** 9, (p - 1) ** 9 * factorial(p - 2) ** 4)


def _aff1_f(p):
    return _exact(aff1_f_ninth(p), 1)


def _aff1_f_ratio(p):
    stated = Fraction((p - 1) ** 5, p**4)
    return _ratio_step(p, lambda: aff1_f_ninth(p + 2) / aff1_f_ninth(p), stated, _exact((p - 1) ** 5, p**4))


# affine, d = 2

def aff2_f_ninth(p: int) -> Fraction:
    h = (p * p - 1) // 2
    num = 2 ** (9 * h) * p**3 * factorial(h) ** 9
    den = (p - 1) ** 5 * (p * p - 1) ** 5 * factorial(p * p) ** 4
    return Fraction(num, den)


def _aff2_f(p):
    return _exact(aff2_f_ninth(p), 1)


def _aff2_f_ratio(p):
    return _exact(aff2_f_ninth(p + 2), aff2_f_ninth(p))


def _aff2_ratio_bound(p):
    """(1/2) e^beta (2k / (2k+1)^(8/9))^(2p+2) > 1 with the local beta of the ratio argument."""
    k = (p * p + 4 * p + 3) // 2

    def expr(ctx):
        beta = (ctx.mpf(4) / 9 * (4 * p + 4) * (4 * p + 3) / (4 * k + 2)
                - ctx.mpf((2 * p + 2) * (2 * p + 1)) / (2 * (k - 2 * p - 2)))
        return (beta - ctx.log(2) + (2 * p + 2) * (ctx.log(2 * k) - ctx.mpf(8) / 9 * ctx.log(2 * k + 1)))
    return _interval(expr)


# affine, d >= 3: g(d,p)^9

def aff2_g_ninth(d: int, p: int) -> Fraction:
    a = p ** (d - 2) * (p * p - 1) // 2
    b = p ** (d - 2)
    num = (factorial(a) * factorial(b) * 2**a) ** 9
    den = p ** (5 * d * (d + 1)) * factorial(p**d) ** 4
    return Fraction(num, den)


def _aff2_g_d3(p):
    return _exact(aff2_g_ninth(3, p), 1)


def _aff2_g_p3(d):
    return _exact(aff2_g_ninth(d, 3), 1)


def _aff2_g_p2(d):
    return _exact(aff2_g_ninth(d, 2), 1)


# product type

def prod_f(k: int, r: int) -> Fraction:
    s = k ** (r - 1)
    num = 2 ** (18 * s - 5) * factorial(2 * s) ** 9 * factorial((k - 4) * s) ** 9
    den = factorial(k**r) ** 4 * factorial(k) ** (5 * r) * factorial(r) ** 5
    return Fraction(num, den)


def _prod_f(k):
    return _exact(prod_f(k, 2), 1)


def _prod_f_ratio(k):
    q = k * k
    stated = (Fraction(2**27 * (2 * k + 1) ** 9, k + 1)
              * Fraction(factorial(q), factorial(q + 2 * k + 1)) ** 4
              * Fraction(factorial(q - 2 * k - 3), factorial(q - 4 * k)) ** 9)
    return _ratio_step(q + 2 * k + 1, lambda: prod_f(k + 1, 2) / prod_f(k, 2), stated, _exact(stated, 1))


# diagonal type: f(k, l) = (1/2) (30 / (l^(k+1) k!))^100 (l^(k-1))!

def diag_f(k: int, ell: int) -> Fraction:
    return Fraction(30**100 * factorial(ell ** (k - 1)), 2 * (ell ** (k + 1) * factorial(k)) ** 100)


def _diag_f2(ell):
    return _exact(diag_f(2, ell), 1)


def _diag_f2_ratio(ell):
    stated = Fraction(ell, ell + 1) ** 300 * (ell + 1)
    return _ratio_step(ell + 1, lambda: diag_f(2, ell + 1) / diag_f(2, ell), stated, _exact(stated, 1))


def _diag_f3(ell):
    return _exact(diag_f(3, ell), 1)


# involution class bound: f(m) = m^(15/2) m! / (2^11 e^(10 c sqrt m)), c = pi sqrt(2/3)

def _linv_f(m):
    mf = factorial(m)

    def expr(ctx):
        c = ctx.pi * ctx.sqrt(ctx.mpf(2) / 3)
        return (ctx.mpf(15) / 2 * ctx.log(m) + ctx.log(ctx.mpf(mf)) - 11 * ctx.log(2)
                - 10 * c * ctx.sqrt(m))
    return _interval(expr)


def _linv_f_ratio(m):
    """f(m+1)/f(m) >= m/6, which exceeds 1."""
    def expr(ctx):
        c = ctx.pi * ctx.sqrt(ctx.mpf(2) / 3)
        log_ratio = (ctx.mpf(15) / 2 * ctx.log(ctx.mpf(m + 1) / m) + ctx.log(m + 1)
                     - 10 * c * (ctx.sqrt(m + 1) - ctx.sqrt(m)))
        return log_ratio - ctx.log(ctx.mpf(m) / 6)
    return _both(_interval(expr), _exact(m, 6))


def _epart(m):
    return _exact(factorial(m), 2**11 * partitions(m) ** 10)


# almost simple

def _as_nonstd(m):
    return _exact(factorial(m), 2 * m**500)


def as_std_gamma(m: int) -> int:
    return max_alt_involution_class_size(m)[1]


def _as_std(k):
    """5 - 5 alpha - 9 beta > 0 with alpha, beta as log ratios, i.e. |T|^5 > (k!)^5 gamma^9."""
    m = binomial(k, 2)
    order_t = factorial(m) // 2
    return _exact(order_t**5, factorial(k) ** 5 * as_std_gamma(m) ** 9)


def _as_std_big(k):
    return _exact(factorial(binomial(k, 2)), 2 * factorial(k) ** 100)


def _log_factorial_lower(ctx, n: int):
    """Lower bound for log n! (Robbins): n log n - n + log(2 pi n)/2 + 1/(12n+1)."""
    return n * ctx.log(n) - n + ctx.log(2 * ctx.pi * n) / 2 + ctx.mpf(1) / (12 * n + 1)


def _log_factorial_upper(ctx, n: int):
    return n * ctx.log(n) - n + ctx.log(2 * ctx.pi * n) / 2 + ctx.mpf(1) / (12 * n)


def ell_point(ell: int, q: int) -> PointResult:
    """2^101 q^(100 l^2) < (q^(l-2))!."""
    n = q ** (ell - 2)
    if n <= EXACT_FACTORIAL_LIMIT:
        return _exact(factorial(n), 2**101 * q ** (100 * ell * ell))

    def holds_expr(ctx):
        return _log_factorial_lower(ctx, n) - 101 * ctx.log(2) - 100 * ell * ell * ctx.log(q)

    def fails_expr(ctx):
        return 101 * ctx.log(2) + 100 * ell * ell * ctx.log(q) - _log_factorial_upper(ctx, n)

    verdict, enc = interval.sign_of(holds_expr)
    if verdict == HOLDS:
        return PointResult(HOLDS, float(enc.lo), INTERVAL)
    verdict, enc = interval.sign_of(fails_expr)
    if verdict == HOLDS:
        return PointResult(FAILS, -float(enc.lo), INTERVAL)
    return PointResult(INCONCLUSIVE, None, INTERVAL)


def is_prime_power(q: int) -> bool:
    if q < 2:
        return False
    p = next(f for f in range(2, q + 1) if q % f == 0)
    while q % p == 0:
        q //= p
    return q == 1


# grid points where 2^101 q^(100 l^2) < (q^(l-2))! is not claimed: q <= bound for l >= 5, q < 31 for l = 4
ELL_EXCEPTIONS = {5: 9, 6: 5, 7: 4, 8: 3, 9: 2, 10: 2, 11: 2, 12: 2}
ELL_GRID_Q = 32
ELL_GRID_L = range(4, 13)


# --- registry ----------------------------------------------------------------------------

def _any(x: int) -> bool:
    return True


def _odd(x: int) -> bool:
    return x % 2 == 1


def _prime(x: int) -> bool:
    return is_prime(x)


def _prime_1mod4(x: int) -> bool:
    return is_prime(x) and x % 4 == 1


@dataclass(frozen=True)
class Inequality:
    id: str
    statement: str
    param: str
    minimum: int
    maximum: int | None
    admissible: Callable[[int], bool]
    evaluate: Callable[[int], PointResult]
    method: str
    monotone: bool = False
    base: int | None = None

    def in_domain(self, x: int) -> bool:
        return x >= self.minimum and (self.maximum is None or x <= self.maximum)


def _entry(id, statement, param, minimum, maximum, admissible, evaluate, method=EXACT,
           base=None) -> Inequality:
    return Inequality(id, statement, param, minimum, maximum, admissible, evaluate, method,
                      id.endswith("_ratio") or id.endswith("_bound"), base)


_ENTRIES = [
    _entry("intrans_h", "h(m) = C(m,2)^(1/2) (m+1)(2m^2/3 - 4m + 21/4) / (4m(m-2)(m-3)) > 1",
           "m", 10, 10**4, _any, _intrans_h, base=10),
    _entry("intrans_h_ratio", "h(m+1) / h(m) > 1", "m", 10, 10**4, _any, _intrans_h_ratio),
    _entry("imprim_g2", "g(r) = 9 f(2,r-2)^2 / f(2,r) > 1", "r", 5, 2000, _any, _imprim_g2, base=5),
    _entry("imprim_g2_ratio", "g(r+1)/g(r) = (2r-3)^2/(2r+1) > 1", "r", 5, 10**4, _any, _imprim_g2_ratio),
    _entry("imprim_g3r", "g(3,r) = C(3r-4,1)^2 C(3r-5,1)^2 f(3,r-2)^2 / f(3,r) > 1", "r", 3, 1000, _any,
           _imprim_g3r, base=3),
    _entry("imprim_g3r_ratio", "g(3,r+1) / g(3,r) > 1", "r", 3, 1000, _any, _imprim_g3r_ratio),
    _entry("imprim_gk2", "g(k,2) = C(2k-4,k-2)^2 / f(k,2) > 1", "k", 4, 2000, _any, _imprim_gk2, base=4),
    _entry("imprim_gk2_ratio", "g(k+1,2)/g(k,2) = 2(2k-3)^2(k+1)/((k-1)^2(2k+1)) > 1", "k", 4, 2000,
           _any, _imprim_gk2_ratio),
    _entry("aff1_f", "f(p) = 2^((p-1)/2) ((p-1)/2)! / ((p-1) (p-2)!^(4/9)) > 1", "p", 13, 2000,
           _prime_1mod4, _aff1_f, base=13),
    _entry("aff1_f_ratio", "f(p+2)/f(p) = (p-1)^(5/9) p^(-4/9) > 1", "p", 13, 10**4, _odd, _aff1_f_ratio),
    _entry("aff2_f", "f(p) = 2^((p^2-1)/2) p^(1/3) ((p^2-1)/2)! / ((p-1)^(5/9) (p^2-1)^(5/9) (p^2)!^(4/9)) > 1",
           "p", 7, 101, _odd, _aff2_f, base=7),
    _entry("aff2_f_ratio", "f(p+2) / f(p) > 1", "p", 7, 101, _odd, _aff2_f_ratio),
    _entry("aff2_ratio_bound", "(1/2) e^beta (2k/(2k+1)^(8/9))^(2p+2) > 1, k = (p^2+4p+3)/2, "
           "beta = (4/9)(4p+4)(4p+3)/(4k+2) - (2p+2)(2p+1)/(2(k-2p-2))", "p", 7, 10**4, _odd,
           _aff2_ratio_bound, method=INTERVAL),
    _entry("aff2_g_d3", "g(3,p) > 1 where g(d,p) = (p^(d-2)(p^2-1)/2)! (p^(d-2))! 2^(p^(d-2)(p^2-1)/2) "
           "/ (p^(5d(d+1)/9) (p^d)!^(4/9))", "p", 5, 31, _prime, _aff2_g_d3, base=5),
    _entry("aff2_g_p3", "g(d,3) > 1", "d", 5, 8, _any, _aff2_g_p3, base=5),
    _entry("aff2_g_p2", "g(d,2) > 1", "d", 7, 13, _any, _aff2_g_p2, base=7),
    _entry("prod_f", "f(k,2) = 2^(18k-5) (2k)!^9 ((k-4)k)!^9 / ((k^2)!^4 (k!)^10 2^5) > 1", "k", 7, 100,
           _any, _prod_f, base=7),
    _entry("prod_f_ratio", "f(k+1,2)/f(k,2) = 2^27 (2k+1)^9/(k+1) ((k^2)!/(k^2+2k+1)!)^4 "
           "((k^2-2k-3)!/(k^2-4k)!)^9 > 1", "k", 7, 100, _any, _prod_f_ratio),
    _entry("diag_f2", "f(2,l) = (1/2) (30/(2 l^3))^100 l! > 1", "l", 360, 10**4, _any, _diag_f2, base=360),
    _entry("diag_f2_ratio", "f(2,l+1)/f(2,l) = (l/(l+1))^300 (l+1) > 1", "l", 360, 10**4, _any, _diag_f2_ratio),
    _entry("diag_f3", "f(3,l) = (1/2) (30/(6 l^4))^100 (l^2)! > 1", "l", 60, 300, _any, _diag_f3, base=60),
    _entry("linv_f", "f(m) = m^(15/2) m! / (2^11 e^(10 c sqrt(m))) > 1, c = pi sqrt(2/3)", "m", 55, 10**4,
           _any, _linv_f, method=INTERVAL, base=55),
    _entry("linv_f_ratio", "f(m+1)/f(m) >= m/6 > 1", "m", 55, 10**4, _any, _linv_f_ratio, method=INTERVAL),
    _entry("epart", "2^11 p(m)^10 < m!", "m", 55, 5000, _any, _epart),
    _entry("as_nonstd", "2 m^500 < m!", "m", 601, 10**4, _any, _as_nonstd, base=601),
    _entry("as_std", "5 - 5a - 9b > 0 with a = log k!/log|T|, b = log gamma/log|T|, T = A_m, m = C(k,2)",
           "k", 36, 97, _any, _as_std, base=36),
    _entry("as_std_big", "(k!)^100 < (C(k,2))!/2", "k", 98, 400, _any, _as_std_big, base=98),
]
for _ell in ELL_GRID_L:
    _q0 = 31 if _ell == 4 else ELL_EXCEPTIONS[_ell] + 1
    _ENTRIES.append(_entry(f"as_ell_{_ell}", f"2^101 q^(100*{_ell}^2) < (q^{_ell - 2})!", "q", _q0,
                           ELL_GRID_Q, is_prime_power, lambda q, _l=_ell: ell_point(_l, q),
                           method=INTERVAL, base=next(q for q in range(_q0, 100) if is_prime_power(q))))

REGISTRY: dict[str, Inequality] = {e.id: e for e in _ENTRIES}

# starting points of the monotone bounds; the as_* entries are checked over their own ranges
BASE_CASES = [(e.id, e.base) for e in _ENTRIES if e.base is not None and not e.id.startswith("as")]


def registered_ids() -> list[str]:
    return sorted(REGISTRY)


def _lookup(id: str) -> tuple[Inequality, int | None]:
    if id in REGISTRY:
        return REGISTRY[id], None
    if id.endswith("_base") and id[:-5] in REGISTRY:
        entry = REGISTRY[id[:-5]]
        return entry, entry.base
    raise KeyError(f"unknown inequality id {id!r}")


def evaluate_point(id: str, x: int, check_domain: bool = True) -> PointResult:
    entry, _ = _lookup(id)
    if check_domain and not entry.in_domain(x):
        raise DomainError(f"{entry.param}={x} is outside the validity domain of {entry.id}")
    return entry.evaluate(x)


def certify(id: str, lo: int | None = None, hi: int | None = None) -> CertResult:
    """Check a registered inequality at every admissible point of [lo, hi]."""
    entry, base = _lookup(id)
    if lo is None:
        base = entry.base if base is None else base
        if base is None:
            raise DomainError(f"{id} needs a range")
        lo = hi = base
    if hi is None:
        hi = lo
    if lo > hi:
        raise DomainError(f"empty range {lo}..{hi}")
    if not (entry.in_domain(lo) and entry.in_domain(hi)):
        top = "" if entry.maximum is None else str(entry.maximum)
        raise DomainError(f"range {lo}..{hi} is outside the validity domain {entry.minimum}..{top} of {entry.id}")
    points = [x for x in range(lo, hi + 1) if entry.admissible(x)]
    if not points:
        raise DomainError(f"no admissible {entry.param} in {lo}..{hi}")
    results = [(x, entry.evaluate(x)) for x in points]
    return _fold(entry.id, (lo, hi), entry.param, results)


def certify_monotone(id: str, lo: int, hi: int) -> CertResult:
    entry, _ = _lookup(id)
    if not entry.monotone:
        raise DomainError(f"{entry.id} is not a ratio inequality")
    return certify(entry.id, lo, hi)


def _fold(id: str, domain: tuple, param: str, results: list[tuple[object, PointResult]]) -> CertResult:
    """Combine point results; the outcome does not depend on their order."""
    results = sorted(results, key=lambda item: item[0])
    method = INTERVAL if any(r.method == INTERVAL for _, r in results) else EXACT
    failing = [x for x, r in results if r.verdict == FAILS]
    unknown = [x for x, r in results if r.verdict == INCONCLUSIVE]
    if failing:
        verdict, witness = FAILS, failing[0]
    elif unknown:
        verdict, witness = INCONCLUSIVE, None
    else:
        verdict, witness = HOLDS, None
    scored = [(r.margin, x) for x, r in results if r.margin is not None]
    unit = "log2(lhs/rhs)" if method == EXACT else "ln(lhs/rhs) lower bound"
    if scored:
        low, at = min(scored)
        margin = f"min {unit} = {low:.6g} at {param}={at}"
    else:
        margin = "n/a"
    if unknown:
        margin += f"; undecided at {param}={unknown[0]}"
    return CertResult(id, domain, method, verdict, margin, len(results), witness)


# --- factorial ratio bounds ----------------------------------------------------------------

def factorial_ratio_bounds_check(a: int, b: int, precision: int = interval.START_BITS) -> CertResult:
    """a^b e^(-b(b-1)/(2(a-b))) <= a!/(a-b)! <= a^b e^(-b(b-1)/(2a))."""
    if not 1 <= b < a <= 10**4:
        raise DomainError(f"need 1 <= b < a <= 10^4, got a={a}, b={b}")
    middle = factorial(a) // factorial(a - b)
    if b == 1:
        # both exponents vanish and the bounds equal a
        ok = middle == a
        return CertResult("fact_ratio", (a, b), EXACT, HOLDS if ok else FAILS, "equality at b=1", 1,
                          None if ok else (a, b))

    def lower(ctx):
        return ctx.log(ctx.mpf(middle)) - b * ctx.log(a) + ctx.mpf(b * (b - 1)) / (2 * (a - b))

    def upper(ctx):
        return b * ctx.log(a) - ctx.mpf(b * (b - 1)) / (2 * a) - ctx.log(ctx.mpf(middle))

    v1, e1 = interval.sign_of(lower, precision)
    v2, e2 = interval.sign_of(upper, precision)
    if FAILS in (v1, v2):
        verdict = FAILS
    elif INCONCLUSIVE in (v1, v2):
        verdict = INCONCLUSIVE
    else:
        verdict = HOLDS
    margin = f"ln margins >= {float(e1.lo):.6g} (lower), {float(e2.lo):.6g} (upper) at {max(e1.bits, e2.bits)} bits"
    return CertResult("fact_ratio", (a, b), INTERVAL, verdict, margin, 1, (a, b) if verdict == FAILS else None)


def factorial_ratio_grid(points: int = 1000, seed: int = 0, top: int = 10**4) -> list[tuple[int, int]]:
    """A reproducible sample of (a, b) with 1 <= b < a <= top, always including b = 1 and b = a - 1."""
    rng = random.Random(seed)
    grid = {(2, 1), (top, 1), (top, top - 1), (10, 5), (100, 50)}
    while len(grid) < points:
        a = rng.randint(2, top)
        grid.add((a, rng.randint(1, a - 1)))
    return sorted(grid)


def factorial_ratio_sweep(grid: list[tuple[int, int]]) -> CertResult:
    results = []
    for a, b in grid:
        r = factorial_ratio_bounds_check(a, b)
        results.append(((a, b), PointResult(r.verdict, None, r.method)))
    lo, hi = grid[0], grid[-1]
    return _fold("fact_ratio", (lo, hi), "(a,b)", results)


# --- involution class sizes in A_m -----------------------------------------------------------

def inv_class_bound_check(lo: int, hi: int | None = None) -> CertResult:
    """For each m: gamma^20 < |A_m|^11 and |I(S_m)|^2 < m! p(m), exactly."""
    hi = lo if hi is None else hi
    if not 21 <= lo <= hi <= 60:
        raise DomainError(f"range {lo}..{hi} is outside 21..60")
    results = []
    for m in range(lo, hi + 1):
        order_t = factorial(m) // 2
        _, gamma = max_alt_involution_class_size(m)
        inv = involution_count_symmetric(m)
        results.append((m, _both(_exact(order_t**11, gamma**20),
                                 _exact(factorial(m) * partitions(m), inv * inv))))
    return _fold("linv_classes", (lo, hi), "m", results)


def ell_grid_failures() -> set[tuple[int, int]]:
    """(l, q) on the grid 4 <= l <= 12, prime powers q <= 32, where 2^101 q^(100 l^2) < (q^(l-2))! fails."""
    out = set()
    for ell in ELL_GRID_L:
        for q in range(2, ELL_GRID_Q + 1):
            if is_prime_power(q):
                r = ell_point(ell, q)
                if r.verdict != HOLDS:
                    out.add((ell, q))
    return out


def ell_claimed_exceptions() -> set[tuple[int, int]]:
    """Grid points excluded from the claimed range of the same bound."""
    out = set()
    for ell in ELL_GRID_L:
        q_max = 29 if ell == 4 else ELL_EXCEPTIONS[ell]
        out |= {(ell, q) for q in range(2, q_max + 1) if is_prime_power(q)}
    return out

