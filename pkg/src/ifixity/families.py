"""Closed-form fixity for the O'Nan-Scott families of maximal subgroups of
A_m and S_m, the generic order criteria, and the ``classify`` dispatcher.

All threshold comparisons are exact integer comparisons; only
``lb_criterion`` and ``standard_exponents`` work with floating logs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

from ifixity.bigcomb import (DomainError, alt_involution_class_size, binomial, factorial,
                             max_alt_involution_class_size)
from ifixity.report import CRITERION, EXACT, LOWER_BOUND, ZERO_ODD_ORDER, FixityReport

# |AGL_d(p)| up to which the affine family is evaluated by scanning H_0
AFFINE_SCAN_BOUND = 10**6
# largest degree m for which factorials of m are formed
MAX_DEGREE = 20000


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def gl_order(n: int, q: int) -> int:
    """|GL_n(q)|."""
    out = 1
    for i in range(n):
        out *= q**n - q**i
    return out


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


@dataclass(frozen=True)
class CycleShape:
    transpositions: int
    fixed: int
    degree: int

    def __post_init__(self):
        if 2 * self.transpositions + self.fixed != self.degree:
            raise ValueError("2*transpositions + fixed must equal degree")


# --- action specifications --------------------------------------------------------------

@dataclass(frozen=True)
class Intransitive:
    """Action of A_m on k-subsets."""
    m: int
    k: int

    def __post_init__(self):
        if not (1 <= self.k and 2 * self.k < self.m):
            raise DomainError(f"intransitive needs 1 <= k < m/2, got m={self.m}, k={self.k}")


@dataclass(frozen=True)
class Imprimitive:
    """Action of A_m, m = k*r, on partitions into r blocks of size k."""
    k: int
    r: int

    def __post_init__(self):
        if self.k < 2 or self.r < 2:
            raise DomainError(f"imprimitive needs k >= 2 and r >= 2, got k={self.k}, r={self.r}")

    @property
    def m(self) -> int:
        return self.k * self.r


@dataclass(frozen=True)
class Affine:
    """Action of A_m, m = p^d, on the cosets of AGL_d(p) & A_m."""
    p: int
    d: int

    def __post_init__(self):
        if not is_prime(self.p) or self.d < 1:
            raise DomainError(f"affine needs p prime and d >= 1, got p={self.p}, d={self.d}")

    @property
    def m(self) -> int:
        return self.p**self.d


@dataclass(frozen=True)
class ProductType:
    """Action of A_m, m = k^r, on the cosets of (S_k wr S_r) & A_m."""
    k: int
    r: int

    def __post_init__(self):
        if self.k < 5 or self.r < 2:
            raise DomainError(f"product type needs k >= 5 and r >= 2, got k={self.k}, r={self.r}")

    @property
    def m(self) -> int:
        return self.k**self.r


@dataclass(frozen=True)
class DiagonalType:
    """Diagonal-type stabilizer with socle S^k, |S| = ell, m = ell^(k-1)."""
    ell: int
    k: int

    def __post_init__(self):
        if self.ell < 60 or self.k < 2:
            raise DomainError(f"diagonal type needs |S| >= 60 and k >= 2, got {self.ell}, {self.k}")

    @property
    def m(self) -> int:
        return self.ell ** (self.k - 1)


@dataclass(frozen=True)
class AlmostSimple:
    """Almost simple primitive stabilizer of known order |H_0| in A_m."""
    m: int
    h0_order: int
    standard: bool

    def __post_init__(self):
        if self.m < 5 or self.h0_order < 1:
            raise DomainError("almost simple needs m >= 5 and |H_0| >= 1")


@dataclass(frozen=True)
class Sporadic:
    """Sporadic socle T with stabilizer named in Atlas notation."""
    group: str
    h0: str


@dataclass(frozen=True)
class Explicit:
    """T and H_0 given by generating permutations."""
    t_gens: tuple
    h0_gens: tuple
    label: str = ""


ActionSpec = Intransitive | Imprimitive | Affine | ProductType | DiagonalType | AlmostSimple | Sporadic | Explicit


# --- intransitive and imprimitive ---------------------------------------------------------

def intransitive_fix_t(m: int, k: int) -> int:
    """k-subsets of {1..m} fixed by (1,2)(3,4)."""
    if m < 5 or not (1 <= k and 2 * k < m):
        raise DomainError(f"need m >= 5 and 1 <= k < m/2, got m={m}, k={k}")
    if k == 1:
        return m - 4
    return binomial(m - 4, k) + 2 * binomial(m - 4, k - 2) + binomial(m - 4, k - 4)


def subset_fix(m: int, s: int, k: int) -> int:
    """k-subsets fixed by an involution with s transpositions on m points."""
    return sum(binomial(s, b) * binomial(m - 2 * s, k - 2 * b) for b in range(k // 2 + 1))


def subset_action_ifix(m: int, k: int) -> int:
    """Exact ifix of A_m on k-subsets: best even number of transpositions."""
    if m < 4 or not (1 <= k and 2 * k < m):
        raise DomainError(f"need m >= 4 and 1 <= k < m/2, got m={m}, k={k}")
    return max(subset_fix(m, s, k) for s in range(2, m // 2 + 1, 2))


def partition_count_f(k: int, r: int) -> int:
    """Partitions of a kr-set into r blocks of size k."""
    if k < 1 or r < 0:
        raise DomainError(f"need k >= 1 and r >= 0, got k={k}, r={r}")
    return factorial(k * r) // (factorial(k) ** r * factorial(r))


def imprimitive_fix_t(k: int, r: int) -> int:
    """Partitions into r blocks of size k fixed by (1,2)(3,4)."""
    if k < 2 or r < 2:
        raise DomainError(f"need k >= 2 and r >= 2, got k={k}, r={r}")
    if k == 2:
        return 3 * partition_count_f(2, r - 2)
    m = k * r
    return (binomial(m - 4, k - 2) * binomial(m - k - 2, k - 2) * partition_count_f(k, r - 2)
            + binomial(m - 4, k - 4) * partition_count_f(k, r - 1))


# --- affine ----------------------------------------------------------------------------

def _check_affine_k(p: int, d: int, k: int) -> None:
    if not is_prime(p):
        raise DomainError(f"{p} is not prime")
    if p == 2:
        if not 1 <= 2 * k <= d:
            raise DomainError(f"for p = 2 need 1 <= k <= d/2, got d={d}, k={k}")
    elif not 1 <= k <= d:
        raise DomainError(f"need 1 <= k <= d, got d={d}, k={k}")


def affine_shape(p: int, d: int, k: int) -> CycleShape:
    """Cycle shape of t_k in AGL_d(p) on p^d points."""
    _check_affine_k(p, d, k)
    fixed = p ** (d - k)
    return CycleShape(p ** (d - k) * (p**k - 1) // 2, fixed, p**d)


def affine_centralizer_order(p: int, d: int, k: int) -> int:
    """|C(t_k)| in AGL_d(p)."""
    _check_affine_k(p, d, k)
    if p == 2:
        return 2 ** (d - k + 2 * d * k - 3 * k * k) * gl_order(k, 2) * gl_order(d - 2 * k, 2)
    return p ** (d - k) * gl_order(k, p) * gl_order(d - k, p)


def agl_order(p: int, d: int) -> int:
    return p**d * gl_order(d, p)


def agl_in_alternating(p: int, d: int) -> bool:
    """Whether AGL_d(p) acts by even permutations on p^d points."""
    return p == 2 and d >= 3


def affine_ifix_d1(p: int) -> FixityReport:
    """A_p on the cosets of AGL_1(p) & A_p."""
    if p < 5 or not is_prime(p):
        raise DomainError(f"need a prime p >= 5, got {p}")
    n = factorial(p - 2)
    label = f"affine p={p} d=1"
    if p % 4 == 3:
        return FixityReport(n, 0, ZERO_ODD_ORDER, label)
    h = (p - 1) // 2
    num = 2**h * factorial(h)
    if num % (p - 1):
        raise ArithmeticError(f"fixed point count not integral at p={p}")
    value = num // (p - 1)
    return FixityReport(n, value, EXACT, label,
                        details={"at_most_sqrt_n": value * value <= n})


def _affine_scan(p: int, d: int, n: int, label: str) -> FixityReport:
    """Exact ifix by grouping the involutions of H_0 by cycle type (T = A_m natural)."""
    from ifixity.groups import affine_generators, even_part
    from ifixity.permcore import _is_involution, build_group

    m = p**d
    H0 = build_group(even_part(affine_generators(p, d)))
    counts: dict[int, int] = {}
    for g in H0.elements_raw():
        if _is_involution(g):
            s = sum(1 for i, x in enumerate(g) if x != i) // 2
            counts[s] = counts.get(s, 0) + 1
    fixes = {}
    for s, c in counts.items():
        size = alt_involution_class_size(m, s)
        if (c * n) % size:
            raise ArithmeticError(f"non-integral fixed point count for {s} transpositions")
        fixes[s] = c * n // size
    value = max(fixes.values(), default=0)
    return FixityReport(n, value, EXACT, label, details={"by_transpositions": fixes,
                                                         "method": "H_0 scan by cycle type"})


def affine_report(p: int, d: int) -> FixityReport:
    if d == 1:
        return affine_ifix_d1(p)
    m = p**d
    if m > MAX_DEGREE:
        raise DomainError(f"degree {m} too large")
    label = f"affine p={p} d={d}"
    agl = agl_order(p, d)
    h0 = agl if agl_in_alternating(p, d) else agl // 2
    n = factorial(m) // 2 // h0
    from ifixity.permcore import COSET_BOUND

    if n <= COSET_BOUND and agl <= AFFINE_SCAN_BOUND:
        from ifixity.groups import affine_generators, alternating_group, even_part
        from ifixity.permcore import ifix_bruteforce

        report = ifix_bruteforce(alternating_group(m), even_part(affine_generators(p, d)), label=label)
        return report
    if agl <= AFFINE_SCAN_BOUND:
        return _affine_scan(p, d, n, label)
    best = None
    witnesses = {}
    kmax = d // 2 if p == 2 else d
    for k in range(1, kmax + 1):
        shape = affine_shape(p, d, k)
        if shape.transpositions % 2:
            continue
        conj = agl // affine_centralizer_order(p, d, k)
        bound = _ceil_div(conj * n, alt_involution_class_size(m, shape.transpositions))
        witnesses[k] = bound
        if best is None or bound > best:
            best = bound
    if best is None:
        raise DomainError(f"no even witness t_k for p={p}, d={d}")
    return FixityReport(n, best, LOWER_BOUND, label, details={"witness_bounds": witnesses})


# --- product type ---------------------------------------------------------------------

def product_shape(k: int, r: int) -> CycleShape:
    """Cycle shape of ((1,2)(3,4), 1, ..., 1) in the product action on k^r points."""
    if k < 5 or r < 2:
        raise DomainError(f"need k >= 5 and r >= 2, got k={k}, r={r}")
    return CycleShape(2 * k ** (r - 1), (k - 4) * k ** (r - 1), k**r)


def wreath_in_alternating(k: int, r: int) -> bool:
    """Whether S_k wr S_r in product action on k^r points consists of even permutations."""
    coordinate_transposition_odd = k % 2 == 1
    swap_odd = (k * (k - 1) // 2 * k ** (r - 2)) % 2 == 1
    return not (coordinate_transposition_odd or swap_odd)


def product_report(k: int, r: int) -> FixityReport:
    m = k**r
    if m > MAX_DEGREE:
        raise DomainError(f"degree {m} too large")
    shape = product_shape(k, r)
    wreath = factorial(k) ** r * factorial(r)
    h0 = wreath if wreath_in_alternating(k, r) else wreath // 2
    n = factorial(m) // 2 // h0
    # the H-conjugates of the witness: (t', 1, ..., 1) up to coordinate, t' of type (2^2)
    meet = r * 3 * binomial(k, 4)
    value = _ceil_div(meet * n, alt_involution_class_size(m, shape.transpositions))
    return FixityReport(n, value, LOWER_BOUND, f"product k={k} r={r}",
                        details={"witness_conjugates_in_h0": meet})


# --- generic criteria -------------------------------------------------------------------

def lb_criterion(alpha: float, beta: float) -> bool:
    """5 - 5 alpha - 9 beta > 0."""
    return 5 - 5 * alpha - 9 * beta > 0


def order_criterion(m: int, h0_order: int) -> bool:
    """|H_0|^100 < |A_m|, exactly."""
    if m <= 20:
        raise DomainError(f"order criterion needs m > 20, got {m}")
    return 2 * h0_order**100 < factorial(m)


def diagonal_criterion(ell: int, k: int) -> bool:
    """(ell^(k+1) k! / 30)^100 < (ell^(k-1))! / 2, exactly."""
    if ell < 60:
        raise DomainError(f"|S| = {ell} is below 60")
    if k < 2:
        raise DomainError(f"need k >= 2, got {k}")
    m = ell ** (k - 1)
    if m > MAX_DEGREE:
        raise DomainError(f"degree {m} too large")
    return 2 * (ell ** (k + 1) * factorial(k)) ** 100 < 30**100 * factorial(m)


def standard_exponents(m: int, h_order: int) -> tuple[float, float]:
    """(log |H| / log |T|, log gamma / log |T|) for T = A_m."""
    log_t = math.log(factorial(m) // 2)
    _, gamma = max_alt_involution_class_size(m)
    return math.log(h_order) / log_t, math.log(gamma) / log_t


def almost_simple_criterion(m: int, h_order: int, standard: bool) -> bool:
    """Whether the generic bounds certify ifix(A_m) > n^(4/9) for an almost simple H."""
    if h_order < 1:
        raise DomainError("|H| must be positive")
    if not standard:
        if m <= 600:
            raise DomainError(f"non-standard branch needs m > 600, got {m}")
        if h_order >= m**5:
            raise DomainError(f"|H| = {h_order} is not below m^5 for a non-standard group")
        return 2 * (m**5) ** 100 < factorial(m)
    alpha, beta = standard_exponents(m, h_order)
    return lb_criterion(alpha, beta)


# --- odd order stabilizers ----------------------------------------------------------------

ODD_ORDER_TABLE = [
    # (T, |T|, H_0, |H_0|, conditions); the A_p family is handled by the affine d = 1 case
    ("J3", 50232960, "19:9", 171, "G = T.2"),
    ("O'N", 460815505920, "31:15", 465, "G = T.2"),
    ("M23", 10200960, "23:11", 253, ""),
    ("Th", 90745943887872000, "31:15", 465, ""),
    ("B", 4154781481226426191177580544000000, "47:23", 1081, ""),
]


def odd_order_lookup(group: str, h0: str) -> tuple[int, str] | None:
    """(n, conditions) when (T, H_0) is a sporadic entry of the odd-order table."""
    for t, order_t, h, order_h, cond in ODD_ORDER_TABLE:
        if t == group and h == h0:
            return order_t // order_h, cond
    return None


# --- dispatcher -------------------------------------------------------------------------

def classify(spec: ActionSpec) -> FixityReport:
    """Fixity report for one primitive action."""
    if isinstance(spec, Intransitive):
        n = binomial(spec.m, spec.k)
        value = intransitive_fix_t(spec.m, spec.k)
        return FixityReport(n, value, LOWER_BOUND, f"intransitive m={spec.m} k={spec.k}",
                            details={"witness": "(1,2)(3,4)"})
    if isinstance(spec, Imprimitive):
        n = partition_count_f(spec.k, spec.r)
        value = imprimitive_fix_t(spec.k, spec.r)
        return FixityReport(n, value, LOWER_BOUND, f"imprimitive k={spec.k} r={spec.r}",
                            details={"witness": "(1,2)(3,4)"})
    if isinstance(spec, Affine):
        return affine_report(spec.p, spec.d)
    if isinstance(spec, ProductType):
        return product_report(spec.k, spec.r)
    if isinstance(spec, DiagonalType):
        label = f"diagonal |S|={spec.ell} k={spec.k}"
        return FixityReport(None, None, CRITERION, label,
                            criterion=diagonal_criterion(spec.ell, spec.k))
    if isinstance(spec, AlmostSimple):
        return _almost_simple_report(spec)
    if isinstance(spec, Sporadic):
        return _sporadic_report(spec)
    if isinstance(spec, Explicit):
        from ifixity.permcore import build_group, ifix_bruteforce

        T = build_group(list(spec.t_gens))
        return ifix_bruteforce(T, list(spec.h0_gens), label=spec.label)
    raise TypeError(f"not an action spec: {spec!r}")


def _almost_simple_report(spec: AlmostSimple) -> FixityReport:
    m, h0 = spec.m, spec.h0_order
    if m > MAX_DEGREE:
        raise DomainError(f"degree {m} too large")
    order_t = factorial(m) // 2
    if order_t % h0:
        raise DomainError(f"|H_0| = {h0} does not divide |A_{m}|")
    n = order_t // h0
    label = f"almost simple m={m}"
    if h0 % 2:
        return FixityReport(n, 0, ZERO_ODD_ORDER, label)
    _, gamma = max_alt_involution_class_size(m)
    crit = None
    if spec.standard or m > 600:
        crit = almost_simple_criterion(m, h0, spec.standard)
    return FixityReport(n, _ceil_div(n, gamma), LOWER_BOUND, label, criterion=crit,
                        details={"largest_involution_class": gamma})


def _sporadic_report(spec: Sporadic) -> FixityReport:
    from ifixity import chartab

    hit = odd_order_lookup(spec.group, spec.h0)
    if hit is not None:
        n, cond = hit
        return FixityReport(n, 0, ZERO_ODD_ORDER, f"{spec.group} on cosets of {spec.h0}",
                            details={"conditions": cond})
    return chartab.bundled_ifix(spec.group, spec.h0)
