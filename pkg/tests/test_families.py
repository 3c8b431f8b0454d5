import itertools
import math

import pytest
from hypothesis import given, strategies as st

from ifixity import families as fam
from ifixity.bigcomb import DomainError, binomial, factorial
from ifixity.groups import (affine_group, affine_involution, alternating_group, bundled_generators,
                            product_action_perm)
from ifixity.permcore import Perm, build_group, centralizer, ifix_bruteforce
from ifixity.report import CRITERION, EXACT, LOWER_BOUND, ZERO_ODD_ORDER

T12 = ((0, 1), (2, 3))  # (1,2)(3,4), 0-based


def apply_cycles(cycles, x):
    for c in cycles:
        if x in c:
            return c[(c.index(x) + 1) % len(c)]
    return x


def fixed_subsets(m, k, cycles):
    count = 0
    for s in itertools.combinations(range(m), k):
        if {apply_cycles(cycles, x) for x in s} == set(s):
            count += 1
    return count


def set_partitions(m, k):
    """Partitions of range(m) into blocks of size k, each as a frozenset of frozensets."""
    def rec(rest):
        if not rest:
            yield []
            return
        first = rest[0]
        for others in itertools.combinations(rest[1:], k - 1):
            block = frozenset((first,) + others)
            remaining = [x for x in rest if x not in block]
            for tail in rec(remaining):
                yield [block] + tail
    for blocks in rec(list(range(m))):
        yield frozenset(blocks)


def involution_with(s):
    return tuple((2 * i, 2 * i + 1) for i in range(s))


# --- intransitive ---------------------------------------------------------------------

SUBSET_CASES = [(m, k) for m in range(5, 13) for k in range(1, (m + 1) // 2) if 2 * k < m]


@pytest.mark.parametrize("m,k", SUBSET_CASES)
def test_intransitive_fix_matches_brute_force(m, k):
    assert fam.intransitive_fix_t(m, k) == fixed_subsets(m, k, T12)


@pytest.mark.parametrize("m,k", SUBSET_CASES)
def test_subset_action_ifix_matches_brute_force(m, k):
    # involution classes of A_m are determined by an even number s of transpositions
    brute = max(fixed_subsets(m, k, involution_with(s)) for s in range(2, m // 2 + 1, 2))
    assert fam.subset_action_ifix(m, k) == brute
    assert brute >= fam.intransitive_fix_t(m, k)


def test_intransitive_examples():
    assert fam.intransitive_fix_t(10, 3) == 32
    assert fam.intransitive_fix_t(7, 2) == 5
    assert all(fam.intransitive_fix_t(m, 1) == m - 4 for m in range(5, 40))
    assert fam.subset_action_ifix(5, 2) == 2
    assert all(fam.subset_action_ifix(m, 1) == m - 4 for m in range(5, 40))
    with pytest.raises(DomainError):
        fam.intransitive_fix_t(8, 4)
    with pytest.raises(DomainError):
        fam.Intransitive(8, 0)


def test_subset_action_ifix_on_a5_pairs():
    """A_5 on 2-subsets by coset enumeration: the stabilizer of {1,2} in A_5 is S_3."""
    _, gens = bundled_generators("A5_S3")
    r = ifix_bruteforce(alternating_group(5), gens)
    assert (r.value, r.n) == (fam.subset_action_ifix(5, 2), 10)


@pytest.mark.parametrize("m", range(7, 201))
def test_intransitive_witness_beats_square_root(m):
    for k in range(1, (m + 1) // 2):
        if 2 * k < m:
            assert fam.intransitive_fix_t(m, k) ** 2 > binomial(m, k)


# --- imprimitive ----------------------------------------------------------------------

IMPRIM_CASES = [(k, r) for k in range(2, 7) for r in range(2, 7) if k * r <= 12]


@pytest.mark.parametrize("k,r", IMPRIM_CASES)
def test_imprimitive_matches_brute_force(k, r):
    m = k * r
    parts = list(set_partitions(m, k))
    assert fam.partition_count_f(k, r) == len(parts)
    fixed = sum(1 for P in parts
                if frozenset(frozenset(apply_cycles(T12, x) for x in b) for b in P) == P)
    assert fam.imprimitive_fix_t(k, r) == fixed


def test_imprimitive_examples():
    assert fam.partition_count_f(2, 3) == 15
    assert fam.partition_count_f(3, 3) == 280
    assert fam.partition_count_f(7, 1) == 1
    assert fam.partition_count_f(7, 0) == 1
    assert fam.imprimitive_fix_t(2, 5) == 45
    assert fam.imprimitive_fix_t(3, 3) == 20
    assert fam.imprimitive_fix_t(4, 3) == 455


@pytest.mark.parametrize("m", range(9, 61))
def test_imprimitive_witness_beats_square_root(m):
    for k in range(2, m // 2 + 1):
        if m % k == 0:
            r = m // k
            assert fam.imprimitive_fix_t(k, r) ** 2 > fam.partition_count_f(k, r)


# --- affine ---------------------------------------------------------------------------

def affine_cases(limit=343):
    out = []
    for p in range(2, limit + 1):
        if not fam.is_prime(p):
            continue
        d = 1
        while p**d <= limit:
            kmax = d // 2 if p == 2 else d
            out += [(p, d, k) for k in range(1, kmax + 1)]
            d += 1
    return out


AFFINE_CASES = affine_cases()
SMALL_AFFINE = [c for c in AFFINE_CASES if fam.agl_order(c[0], c[1]) <= 10**5]


@pytest.mark.parametrize("p,d,k", AFFINE_CASES)
def test_affine_shape_matches_explicit_involution(p, d, k):
    t = affine_involution(p, d, k)
    assert t.is_involution()
    shape = fam.affine_shape(p, d, k)
    assert t.fixed_points() == shape.fixed
    assert len(t.cycles()) == shape.transpositions
    assert t.degree == shape.degree == p**d


@pytest.mark.parametrize("p,d,k", SMALL_AFFINE)
def test_affine_centralizer_small_by_orbit(p, d, k):
    from ifixity.permcore import conjugacy_orbit

    G = affine_group(p, d)
    assert G.order == fam.agl_order(p, d)
    t = affine_involution(p, d, k)
    assert t in G
    assert fam.affine_centralizer_order(p, d, k) * len(conjugacy_orbit(G, t)) == G.order


def test_affine_examples():
    assert fam.affine_shape(3, 2, 1) == fam.CycleShape(3, 3, 9)
    assert fam.affine_shape(5, 1, 1) == fam.CycleShape(2, 1, 5)
    assert fam.affine_shape(2, 4, 1) == fam.CycleShape(4, 8, 16)
    assert fam.affine_centralizer_order(3, 2, 1) == 12
    assert fam.affine_centralizer_order(5, 1, 1) == 4
    assert fam.affine_centralizer_order(2, 4, 1) == 2**8 * 6
    assert fam.agl_order(3, 2) == 432
    with pytest.raises(DomainError):
        fam.affine_shape(2, 3, 2)
    with pytest.raises(DomainError):
        fam.affine_shape(3, 2, 3)


@pytest.mark.parametrize("p,d", [(2, 3), (2, 4), (3, 2), (3, 3), (5, 2), (2, 5)])
def test_agl_parity(p, d):
    G = affine_group(p, d)
    assert fam.agl_in_alternating(p, d) == all(g.sign() == 1 for g in G.generators)


def brute_affine_d1(p):
    """Fixed cosets of AGL_1(p) & A_p under the best involution, counted via H_0 involutions."""
    H = build_group([Perm((x + 1) % p for x in range(p))] + [Perm((x * a) % p for x in range(p))
                                                              for a in range(2, p)], p)
    H0 = [g for g in H.elements() if g.sign() == 1]
    invs = [g for g in H0 if g.is_involution()]
    if not invs:
        return 0
    s = len(invs[0].cycles())
    size = factorial(p) // (factorial(s) * factorial(p - 2 * s) * 2**s)
    n = factorial(p) // 2 // len(H0)
    assert (len(invs) * n) % size == 0
    return len(invs) * n // size


@pytest.mark.parametrize("p", [5, 7, 11, 13, 17, 19, 23, 29, 31, 37])
def test_affine_d1_matches_h0_count(p):
    r = fam.affine_ifix_d1(p)
    assert r.value == brute_affine_d1(p)
    assert r.n == factorial(p - 2)


def test_affine_d1_examples():
    r = fam.affine_ifix_d1(5)
    assert (r.value, r.n, r.kind) == (2, 6, EXACT)
    r = fam.affine_ifix_d1(13)
    assert (r.value, r.n, r.kind) == (3840, factorial(11), EXACT)
    assert r.verdicts["4/9"]
    assert fam.affine_ifix_d1(7).kind == ZERO_ODD_ORDER
    assert fam.affine_ifix_d1(7).value == 0
    for bad in (3, 4, 9):
        with pytest.raises(DomainError):
            fam.affine_ifix_d1(bad)


PRIMES_TO_500 = [p for p in range(5, 501) if fam.is_prime(p)]


@pytest.mark.parametrize("p", PRIMES_TO_500)
def test_affine_d1_bounds(p):
    r = fam.affine_ifix_d1(p)
    n = factorial(p - 2)
    if p % 4 == 3:
        assert (r.value, r.kind) == (0, ZERO_ODD_ORDER)
        return
    assert r.value**2 <= n
    assert r.details["at_most_sqrt_n"]
    if p >= 13:
        assert r.value**9 > n**4


def test_affine_d2_explicit_case():
    r = fam.classify(fam.Affine(3, 2))
    assert (r.value, r.n, r.kind) == (8, 840, EXACT)


@pytest.mark.parametrize("p,d", [(2, 3), (2, 4), (5, 2)])
def test_affine_d2_cases_exceed_threshold(p, d):
    r = fam.affine_report(p, d)
    assert r.kind == EXACT and r.verdicts["4/9"]


def test_affine_scan_agrees_with_bruteforce():
    """The H_0 scan and the coset route agree where both are feasible."""
    via_scan = fam._affine_scan(2, 3, factorial(8) // 2 // fam.agl_order(2, 3), "scan")
    via_brute = fam.affine_report(2, 3)
    assert (via_scan.value, via_scan.n) == (via_brute.value, via_brute.n)


def test_affine_large_is_lower_bound():
    r = fam.affine_report(7, 3)
    assert r.kind == LOWER_BOUND and r.verdicts["4/9"]


# --- product type ---------------------------------------------------------------------

PRODUCT_CASES = [(k, r) for k in range(5, 12) for r in range(2, 4) if k**r <= 125]


@pytest.mark.parametrize("k,r", PRODUCT_CASES)
def test_product_shape_matches_brute_force(k, r):
    t = Perm.from_cycles(list(T12), k)
    ident = Perm.identity(k)
    x = product_action_perm(k, r, [t] + [ident] * (r - 1))
    shape = fam.product_shape(k, r)
    assert x.is_involution()
    assert (len(x.cycles()), x.fixed_points()) == (shape.transpositions, shape.fixed)


@pytest.mark.parametrize("k,r", [(k, r) for k in range(5, 12) for r in (2, 3)])
def test_wreath_parity_matches_generators(k, r):
    ident = Perm.identity(k)
    tr = Perm.from_cycles([(0, 1)], k)
    coord = product_action_perm(k, r, [tr] + [ident] * (r - 1))
    # swap of the first two coordinates
    images = []
    for pt in itertools.product(range(k), repeat=r):
        q = (pt[1], pt[0]) + pt[2:]
        images.append(sum(v * k ** (r - 1 - i) for i, v in enumerate(q)))
    swap = Perm(images)
    assert fam.wreath_in_alternating(k, r) == (coord.sign() == 1 and swap.sign() == 1)


def test_product_examples():
    assert fam.product_shape(5, 2) == fam.CycleShape(10, 5, 25)
    assert fam.product_shape(6, 2) == fam.CycleShape(12, 12, 36)
    assert fam.product_shape(5, 3) == fam.CycleShape(50, 25, 125)
    with pytest.raises(DomainError):
        fam.product_shape(4, 2)
    assert fam.product_report(7, 2).verdicts["4/9"]


# --- criteria -------------------------------------------------------------------------

def test_lb_criterion():
    assert fam.lb_criterion(0, 0)
    assert not fam.lb_criterion(1, 0)
    assert fam.lb_criterion(0.5, 0.2)


@given(st.floats(0, 1), st.floats(0, 1))
def test_lb_criterion_sign(a, b):
    assert fam.lb_criterion(a, b) == (5 - 5 * a - 9 * b > 0)


def test_order_criterion():
    assert fam.order_criterion(25, 1)
    assert fam.order_criterion(30, 2)
    assert not fam.order_criterion(26, 2)
    with pytest.raises(DomainError):
        fam.order_criterion(20, 2)


def test_diagonal_criterion():
    assert fam.diagonal_criterion(360, 2)
    assert fam.diagonal_criterion(60, 3)
    assert not fam.diagonal_criterion(60, 2)
    with pytest.raises(DomainError):
        fam.diagonal_criterion(59, 2)


def test_almost_simple_criterion():
    assert fam.almost_simple_criterion(601, 601**5 - 1, standard=False)
    assert fam.almost_simple_criterion(630, factorial(36), standard=True)
    assert fam.almost_simple_criterion(100, 1, standard=True)
    with pytest.raises(DomainError):
        fam.almost_simple_criterion(600, 10, standard=False)
    with pytest.raises(DomainError):
        fam.almost_simple_criterion(601, 601**5, standard=False)


# --- classify -------------------------------------------------------------------------

def test_classify_examples():
    r = fam.classify(fam.Affine(13, 1))
    assert (r.value, r.kind, r.verdicts["4/9"]) == (3840, EXACT, True)
    r = fam.classify(fam.Intransitive(7, 2))
    assert (r.value, r.n, r.kind) == (5, 21, LOWER_BOUND)
    assert r.verdicts["1/2"]
    r = fam.classify(fam.DiagonalType(360, 2))
    assert (r.kind, r.criterion, r.value) == (CRITERION, True, None)
    r = fam.classify(fam.Imprimitive(3, 3))
    assert (r.value, r.n) == (20, 280)


def test_classify_odd_order_table():
    for group, _, h0, _, _ in fam.ODD_ORDER_TABLE:
        r = fam.classify(fam.Sporadic(group, h0))
        assert (r.value, r.kind) == (0, ZERO_ODD_ORDER)
    assert fam.classify(fam.Sporadic("M23", "23:11")).n == 40320
    assert fam.odd_order_lookup("J1", "L2(11)") is None


def test_odd_order_table_orders_are_odd_and_divide():
    for _, order_t, _, order_h, _ in fam.ODD_ORDER_TABLE:
        assert order_h % 2 == 1 and order_t % order_h == 0


def test_classify_sporadic_chartab():
    r = fam.classify(fam.Sporadic("J1", "19:6"))
    assert (r.value, r.n, r.kind) == (20, 1540, EXACT)
    with pytest.raises(LookupError):
        fam.classify(fam.Sporadic("J2", "A5"))


def test_classify_almost_simple():
    r = fam.classify(fam.AlmostSimple(9, 1512, standard=False))
    assert r.kind == LOWER_BOUND and r.n == 120
    r = fam.classify(fam.AlmostSimple(7, 21, standard=False))
    assert (r.value, r.kind) == (0, ZERO_ODD_ORDER)
    with pytest.raises(DomainError):
        fam.classify(fam.AlmostSimple(7, 11, standard=False))


ALT_ROWS = [("A5_S3", 5), ("A5_D10", 5), ("A6_E9-4", 6), ("A6_A5", 6), ("A6_D10", 6), ("A6_S4", 6),
            ("A6_D8", 6), ("A7_L2-7", 7), ("A9_AGL2-3", 9), ("A9_L2-8-3", 9)]


@pytest.mark.parametrize("name,m", ALT_ROWS)
def test_classify_explicit_agrees_with_bruteforce(name, m):
    _, h = bundled_generators(name)
    T = alternating_group(m)
    spec = fam.Explicit(tuple(T.generators), tuple(h), name)
    a = fam.classify(spec)
    b = ifix_bruteforce(T, h)
    assert (a.value, a.n, a.kind) == (b.value, b.n, b.kind)
