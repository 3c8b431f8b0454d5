import itertools

import pytest
from hypothesis import given, settings, strategies as st

from ifixity.groups import alternating_group, affine_generators, bundled_generators, even_part, symmetric_group
from ifixity.permcore import (BRUTE_FORCE_BOUND, InconsistencyError, MembershipError, Perm, PermParseError,
                              TooLargeError, build_group, centralizer, centralizer_order, conjugacy_orbit,
                              coset_action, format_generator_file, ifix_bruteforce, involution_classes,
                              parse_perm, read_generator_file)
from ifixity.report import EXACT, ZERO_ODD_ORDER


def closure(gens, degree):
    """All products of the generators, by breadth-first search on image tuples."""
    ident = tuple(range(degree))
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for g in frontier:
            for s in gens:
                h = tuple(s[g[i]] for i in range(degree))  # apply g then s
                if h not in seen:
                    seen.add(h)
                    nxt.append(h)
        frontier = nxt
    return seen


def perms(degree):
    return st.permutations(list(range(degree))).map(tuple)


@st.composite
def small_groups(draw, max_degree=7):
    degree = draw(st.integers(2, max_degree))
    gens = draw(st.lists(perms(degree), min_size=1, max_size=3))
    return degree, gens


# --- parsing --------------------------------------------------------------------------

def test_parse_examples():
    t = parse_perm("(1,2)(3,4)", 5)
    assert t.images == (1, 0, 3, 2, 4)
    assert t.is_involution() and t.fixed_points() == 1
    assert parse_perm("()", 5).is_identity()
    c = parse_perm("(1,2,3)", 4)
    assert c.images == (1, 2, 0, 3)
    assert parse_perm("2,1,3", 3).images == (1, 0, 2)


@pytest.mark.parametrize("text,pos", [("(1,2", 4), ("(1,1)", 3), ("(1,9)", 3), ("(1,,2)", 3),
                                      ("(1,2)x", 5), ("(a)", 1), ("(1,2,)", 5)])
def test_parse_errors_report_position(text, pos):
    with pytest.raises(PermParseError) as exc:
        parse_perm(text, 5)
    assert exc.value.position == pos


def test_parse_image_list_errors():
    for text in ["1,2", "1,1,2", "1,2,7", "x,1,2"]:
        with pytest.raises(PermParseError):
            parse_perm(text, 3)


@given(perms(9))
def test_str_round_trip(images):
    p = Perm(images)
    assert parse_perm(str(p), 9) == p


def test_generator_file_round_trip(tmp_path):
    gens = [parse_perm("(1,2,3,4,5)", 5), parse_perm("(1,2)(3,4)", 5)]
    path = tmp_path / "g.txt"
    path.write_text(format_generator_file(5, gens, ["a comment"]))
    assert read_generator_file(path) == (5, gens)


def test_generator_file_errors(tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text("(1,2)\n")
    with pytest.raises(PermParseError):
        read_generator_file(path)
    path.write_text("degree 3\n(1,4)\n")
    with pytest.raises(PermParseError, match=":2:"):
        read_generator_file(path)


# --- groups ---------------------------------------------------------------------------

def test_build_group_examples():
    assert alternating_group(5).order == 60
    assert build_group([parse_perm("(1,2)(3,4)", 5)]).order == 2
    agl = build_group([parse_perm("(1,2,3,4,5)", 5), parse_perm("(2,3,5,4)", 5)])
    assert agl.order == 20
    trivial = build_group([], 4)
    assert trivial.order == 1 and list(trivial.elements()) == [Perm.identity(4)]


@pytest.mark.parametrize("m", range(3, 10))
def test_alternating_and_symmetric_orders(m):
    from math import factorial
    assert alternating_group(m).order == factorial(m) // 2
    assert symmetric_group(m).order == factorial(m)


@settings(max_examples=60)
@given(small_groups())
def test_order_elements_and_membership_match_closure(data):
    degree, gens = data
    G = build_group([Perm(g) for g in gens], degree)
    elems = closure(gens, degree)
    assert G.order == len(elems)
    listed = list(G.elements_raw())
    assert len(listed) == len(set(listed)) and set(listed) == elems
    for p in itertools.islice(itertools.permutations(range(degree)), 200):
        assert (Perm(p) in G) == (p in elems)


@settings(max_examples=40)
@given(small_groups(6), st.data())
def test_centralizer_matches_brute_force(data, draw):
    degree, gens = data
    G = build_group([Perm(g) for g in gens], degree)
    elems = sorted(closure(gens, degree))
    x = Perm(draw.draw(st.sampled_from(elems)))
    C = centralizer(G, x)
    brute = {g for g in elems if Perm(g) * x == x * Perm(g)}
    assert C.order == len(brute) == centralizer_order(G, x)
    assert set(C.elements_raw()) == brute


def test_centralizer_rejects_non_members():
    with pytest.raises(MembershipError):
        centralizer(alternating_group(5), parse_perm("(1,2)", 5))


@pytest.mark.parametrize("p,d,k", [(3, 2, 1), (3, 2, 2), (2, 4, 1), (2, 4, 2), (5, 2, 1)])
def test_centralizer_in_affine_groups(p, d, k):
    from ifixity.families import affine_centralizer_order
    from ifixity.groups import affine_group, affine_involution

    G = affine_group(p, d)
    t = affine_involution(p, d, k)
    assert centralizer(G, t).order == centralizer_order(G, t) == affine_centralizer_order(p, d, k)


def test_involution_classes_examples():
    a5 = involution_classes(alternating_group(5))
    assert [(c.class_size, c.fixed_points_natural_action) for c in a5] == [(15, 1)]
    a8 = involution_classes(alternating_group(8))
    assert sorted(c.class_size for c in a8) == [105, 210]
    assert involution_classes(build_group([], 5)) == []


def test_involution_classes_bound():
    with pytest.raises(TooLargeError):
        involution_classes(alternating_group(8), bound=1000)
    reps = [parse_perm("(1,2)(3,4)", 8)]
    out = involution_classes(alternating_group(8), bound=BRUTE_FORCE_BOUND, reps=reps)
    assert [c.class_size for c in out] == [210]


@settings(max_examples=30)
@given(small_groups(6))
def test_involution_classes_partition_the_involutions(data):
    degree, gens = data
    G = build_group([Perm(g) for g in gens], degree)
    invs = {g for g in closure(gens, degree) if g != tuple(range(degree)) and all(g[g[i]] == i for i in range(degree))}
    classes = involution_classes(G)
    assert sum(c.class_size for c in classes) == len(invs)
    for c in classes:
        orbit = conjugacy_orbit(G, c.rep)
        assert len(orbit) == c.class_size and orbit <= invs


# --- coset actions and ifix -----------------------------------------------------------

def test_coset_action_examples():
    A5 = alternating_group(5)
    img, space = coset_action(A5, [parse_perm("(1,2,3)", 5), parse_perm("(2,3,4)", 5)])
    assert img.degree == 5 and img.order == 60
    img, _ = coset_action(A5, [parse_perm("(1,2,3,4,5)", 5), parse_perm("(2,5)(3,4)", 5)])
    assert img.degree == 6 and img.order == 60 and img.is_transitive()
    _, gens = bundled_generators("A9_AGL2-3")
    img, _ = coset_action(alternating_group(9), gens)
    assert img.degree == 840


def test_coset_action_errors():
    A5 = alternating_group(5)
    with pytest.raises(MembershipError):
        coset_action(A5, [parse_perm("(1,2)", 5)])
    with pytest.raises(TooLargeError):
        coset_action(A5, [parse_perm("(1,2)(3,4)", 5)], bound=10)


def test_ifix_natural_a5():
    r = ifix_bruteforce(alternating_group(5), [parse_perm("(1,2,3)", 5), parse_perm("(2,3,4)", 5)])
    assert (r.value, r.n, r.kind) == (1, 5, EXACT)


def test_ifix_examples():
    _, gens = bundled_generators("A6_E9-4")
    r = ifix_bruteforce(alternating_group(6), gens)
    assert (r.value, r.n) == (2, 10)
    r = ifix_bruteforce(alternating_group(9), even_part(affine_generators(3, 2)))
    assert (r.value, r.n) == (8, 840)


def test_ifix_odd_order_stabilizer_is_zero():
    r = ifix_bruteforce(alternating_group(7), [parse_perm("(1,2,3,4,5,6,7)", 7)])
    assert (r.value, r.n, r.kind) == (0, 360, ZERO_ODD_ORDER)


@pytest.mark.parametrize("m", [5, 6, 7])
def test_ifix_matches_direct_fixed_coset_count(m):
    """Fixed cosets counted by hand from the element list of A_m and H."""
    A = alternating_group(m)
    H_gens = [parse_perm("(1,2)(3,4)", m), parse_perm("(1,3)(2,4)", m), parse_perm("(1,2,3)", m)]
    H = build_group(H_gens, m)
    hset = set(H.elements_raw())
    elems = list(A.elements_raw())
    # right cosets H g as frozensets
    cosets = {frozenset(tuple(g[h[i]] for i in range(m)) for h in hset) for g in elems}
    best = 0
    for t in elems:
        if t == tuple(range(m)) or any(t[t[i]] != i for i in range(m)):
            continue
        fixed = sum(1 for c in cosets
                    if frozenset(tuple(t[x[i]] for i in range(m)) for x in c) == c)
        best = max(best, fixed)
    r = ifix_bruteforce(A, H_gens)
    assert r.n == len(cosets)
    assert r.value == best


def test_ifix_degree_266_uses_classes_meeting_h0():
    degree, gens = bundled_generators("J1")
    J = build_group(gens, degree)
    _, h = bundled_generators("J1_L2-11")
    r = ifix_bruteforce(J, h, bound=10**5)
    assert (r.value, r.n) == (10, 266)
    assert r.details["class_source"] == "classes meeting H_0"


def test_inconsistency_error_is_runtime():
    assert issubclass(InconsistencyError, RuntimeError)
