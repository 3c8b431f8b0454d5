"""Concrete permutation groups used by the families and the tests."""

from __future__ import annotations

import itertools
from importlib import resources
from typing import Sequence

from ifixity.permcore import Perm, PermGroup, build_group, read_generator_file


def symmetric_group(m: int) -> PermGroup:
    if m < 2:
        return build_group([], max(m, 1))
    gens = [Perm.from_cycles([tuple(range(m))], m), Perm.from_cycles([(0, 1)], m)]
    return build_group(gens)


def alternating_group(m: int) -> PermGroup:
    if m < 3:
        return build_group([], max(m, 1))
    if m == 3:
        return build_group([Perm.from_cycles([(0, 1, 2)], 3)])
    # (1..m) for m odd, (2..m) for m even, together with (1,2,3)
    long = tuple(range(m)) if m % 2 else tuple(range(1, m))
    return build_group([Perm.from_cycles([long], m), Perm.from_cycles([(0, 1, 2)], m)])


def even_part(gens: Sequence[Perm]) -> list[Perm]:
    """Schreier generators of <gens> & A_n, using the transversal {1, s} for an odd s."""
    odd = [g for g in gens if g.sign() < 0]
    if not odd:
        return list(gens)
    s = odd[0]
    s_inv = s.inverse()
    out = []
    for g in gens:
        if g.sign() > 0:
            out += [g, s * g * s_inv]
        else:
            out += [g * s_inv, s * g]
    ident = Perm.identity(s.degree)
    return [g for g in dict.fromkeys(out) if g != ident]


# --- affine groups ---------------------------------------------------------------

def vectors(p: int, d: int) -> list[tuple[int, ...]]:
    """F_p^d in a fixed order; point i of the affine action is vectors(p, d)[i]."""
    return list(itertools.product(range(p), repeat=d))


def _vec_index(p: int, v: Sequence[int]) -> int:
    out = 0
    for x in v:
        out = out * p + x
    return out


def affine_perm(p: int, matrix: Sequence[Sequence[int]], shift: Sequence[int]) -> Perm:
    """u -> u*matrix + shift on F_p^d (row vectors)."""
    d = len(shift)
    images = []
    for u in vectors(p, d):
        w = [(sum(u[i] * matrix[i][j] for i in range(d)) + shift[j]) % p for j in range(d)]
        images.append(_vec_index(p, w))
    return Perm(images)


def _elementary(d: int, i: int, j: int, p: int) -> list[list[int]]:
    m = [[int(a == b) for b in range(d)] for a in range(d)]
    m[i][j] = 1
    return m


def primitive_root(p: int) -> int:
    for g in range(2, p):
        if all(pow(g, (p - 1) // q, p) != 1 for q in _prime_factors(p - 1)):
            return g
    return 1


def _prime_factors(n: int) -> list[int]:
    out, q = [], 2
    while q * q <= n:
        if n % q == 0:
            out.append(q)
            while n % q == 0:
                n //= q
        q += 1
    if n > 1:
        out.append(n)
    return out


def affine_generators(p: int, d: int) -> list[Perm]:
    """Generators of AGL_d(p) acting on p^d points."""
    ident = [[int(a == b) for b in range(d)] for a in range(d)]
    zero = [0] * d
    e1 = [1] + [0] * (d - 1)
    gens = [affine_perm(p, ident, e1)]
    scal = [row[:] for row in ident]
    scal[0][0] = primitive_root(p)
    if p > 2:
        gens.append(affine_perm(p, scal, zero))
    if d > 1:
        cyc = [[int(b == (a + 1) % d) for b in range(d)] for a in range(d)]
        gens.append(affine_perm(p, cyc, zero))
        gens.append(affine_perm(p, _elementary(d, 0, 1, p), zero))
    return gens


def affine_group(p: int, d: int) -> PermGroup:
    return build_group(affine_generators(p, d))


def affine_involution(p: int, d: int, k: int) -> Perm:
    """t_k = (v, x_k): x_k = diag(-I_k, I_{d-k}) with v = e_1 for odd p;
    x_k = k swap blocks with v = 0 for p = 2."""
    m = [[0] * d for _ in range(d)]
    shift = [0] * d
    if p == 2:
        for b in range(k):
            m[2 * b][2 * b + 1] = 1
            m[2 * b + 1][2 * b] = 1
        for i in range(2 * k, d):
            m[i][i] = 1
    else:
        for i in range(d):
            m[i][i] = p - 1 if i < k else 1
        shift[0] = 1
    return affine_perm(p, m, shift)


# --- product action ---------------------------------------------------------------

def product_action_perm(k: int, r: int, coords: Sequence[Perm]) -> Perm:
    """(x_1, ..., x_r) acting coordinatewise on {0..k-1}^r."""
    images = []
    for pt in itertools.product(range(k), repeat=r):
        img = [coords[i].images[pt[i]] for i in range(r)]
        out = 0
        for x in img:
            out = out * k + x
        images.append(out)
    return Perm(images)


# --- bundled generator files --------------------------------------------------------

def bundled_generators(name: str) -> tuple[int, list[Perm]]:
    """Read ``data/gens/<name>.txt`` shipped with the package."""
    ref = resources.files("ifixity") / "data" / "gens" / f"{name}.txt"
    with resources.as_file(ref) as path:
        return read_generator_file(path)


def bundled_names() -> list[str]:
    folder = resources.files("ifixity") / "data" / "gens"
    return sorted(p.name[:-4] for p in folder.iterdir() if p.name.endswith(".txt"))
