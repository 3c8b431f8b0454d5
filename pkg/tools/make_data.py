"""Regenerate the bundled generator files under src/ifixity/data/gens.

Every group is built from an explicit construction below and its order is
checked before the file is written. Run from the repository root:

    python tools/make_data.py
"""

from __future__ import annotations

import random
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(ROOT / "src"))

from ifixity.groups import alternating_group, affine_generators, even_part  # noqa: E402
from ifixity.permcore import (Perm, build_group, coset_action,  # noqa: E402
                              format_generator_file, parse_perm)

OUT = ROOT / "src" / "ifixity" / "data" / "gens"


def greedy_generators(elements, order, seed_gens=()):
    gens = list(seed_gens)
    current = build_group(gens, elements[0].degree).order if gens else 1
    for g in elements:
        if current == order:
            break
        trial = build_group(gens + [g])
        if trial.order > current:
            gens.append(g)
            current = trial.order
    if current != order:
        raise RuntimeError(f"reached order {current}, wanted {order}")
    return gens


def write(name, degree, gens, order, comments):
    G = build_group(gens, degree)
    if G.order != order:
        raise RuntimeError(f"{name}: order {G.order}, expected {order}")
    text = format_generator_file(degree, gens, [*comments, f"order {order}"])
    (OUT / f"{name}.txt").write_text(text)
    print(f"{name}: degree {degree}, order {order}, {len(gens)} generators")
    return G


def P(text, degree):
    return parse_perm(text, degree)


# --- finite fields of order 8 and 9 for the projective line ------------------------

def gf8():
    """F_8 = F_2[w]/(w^3 + w + 1), elements as bit masks."""
    def mul(a, b):
        r = 0
        for i in range(3):
            if b >> i & 1:
                r ^= a << i
        for i in (4, 3):
            if r >> i & 1:
                r ^= 0b1011 << (i - 3)
        return r
    return list(range(8)), (lambda a, b: a ^ b), mul


def gf9():
    """F_9 = F_3[i]/(i^2 + 1), a + b i encoded as 3a + b."""
    elems = list(range(9))

    def add(x, y):
        return 3 * ((x // 3 + y // 3) % 3) + (x % 3 + y % 3) % 3

    def mul(x, y):
        a, b, c, d = x // 3, x % 3, y // 3, y % 3
        return 3 * ((a * c - b * d) % 3) + (a * d + b * c) % 3
    return elems, add, mul


def projective_line_maps(field, maps):
    """Permutations of F_q + {inf} (inf is the last point) from Mobius-type maps."""
    elems, add, mul = field
    q = len(elems)
    inv = {x: y for x in elems for y in elems if mul(x, y) == 1}
    perms = []
    for (a, b, c, d, frob) in maps:
        images = []
        for x in elems + [None]:
            if x is None:
                images.append(q if c == 0 else mul(a, inv[c]))
                continue
            y = x
            for _ in range(frob):
                y = mul(mul(y, y), y) if q == 9 else mul(y, y)
            num = add(mul(a, y), b)
            den = add(mul(c, y), d)
            images.append(q if den == 0 else mul(num, inv[den]))
        perms.append(Perm(images))
    return perms


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    src = "constructed by tools/make_data.py"

    # A_5
    write("A5_S3", 5, [P("(1,2,3)", 5), P("(1,2)(4,5)", 5)], 6,
          ["S_3 = (S_3 x S_2) & A_5, stabilizer of a 2-subset", src])
    write("A5_D10", 5, [P("(1,2,3,4,5)", 5), P("(2,5)(3,4)", 5)], 10,
          ["D_10 = AGL_1(5) & A_5", src])
    write("A5_A4", 5, [P("(1,2,3)", 5), P("(2,3,4)", 5)], 12,
          ["A_4, point stabilizer of the natural action", src])

    # A_6
    A6 = alternating_group(6)
    P9 = build_group([P("(1,2,3)", 6), P("(4,5,6)", 6)])
    norm = [g for g in A6.elements()
            if all(P9.__contains__(x.conjugate(g)) for x in P9.generators)]
    write("A6_E9-4", 6, greedy_generators(sorted(norm), 36), 36,
          ["3^2:4 = normalizer in A_6 of <(1,2,3),(4,5,6)>", src])
    write("A6_A5", 6, [P("(1,2,3,4,5)", 6), P("(1,2,3)", 6)], 60,
          ["A_5, point stabilizer of the natural action", src])
    write("A6_D10", 6, [P("(1,2,3,4,5)", 6), P("(2,5)(3,4)", 6)], 10,
          ["D_10 = normalizer in A_6 of a Sylow 5-subgroup", src])
    write("A6_S4", 6, [P("(1,2,3,4)(5,6)", 6), P("(1,2)(5,6)", 6)], 24,
          ["S_4 = (S_4 x S_2) & A_6, stabilizer of a 2-subset", src])
    write("A6_D8", 6, [P("(1,2,3,4)(5,6)", 6), P("(1,3)(5,6)", 6)], 8,
          ["D_8, a Sylow 2-subgroup of A_6", src])

    # A_7 > L_2(7): stabilizer of the Fano plane with lines {i, i+1, i+3} mod 7
    lines = {frozenset({i % 7, (i + 1) % 7, (i + 3) % 7}) for i in range(7)}
    fano = [g for g in alternating_group(7).elements()
            if {frozenset(g(x) for x in ln) for ln in lines} == lines]
    write("A7_L2-7", 7, greedy_generators(sorted(fano), 168), 168,
          ["L_2(7) = L_3(2), stabilizer of a Fano plane on 7 points", src])

    # A_9 > AGL_2(3) & A_9 and L_2(8):3
    agl = even_part(affine_generators(3, 2))
    write("A9_AGL2-3", 9, agl, 216,
          ["3^2:SL_2(3) = AGL_2(3) & A_9, points of F_3^2 in lexicographic order", src])
    w = 0b010
    pgaml = projective_line_maps(gf8(), [(1, 1, 0, 1, 0), (w, 0, 0, 1, 0), (0, 1, 1, 0, 0),
                                         (1, 0, 0, 1, 1)])
    write("A9_L2-8-3", 9, pgaml, 1512,
          ["L_2(8):3 = PGammaL_2(8) on the projective line F_8 + {inf}", src])

    # A_10 > M_10: PSL_2(9) extended by x -> z x^3 with z a non-square
    z = 3 * 1 + 1  # 1 + i generates F_9^*
    z2 = gf9()[2](z, z)
    m10 = projective_line_maps(gf9(), [(1, 1, 0, 1, 0), (z2, 0, 0, 1, 0), (0, 2, 1, 0, 0),
                                       (z, 0, 0, 1, 1)])
    write("A10_M10", 10, m10, 720,
          ["M_10 on the projective line F_9 + {inf}", src])

    # Mathieu groups
    m11 = [P("(1,2,3,4,5,6,7,8,9,10,11)", 11), P("(3,7,11,8)(4,10,5,6)", 11)]
    write("A11_M11", 11, m11, 7920, ["M_11 in its natural action of degree 11", src])
    write("M11", 11, m11, 7920, ["M_11, minimal degree 11", src])
    m12 = [P("(1,2,3,4,5,6,7,8,9,10,11)", 12), P("(3,7,11,8)(4,10,5,6)", 12),
           P("(1,12)(2,11)(3,6)(4,8)(5,9)(7,10)", 12)]
    write("M12", 12, m12, 95040, ["M_12, minimal degree 12", src])

    make_j1(src)


def make_j1(src):
    """J_1 from Janko's 7x7 matrices over F_11, moved to degree 266."""
    p = 11
    Y = [[1 if j == (i + 1) % 7 else 0 for j in range(7)] for i in range(7)]
    Z = [[-3, 2, -1, -1, -3, -1, -3], [-2, 1, 1, 3, 1, 3, 3], [-1, -1, -3, -1, -3, -3, 2],
         [-1, -3, -1, -3, -3, 2, -1], [-3, -1, -3, -3, 2, -1, -1], [1, 3, 3, -2, 1, 1, 3],
         [3, 3, -2, 1, 1, 3, 1]]
    Z = [[x % p for x in row] for row in Z]

    def vm(v, M):
        return tuple(sum(v[i] * M[i][j] for i in range(7)) % p for j in range(7))

    def normed(v):
        for x in v:
            if x:
                inv = pow(x, -1, p)
                return tuple(y * inv % p for y in v)

    start = normed((1, 2, 4, 0, 0, 0, 0))
    orbit, index = [start], {start: 0}
    i = 0
    while i < len(orbit):
        for M in (Y, Z):
            w = normed(vm(orbit[i], M))
            if w not in index:
                index[w] = len(orbit)
                orbit.append(w)
        i += 1
    gens = [Perm(index[normed(vm(v, M))] for v in orbit) for M in (Y, Z)]
    J = build_group(gens)
    assert J.order == 175560, J.order

    rng = random.Random(1)

    def random_element():
        g = Perm.identity(J.degree)
        for _ in range(40):
            g = g * rng.choice(gens)
        return g

    def element_of_order(q):
        while True:
            g = random_element()
            o = g.order()
            if o % q == 0:
                return g ** (o // q)

    x = element_of_order(11)
    while True:
        t = element_of_order(2)
        if build_group([x, t]).order == 660:
            break
    image, _ = coset_action(J, [x, t])
    j266 = list(image.generators)
    J = write("J1", 266, j266, 175560,
              ["J_1 on the cosets of L_2(11), from Janko's 7x7 matrices over F_11", src])

    L = greedy_generators(sorted(g for g in J.elements() if g(0) == 0), 660)
    write("J1_L2-11", 266, L, 660, ["L_2(11), the stabilizer of point 1", src])

    elements = list(J.elements())

    def normalizer(gs):
        S = build_group(gs)
        return sorted(g for g in elements if all(S.__contains__(s.conjugate(g)) for s in gs))

    def find(order):
        for g in elements:
            if g.order() == order:
                return g

    for q, name, size, desc in [(11, "J1_11-10", 110, "11:10"), (19, "J1_19-6", 114, "19:6"),
                                (7, "J1_7-6", 42, "7:6")]:
        N = normalizer([find(q)])
        write(name, 266, greedy_generators(N, size), size,
              [f"{desc} = normalizer of a Sylow {q}-subgroup", src])

    t = find(2)
    cent = [g for g in elements if t * g == g * t]
    invs = [g for g in cent if g.is_involution() and g != t]
    a = invs[0]
    b = next(g for g in invs if g * a == a * g and g not in (a, a * t))
    N = normalizer([t, a, b])
    write("J1_E8-7-3", 266, greedy_generators(N, 168), 168,
          ["2^3:7:3 = normalizer of a Sylow 2-subgroup", src])


if __name__ == "__main__":
    main()
