"""Permutation groups: Schreier-Sims, involution classes, coset actions, and
brute-force involution fixity.

Permutations act on the right on points 0..degree-1: ``(p * q)(x) = q(p(x))``.
External text uses 1-based cycle notation.
"""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from pathlib import Path
from typing import Iterable, Iterator, Sequence

from ifixity.report import EXACT, ZERO_ODD_ORDER, FixityReport

BRUTE_FORCE_BOUND = 10**7
COSET_BOUND = 10**6


class PermParseError(ValueError):
    def __init__(self, message: str, position: int | None = None):
        self.position = position
        if position is not None:
            message = f"{message} at position {position}"
        super().__init__(message)


class MembershipError(ValueError):
    """A permutation claimed to lie in a group does not."""


class TooLargeError(ValueError):
    """A brute-force computation would exceed its configured bound."""


class InconsistencyError(RuntimeError):
    """Two independent evaluation paths disagreed."""


# --- raw tuple helpers -------------------------------------------------------

def _mul(p: tuple, q: tuple) -> tuple:
    return tuple(map(q.__getitem__, p))


def _inv(p: tuple) -> tuple:
    out = [0] * len(p)
    for i, x in enumerate(p):
        out[x] = i
    return tuple(out)


def _is_involution(p: tuple) -> bool:
    moved = False
    for i, x in enumerate(p):
        if x != i:
            if p[x] != i:
                return False
            moved = True
    return moved


def _first_moved(p: tuple) -> int | None:
    for i, x in enumerate(p):
        if x != i:
            return i
    return None


class Perm:
    """A permutation of {0, ..., degree-1}."""

    __slots__ = ("images",)

    def __init__(self, images: Iterable[int]):
        images = tuple(images)
        if sorted(images) != list(range(len(images))):
            raise ValueError("images do not form a bijection")
        self.images = images

    @classmethod
    def _raw(cls, images: tuple) -> "Perm":
        p = object.__new__(cls)
        p.images = images
        return p

    @classmethod
    def identity(cls, degree: int) -> "Perm":
        return cls._raw(tuple(range(degree)))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], degree: int) -> "Perm":
        """Build from 0-based cycles."""
        images = list(range(degree))
        for cyc in cycles:
            for a, b in zip(cyc, list(cyc[1:]) + [cyc[0]]):
                images[a] = b
        return cls(images)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, x: int) -> int:
        return self.images[x]

    def __mul__(self, other: "Perm") -> "Perm":
        return Perm._raw(_mul(self.images, other.images))

    def __pow__(self, e: int) -> "Perm":
        base = self if e >= 0 else self.inverse()
        e = abs(e)
        result = Perm.identity(self.degree)
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def inverse(self) -> "Perm":
        return Perm._raw(_inv(self.images))

    def conjugate(self, g: "Perm") -> "Perm":
        """g^-1 * self * g."""
        return g.inverse() * self * g

    def __eq__(self, other) -> bool:
        return isinstance(other, Perm) and self.images == other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def __lt__(self, other: "Perm") -> bool:
        return self.images < other.images

    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self.images))

    def is_involution(self) -> bool:
        return _is_involution(self.images)

    def fixed_points(self) -> int:
        return sum(1 for i, x in enumerate(self.images) if i == x)

    def cycles(self) -> list[tuple[int, ...]]:
        seen = [False] * self.degree
        out = []
        for i in range(self.degree):
            if seen[i] or self.images[i] == i:
                continue
            cyc = [i]
            seen[i] = True
            j = self.images[i]
            while j != i:
                seen[j] = True
                cyc.append(j)
                j = self.images[j]
            out.append(tuple(cyc))
        return out

    def cycle_type(self) -> tuple[int, ...]:
        lengths = [len(c) for c in self.cycles()]
        lengths += [1] * self.fixed_points()
        return tuple(sorted(lengths, reverse=True))

    def order(self) -> int:
        from math import lcm

        out = 1
        for c in self.cycles():
            out = lcm(out, len(c))
        return out

    def sign(self) -> int:
        return -1 if sum(len(c) - 1 for c in self.cycles()) % 2 else 1

    def __str__(self) -> str:
        cyc = self.cycles()
        if not cyc:
            return "()"
        return "".join("(" + ",".join(str(x + 1) for x in c) + ")" for c in cyc)

    def __repr__(self) -> str:
        return f"Perm({self}, degree={self.degree})"


def parse_perm(text: str, degree: int) -> Perm:
    """Parse 1-based cycle notation or a comma separated image list."""
    s = text.strip()
    if not s:
        raise PermParseError("empty permutation text", 0)
    if s[0] != "(":
        return _parse_image_list(text, degree)
    images = list(range(degree))
    used: set[int] = set()
    pos = 0
    n = len(text)
    while True:
        while pos < n and text[pos].isspace():
            pos += 1
        if pos == n:
            break
        if text[pos] != "(":
            raise PermParseError(f"expected '(' but found {text[pos]!r}", pos)
        pos += 1
        cycle: list[int] = []
        expect_point = True
        while True:
            while pos < n and text[pos].isspace():
                pos += 1
            if pos == n:
                raise PermParseError("unterminated cycle", pos)
            ch = text[pos]
            if ch == ")":
                if cycle and expect_point:
                    raise PermParseError("trailing comma in cycle", pos)
                pos += 1
                break
            if expect_point:
                m = re.match(r"\d+", text[pos:])
                if not m:
                    raise PermParseError(f"expected a point but found {ch!r}", pos)
                point = int(m.group())
                if not 1 <= point <= degree:
                    raise PermParseError(f"point {point} out of range 1..{degree}", pos)
                if point - 1 in used:
                    raise PermParseError(f"repeated point {point}", pos)
                used.add(point - 1)
                cycle.append(point - 1)
                pos += m.end()
                expect_point = False
            else:
                if ch != ",":
                    raise PermParseError(f"expected ',' or ')' but found {ch!r}", pos)
                pos += 1
                expect_point = True
        for a, b in zip(cycle, cycle[1:] + cycle[:1]):
            images[a] = b
    return Perm._raw(tuple(images))


def _parse_image_list(text: str, degree: int) -> Perm:
    images = []
    pos = 0
    for part in text.split(","):
        stripped = part.strip()
        if not stripped.isdigit():
            raise PermParseError(f"bad image {stripped!r}", pos)
        v = int(stripped)
        if not 1 <= v <= degree:
            raise PermParseError(f"point {v} out of range 1..{degree}", pos)
        images.append(v - 1)
        pos += len(part) + 1
    if len(images) != degree:
        raise PermParseError(f"expected {degree} images, got {len(images)}", None)
    if len(set(images)) != degree:
        raise PermParseError("repeated point in image list", None)
    return Perm._raw(tuple(images))


def read_generator_file(path: str | Path) -> tuple[int, list[Perm]]:
    """Read ``degree N`` followed by one permutation per line; ``#`` starts a comment."""
    degree = None
    gens = []
    for lineno, raw in enumerate(Path(path).read_text().splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if degree is None:
            m = re.fullmatch(r"degree\s+(\d+)", line)
            if not m:
                raise PermParseError(f"{path}:{lineno}: first line must be 'degree N'")
            degree = int(m.group(1))
            continue
        try:
            gens.append(parse_perm(line, degree))
        except PermParseError as exc:
            raise PermParseError(f"{path}:{lineno}: {exc}") from None
    if degree is None:
        raise PermParseError(f"{path}: missing 'degree N' line")
    return degree, gens


def format_generator_file(degree: int, gens: Sequence[Perm], comments: Sequence[str] = ()) -> str:
    lines = [f"# {c}" for c in comments]
    lines.append(f"degree {degree}")
    lines.extend(str(g) for g in gens)
    return "\n".join(lines) + "\n"


# --- stabilizer chains ---------------------------------------------------------

@dataclass
class _Level:
    point: int
    gens: list = field(default_factory=list)
    transversal: dict = field(default_factory=dict)  # point -> (u, u^-1)

    def rebuild(self, degree: int) -> None:
        ident = tuple(range(degree))
        trans = {self.point: (ident, ident)}
        queue = deque([self.point])
        while queue:
            x = queue.popleft()
            u = trans[x][0]
            for s in self.gens:
                y = s[x]
                if y not in trans:
                    w = _mul(u, s)
                    trans[y] = (w, _inv(w))
                    queue.append(y)
        self.transversal = trans


def _strip(levels: list[_Level], g: tuple, start: int = 0) -> tuple[tuple, int]:
    for i in range(start, len(levels)):
        lev = levels[i]
        beta = g[lev.point]
        entry = lev.transversal.get(beta)
        if entry is None:
            return g, i
        g = _mul(g, entry[1])
    return g, len(levels)


def _schreier_sims(gens: list[tuple], degree: int, prefix: Sequence[int] = ()) -> list[_Level]:
    """Deterministic Schreier-Sims; the base starts with ``prefix`` and new base
    points are smallest moved points."""
    ident = tuple(range(degree))
    gens = [g for g in gens if g != ident]
    levels: list[_Level] = [_Level(b) for b in dict.fromkeys(prefix)]
    for g in gens:
        if all(g[lev.point] == lev.point for lev in levels):
            levels.append(_Level(_first_moved(g)))
    for i, lev in enumerate(levels):
        lev.gens = [g for g in gens if all(g[levels[j].point] == levels[j].point for j in range(i))]
        lev.rebuild(degree)
    i = len(levels) - 1
    while i >= 0:
        lev = levels[i]
        restarted = False
        for beta, (u, _) in list(lev.transversal.items()):
            for s in lev.gens:
                us = _mul(u, s)
                v_inv = lev.transversal[us[lev.point]][1]
                h = _mul(us, v_inv)
                if h == ident:
                    continue
                h, j = _strip(levels, h, i + 1)
                if h == ident:
                    continue
                if j == len(levels):
                    levels.append(_Level(_first_moved(h)))
                for lvl in range(i + 1, j + 1):
                    levels[lvl].gens.append(h)
                    levels[lvl].rebuild(degree)
                i = j
                restarted = True
                break
            if restarted:
                break
        if not restarted:
            i -= 1
    return levels


class PermGroup:
    """Permutation group given by generators; stabilizer chain built on demand."""

    def __init__(self, gens: Sequence[Perm], degree: int | None = None):
        gens = list(gens)
        if degree is None:
            if not gens:
                raise ValueError("degree required for an empty generator list")
            degree = gens[0].degree
        for g in gens:
            if g.degree != degree:
                raise ValueError(f"generator of degree {g.degree} in a group of degree {degree}")
        self.degree = degree
        self.generators = tuple(gens)

    @cached_property
    def _levels(self) -> list[_Level]:
        return _schreier_sims([g.images for g in self.generators], self.degree)

    @property
    def base(self) -> list[int]:
        return [lev.point for lev in self._levels]

    @property
    def strong_generators(self) -> list[Perm]:
        seen = {}
        for lev in self._levels:
            for g in lev.gens:
                seen.setdefault(g, None)
        return [Perm._raw(g) for g in seen]

    @property
    def basic_orbit_lengths(self) -> list[int]:
        return [len(lev.transversal) for lev in self._levels]

    @cached_property
    def order(self) -> int:
        out = 1
        for k in self.basic_orbit_lengths:
            out *= k
        return out

    def __contains__(self, p: Perm) -> bool:
        if p.degree != self.degree:
            return False
        h, j = _strip(self._levels, p.images)
        return j == len(self._levels) and h == tuple(range(self.degree))

    def elements_raw(self) -> Iterator[tuple]:
        """All elements as image tuples, each exactly once."""
        levels = self._levels
        ident = tuple(range(self.degree))
        if not levels:
            yield ident
            return
        trans = [[entry[0] for entry in lev.transversal.values()] for lev in levels]
        last = len(levels) - 1

        # g = u_last * ... * u_0, with u_0 from the first level applied last
        def rec(depth: int, suffix: tuple):
            if depth == last:
                for u in trans[depth]:
                    yield _mul(u, suffix)
                return
            for u in trans[depth]:
                yield from rec(depth + 1, _mul(u, suffix))

        yield from rec(0, ident)

    def elements(self) -> Iterator[Perm]:
        for g in self.elements_raw():
            yield Perm._raw(g)

    def orbit(self, point: int) -> list[int]:
        seen = {point}
        out = [point]
        queue = deque([point])
        while queue:
            x = queue.popleft()
            for g in self.generators:
                y = g.images[x]
                if y not in seen:
                    seen.add(y)
                    out.append(y)
                    queue.append(y)
        return out

    def orbits(self) -> list[list[int]]:
        seen: set[int] = set()
        out = []
        for x in range(self.degree):
            if x not in seen:
                orb = self.orbit(x)
                seen.update(orb)
                out.append(sorted(orb))
        return out

    def is_transitive(self) -> bool:
        return len(self.orbit(0)) == self.degree

    def contains_group(self, gens: Iterable[Perm]) -> bool:
        return all(g in self for g in gens)

    def __repr__(self) -> str:
        return f"PermGroup(degree={self.degree}, ngens={len(self.generators)})"


def build_group(gens: Sequence[Perm], degree: int | None = None) -> PermGroup:
    """Group generated by ``gens`` with its stabilizer chain computed."""
    G = PermGroup(gens, degree)
    G.order  # noqa: B018 - force the chain
    return G


# --- conjugacy of involutions ---------------------------------------------------

def conjugacy_orbit(G: PermGroup, x: Perm, limit: int = BRUTE_FORCE_BOUND) -> frozenset[tuple]:
    """The G-conjugacy class of x, as a set of image tuples."""
    gens = [(g.images, _inv(g.images)) for g in G.generators]
    start = x.images
    seen = {start}
    queue = deque([start])
    while queue:
        y = queue.popleft()
        for g, gi in gens:
            z = _mul(_mul(gi, y), g)
            if z not in seen:
                seen.add(z)
                if len(seen) > limit:
                    raise TooLargeError(f"conjugacy class exceeds the bound {limit}")
                queue.append(z)
    return frozenset(seen)


@dataclass(frozen=True)
class InvolutionClassRep:
    rep: Perm
    class_size: int
    fixed_points_natural_action: int


@dataclass(frozen=True)
class _InvolutionClass:
    rep: tuple
    members: frozenset

    def public(self) -> InvolutionClassRep:
        rep = Perm._raw(self.rep)
        return InvolutionClassRep(rep, len(self.members), rep.fixed_points())


def _class_sort_key(c: _InvolutionClass):
    moved = sum(1 for i, x in enumerate(c.rep) if i != x)
    return (moved, c.rep)


def _partition_into_classes(G: PermGroup, involutions: Iterable[tuple]) -> list[_InvolutionClass]:
    remaining = set(involutions)
    classes = []
    while remaining:
        t = min(remaining)
        members = conjugacy_orbit(G, Perm._raw(t))
        remaining -= members
        classes.append(_InvolutionClass(min(members), members))
    classes.sort(key=_class_sort_key)
    return classes


def scan_involutions(G: PermGroup, bound: int = BRUTE_FORCE_BOUND) -> list[tuple]:
    if G.order > bound:
        raise TooLargeError(f"group order {G.order} exceeds the brute-force bound {bound}")
    return [g for g in G.elements_raw() if _is_involution(g)]


def _involution_classes(G: PermGroup, bound: int = BRUTE_FORCE_BOUND,
                        reps: Sequence[Perm] | None = None) -> tuple[list[_InvolutionClass], bool]:
    """Classes plus a completeness flag."""
    if reps is None:
        invs = scan_involutions(G, bound)
        classes = _partition_into_classes(G, invs)
        if sum(len(c.members) for c in classes) != len(invs):
            raise InconsistencyError("involution classes do not cover the element scan")
        return classes, True
    for r in reps:
        if not r.is_involution():
            raise ValueError(f"{r} is not an involution")
        if r not in G:
            raise MembershipError(f"{r} is not in the group")
    classes = []
    covered: set[tuple] = set()
    for r in reps:
        if r.images in covered:
            continue
        members = conjugacy_orbit(G, r, bound)
        covered |= members
        classes.append(_InvolutionClass(min(members), members))
    classes.sort(key=_class_sort_key)
    return classes, False


def involution_classes(G: PermGroup, bound: int = BRUTE_FORCE_BOUND,
                       reps: Sequence[Perm] | None = None) -> list[InvolutionClassRep]:
    """One entry per conjugacy class of involutions of G.

    Without ``reps`` every element is scanned, so the list is complete; this
    needs ``|G| <= bound``. With ``reps`` only the classes of the supplied
    involutions are returned.
    """
    classes, _ = _involution_classes(G, bound, reps)
    return [c.public() for c in classes]


def centralizer_order(G: PermGroup, x: Perm) -> int:
    """|C_G(x)| by orbit-stabilizer on the conjugation action."""
    return G.order // len(conjugacy_orbit(G, x))


def _centralizing_prefix(G: PermGroup, x: tuple) -> list[int]:
    """G's base with each point followed by the rest of its x-cycle; base
    points moved by x come first, which keeps wrong early choices shallow."""
    out: dict[int, None] = {}
    for b in sorted(G.base, key=lambda b: x[b] == b):
        y = b
        while y not in out:
            out[y] = None
            y = x[y]
    return list(out)


def centralizer(G: PermGroup, x: Perm) -> PermGroup:
    """C_G(x) by backtrack search over a stabilizer chain.

    The chain uses a base in which each base point is followed by its image
    under x. Once the images of the first base points are chosen, the element
    is known on every point fixed by the remaining stabilizer, and it must
    commute with x there. The stabilizers of C in the chain are found from the
    bottom up, with one search per orbit of the part already found.
    """
    if x not in G:
        raise MembershipError(f"{x} is not in the group")
    xs = x.images
    degree = G.degree
    levels = _schreier_sims([g.images for g in G.generators], degree, _centralizing_prefix(G, xs))
    depth = len(levels)
    ident = tuple(range(degree))
    # fixed[j]: points fixed by the stabilizer of the first j base points
    fixed = []
    for j in range(depth + 1):
        gens = levels[j].gens if j < depth else []
        fixed.append([y for y in range(degree) if all(g[y] == y for g in gens)])
    trans = [list(lev.transversal.items()) for lev in levels]

    def consistent(s: tuple, j: int) -> bool:
        for y in fixed[j]:
            xy = xs[y]
            if s[xy] != xs[s[y]] and xy in fixed_sets[j]:
                return False
        return True

    fixed_sets = [set(f) for f in fixed]

    def search(j: int, s: tuple) -> tuple | None:
        if j == depth:
            return s if _mul(xs, s) == _mul(s, xs) else None
        for _, (u, _) in trans[j]:
            s2 = _mul(u, s)
            if consistent(s2, j + 1):
                found = search(j + 1, s2)
                if found is not None:
                    return found
        return None

    found_gens: list[tuple] = []
    for i in range(depth - 1, -1, -1):
        b = levels[i].point
        known = [g for g in found_gens if all(g[levels[j].point] == levels[j].point for j in range(i))]
        orbit = _orbit_of(b, known)
        for gamma, (u, _) in trans[i]:
            if gamma in orbit or not consistent(u, i + 1):
                continue
            g = search(i + 1, u)
            if g is not None:
                found_gens.append(g)
                known.append(g)
                orbit = _orbit_of(b, known)
    if not found_gens:
        return build_group([], degree)
    return build_group([Perm._raw(g) for g in found_gens])


def _orbit_of(point: int, gens: Sequence[tuple]) -> set[int]:
    seen = {point}
    queue = deque([point])
    while queue:
        y = queue.popleft()
        for g in gens:
            z = g[y]
            if z not in seen:
                seen.add(z)
                queue.append(z)
    return seen


# --- coset actions ------------------------------------------------------------------

class CosetSpace:
    """Right cosets Hg of H in G, indexed by canonical representatives.

    The representative of Hg is the element x of Hg whose images of H's base
    points are lexicographically least; it is found greedily down H's chain.
    """

    def __init__(self, G: PermGroup, H: PermGroup, bound: int = COSET_BOUND):
        if H.degree != G.degree:
            raise ValueError("H and G have different degrees")
        for h in H.generators:
            if h not in G:
                raise MembershipError(f"generator {h} of H is not in G")
        if G.order % H.order:
            raise MembershipError("|H| does not divide |G|")
        index = G.order // H.order
        if index > bound:
            raise TooLargeError(f"index {index} exceeds the coset bound {bound}")
        self.G = G
        self.H = H
        self.index = index
        self._levels = [(lev.point, [(beta, entry[0]) for beta, entry in lev.transversal.items()])
                        for lev in H._levels]
        ident = tuple(range(G.degree))
        self.reps: list[tuple] = [self.canonical(ident)]
        self.lookup: dict[tuple, int] = {self.reps[0]: 0}
        gens = [g.images for g in G.generators]
        self._gen_images: list[list[int]] = [[0] * index for _ in gens]
        i = 0
        while i < len(self.reps):
            c = self.reps[i]
            for gi, g in enumerate(gens):
                key = self.canonical(_mul(c, g))
                j = self.lookup.get(key)
                if j is None:
                    j = len(self.reps)
                    self.reps.append(key)
                    self.lookup[key] = j
                self._gen_images[gi][i] = j
            i += 1
        if len(self.reps) != index:
            raise InconsistencyError(f"enumerated {len(self.reps)} cosets, expected {index}")

    def canonical(self, g: tuple) -> tuple:
        c = g
        for point, trans in self._levels:
            best_u, best_img = None, None
            for beta, u in trans:
                img = c[beta]
                if best_img is None or img < best_img:
                    best_img, best_u = img, u
            c = _mul(best_u, c)
        return c

    def act(self, g: Perm) -> Perm:
        """Image of g in the action on cosets."""
        gi = g.images
        return Perm._raw(tuple(self.lookup[self.canonical(_mul(c, gi))] for c in self.reps))

    def fixed_cosets(self, g: Perm) -> int:
        gi = g.images
        return sum(1 for i, c in enumerate(self.reps) if self.lookup[self.canonical(_mul(c, gi))] == i)

    def image_group(self) -> PermGroup:
        return PermGroup([Perm._raw(tuple(img)) for img in self._gen_images], self.index)


def coset_action(G: PermGroup, H_gens: Sequence[Perm], bound: int = COSET_BOUND
                 ) -> tuple[PermGroup, CosetSpace]:
    """Action of G on the right cosets of <H_gens>.

    Returns the image group (chain computed lazily) and the coset space, whose
    ``lookup`` maps canonical representatives to point indices.
    """
    H = build_group(list(H_gens), G.degree)
    space = CosetSpace(G, H, bound)
    return space.image_group(), space


# --- brute-force involution fixity ---------------------------------------------------

def ifix_bruteforce(T: PermGroup, H0_gens: Sequence[Perm], bound: int = BRUTE_FORCE_BOUND,
                    coset_bound: int = COSET_BOUND, label: str = "") -> FixityReport:
    """ifix(T) on the cosets of H_0 = <H0_gens>, evaluated two ways.

    Path 1 counts |t^T & H_0| over the involutions of H_0 and applies
    fix(t) = |t^T & H_0| / |t^T| * n. Path 2 counts the cosets fixed by t.
    Any disagreement raises ``InconsistencyError``.

    When |T| exceeds ``bound`` the T-classes are generated from the
    involutions of H_0; classes missing H_0 fix no coset, so ifix is still exact.
    """
    H0 = build_group(list(H0_gens), T.degree)
    for h in H0.generators:
        if h not in T:
            raise MembershipError(f"generator {h} of H_0 is not in T")
    n = T.order // H0.order
    if H0.order % 2:
        return FixityReport(n, 0, ZERO_ODD_ORDER, label, details={"h0_order": H0.order})

    h0_invs = scan_involutions(H0, bound)
    if T.order <= bound:
        classes, _ = _involution_classes(T, bound)
        source = "full element scan"
    else:
        classes = _partition_into_classes(T, h0_invs)
        source = "classes meeting H_0"
    space = CosetSpace(T, H0, coset_bound)

    per_class = []
    for c in classes:
        meet = sum(1 for t in h0_invs if t in c.members)
        num = meet * n
        if num % len(c.members):
            raise InconsistencyError(f"non-integral fixed point count for class of {Perm._raw(c.rep)}")
        fix_count = num // len(c.members)
        fix_coset = space.fixed_cosets(Perm._raw(c.rep))
        if fix_count != fix_coset:
            raise InconsistencyError(
                f"class of {Perm._raw(c.rep)}: class count gives {fix_count}, coset count gives {fix_coset}")
        per_class.append({"rep": str(Perm._raw(c.rep)), "class_size": len(c.members),
                          "meet_h0": meet, "fix": fix_count})
    accounted = sum(p["meet_h0"] for p in per_class)
    if accounted != len(h0_invs):
        raise InconsistencyError("some involutions of H_0 lie in no enumerated T-class")
    value = max((p["fix"] for p in per_class), default=0)
    return FixityReport(n, value, EXACT, label,
                        details={"h0_order": H0.order, "classes": per_class, "class_source": source})
