"""Directed-rounding interval evaluation with precision escalation.

Every evaluation runs in a private mpmath interval context, so callers on
different threads never share the precision setting.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from mpmath.ctx_iv import MPIntervalContext
from mpmath.libmp import to_rational

START_BITS = 256
CAP_BITS = 16384

HOLDS = "holds"
FAILS = "fails"
INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class Enclosure:
    """Closed interval [lo, hi] with exact rational endpoints."""

    lo: Fraction
    hi: Fraction
    bits: int

    def __contains__(self, x) -> bool:
        return self.lo <= x <= self.hi

    def width(self) -> Fraction:
        return self.hi - self.lo


def context(bits: int) -> MPIntervalContext:
    ctx = MPIntervalContext()
    ctx.prec = bits
    return ctx


def enclosure(x, bits: int) -> Enclosure:
    """Convert an mpmath interval into exact rational endpoints."""
    a, b = x._mpi_
    pa, qa = to_rational(a)
    pb, qb = to_rational(b)
    return Enclosure(Fraction(int(pa), int(qa)), Fraction(int(pb), int(qb)), bits)


def sign_of(expr: Callable[[MPIntervalContext], object], bits: int = START_BITS,
            cap: int = CAP_BITS) -> tuple[str, Enclosure]:
    """Decide the sign of ``expr`` (an interval-valued callable of the context).

    Returns ``("holds", enc)`` when the whole enclosure is strictly positive,
    ``("fails", enc)`` when strictly negative. Precision doubles from ``bits``
    until the sign is decided; past ``cap`` the verdict is ``"inconclusive"``.
    """
    enc = None
    while bits <= cap:
        ctx = context(bits)
        enc = enclosure(expr(ctx), bits)
        if enc.lo > 0:
            return HOLDS, enc
        if enc.hi < 0:
            return FAILS, enc
        bits *= 2
    return INCONCLUSIVE, enc
