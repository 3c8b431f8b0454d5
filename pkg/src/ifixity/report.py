"""The fixity report shared by the brute-force, closed-form and class-data routes."""

from __future__ import annotations

from dataclasses import dataclass, field

EXACT = "exact"
LOWER_BOUND = "lower_bound"
ZERO_ODD_ORDER = "zero_odd_order"
CRITERION = "criterion"

KINDS = (EXACT, LOWER_BOUND, ZERO_ODD_ORDER, CRITERION)

# value > n^(num/den) is decided as value^den > n^num
THRESHOLDS = {"4/9": (4, 9), "1/3": (1, 3), "1/2": (1, 2), "1/6": (1, 6)}


def exceeds_power(value: int, n: int, num: int, den: int) -> bool:
    """Exact test of value > n^(num/den) for non-negative integers."""
    return value**den > n**num


@dataclass(frozen=True)
class FixityReport:
    """ifix value (or lower bound) of a socle on a coset space of size n.

    For kind ``criterion`` only the 4/9 verdict is known; ``value`` and
    possibly ``n`` are None.
    """

    n: int | None
    value: int | None
    kind: str
    label: str = ""
    criterion: bool | None = None
    details: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown report kind {self.kind!r}")
        if self.kind == CRITERION and self.criterion is None:
            raise ValueError("criterion report needs a verdict")

    @property
    def alpha(self) -> float | None:
        from ifixity.bigcomb import log_ratio

        if self.kind in (ZERO_ODD_ORDER, CRITERION) or not self.value or self.n is None or self.n < 2:
            return None
        return log_ratio(self.value, self.n).ratio

    @property
    def verdicts(self) -> dict[str, bool]:
        if self.kind == CRITERION:
            return {"4/9": bool(self.criterion)}
        return {key: exceeds_power(self.value, self.n, num, den)
                for key, (num, den) in THRESHOLDS.items()}

    def to_record(self) -> dict:
        alpha = self.alpha
        rec = {
            "label": self.label,
            "kind": self.kind,
            "n": None if self.n is None else str(self.n),
            "value": None if self.value is None else str(self.value),
            "alpha": None if alpha is None else round(alpha, 5),
            "verdicts": self.verdicts,
        }
        if self.criterion is not None:
            rec["criterion"] = self.criterion
        return rec

    def summary(self) -> str:
        """One-line rendering used by the command-line tool."""
        parts = []
        if self.value is not None:
            parts.append(f"ifix={self.value}")
        else:
            parts.append("ifix=?")
        parts.append(f"n={self.n if self.n is not None else '?'}")
        alpha = self.alpha
        if alpha is not None:
            parts.append(f"alpha={format_alpha(alpha)}")
        parts.append(self.kind)
        v = self.verdicts
        if v["4/9"]:
            parts.append("verdict:>n^(4/9)")
        elif self.kind == CRITERION:
            parts.append("verdict:criterion-not-met")
        elif self.kind == LOWER_BOUND:
            # a bound at or below the threshold decides nothing about ifix itself
            parts.append("verdict:undecided")
        elif v["1/3"]:
            parts.append("verdict:<=n^(4/9),>n^(1/3)")
        else:
            parts.append("verdict:<=n^(4/9)")
        return " ".join(parts)


def format_alpha(alpha: float) -> str:
    """Five significant figures."""
    return f"{alpha:.5g}"
