"""Recompute the rows of the table of cases with n^alpha <= ifix(T) <= n^(4/9).

Each row of ``data/table1.json`` names T and H_0, the expected (ifix, n, alpha)
and the routes available for recomputing it: brute force from bundled
generators and/or class-fusion data. Rows with neither are reported as
skipped, never dropped.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources

from ifixity.report import FixityReport, format_alpha

ALPHA_TOLERANCE = 0.001

MATCH = "match"
MISMATCH = "mismatch"
SKIPPED = "skipped(no-data)"

METHODS = ("auto", "bruteforce", "chartab", "both")


@dataclass(frozen=True)
class Row:
    key: str
    T: str
    H0: str
    ifix: int
    n: int
    alpha: str
    conditions: str = ""
    bruteforce: dict | None = None
    chartab: dict | None = None
    source: dict = field(default_factory=dict, compare=False)

    def available(self) -> list[str]:
        return [m for m in ("bruteforce", "chartab") if getattr(self, m)]


@dataclass(frozen=True)
class RowResult:
    row: Row
    status: str
    methods: tuple[str, ...] = ()
    report: FixityReport | None = None
    notes: tuple[str, ...] = ()

    def to_record(self) -> dict:
        rec = {"key": self.row.key, "status": self.status, "methods": list(self.methods),
               "expected": {"ifix": str(self.row.ifix), "n": str(self.row.n), "alpha": self.row.alpha},
               "notes": list(self.notes)}
        if self.report is not None:
            rec["computed"] = self.report.to_record()
        return rec

    def summary(self) -> str:
        exp = f"expected ifix={self.row.ifix} n={self.row.n} alpha={self.row.alpha}"
        if self.report is None:
            return f"{self.row.key}: {self.status} ({exp})"
        r = self.report
        alpha = r.alpha
        got = f"ifix={r.value} n={r.n} alpha={format_alpha(alpha) if alpha is not None else '-'}"
        text = f"{self.row.key}: {self.status} {r.kind} via {'+'.join(self.methods)} {got} ({exp})"
        if self.notes:
            text += " [" + "; ".join(self.notes) + "]"
        return text


def load_rows() -> list[Row]:
    ref = resources.files("ifixity") / "data" / "table1.json"
    doc = json.loads(ref.read_text(encoding="utf-8"))
    rows = []
    for obj in doc["rows"]:
        exp = obj["expected"]
        rows.append(Row(obj["key"], obj["T"], obj["H0"], int(exp["ifix"]), int(exp["n"]),
                        exp["alpha"], obj.get("conditions", ""), obj.get("bruteforce"),
                        obj.get("chartab"), obj.get("source", {})))
    return rows


def select(rows: list[Row], spec: str | None) -> list[Row]:
    """Filter rows by a comma-separated list of T names, row keys or ranges ``A..B``.

    A range runs over the table order from the first row whose T is A to the
    last row whose T is B.
    """
    if not spec:
        return list(rows)
    chosen: set[int] = set()
    for part in (p.strip() for p in spec.split(",")):
        if not part:
            continue
        if ".." in part:
            lo, hi = (s.strip() for s in part.split("..", 1))
            starts = [i for i, r in enumerate(rows) if r.T == lo]
            ends = [i for i, r in enumerate(rows) if r.T == hi]
            if not starts or not ends or starts[0] > ends[-1]:
                raise KeyError(f"no rows in range {part!r}")
            chosen.update(range(starts[0], ends[-1] + 1))
            continue
        hits = [i for i, r in enumerate(rows) if part in (r.T, r.key)]
        if not hits:
            raise KeyError(f"no row matches {part!r}")
        chosen.update(hits)
    return [rows[i] for i in sorted(chosen)]


def compute_bruteforce(row: Row) -> FixityReport:
    from ifixity.groups import alternating_group, bundled_generators
    from ifixity.permcore import build_group, ifix_bruteforce

    t_name = row.bruteforce["T"]
    if t_name.startswith("alternating "):
        T = alternating_group(int(t_name.split()[1]))
    else:
        degree, gens = bundled_generators(t_name)
        T = build_group(gens, degree)
    _, h_gens = bundled_generators(row.bruteforce["H0"])
    return ifix_bruteforce(T, h_gens, label=row.key)


def compute_chartab(row: Row) -> FixityReport:
    from ifixity.chartab import bundled_ifix

    return bundled_ifix(row.chartab["G"], row.chartab["H"])


def _methods_for(row: Row, method: str) -> list[str]:
    have = row.available()
    if method == "auto":
        if row.bruteforce and row.bruteforce["T"].startswith("alternating "):
            return ["bruteforce"]
        return have[-1:] if have else []
    if method == "both":
        return have
    return [method] if method in have else []


def check_report(row: Row, report: FixityReport) -> list[str]:
    """Differences between a computed report and the expected row; empty when they agree."""
    problems = []
    if report.value != row.ifix:
        problems.append(f"ifix {report.value} != {row.ifix}")
    if report.n != row.n:
        problems.append(f"n {report.n} != {row.n}")
    alpha = report.alpha
    if alpha is None or abs(alpha - float(row.alpha)) > ALPHA_TOLERANCE:
        problems.append(f"alpha {alpha} differs from {row.alpha} by more than {ALPHA_TOLERANCE}")
    return problems


def evaluate_row(row: Row, method: str = "auto") -> RowResult:
    if method not in METHODS:
        raise ValueError(f"unknown method {method!r}")
    methods = _methods_for(row, method)
    if not methods:
        return RowResult(row, SKIPPED)
    compute = {"bruteforce": compute_bruteforce, "chartab": compute_chartab}
    reports = [compute[m](row) for m in methods]
    problems = []
    for m, rep in zip(methods, reports):
        problems += [f"{m}: {p}" for p in check_report(row, rep)]
    if len(reports) == 2 and (reports[0].value, reports[0].n) != (reports[1].value, reports[1].n):
        problems.append("bruteforce and chartab disagree")
    return RowResult(row, MISMATCH if problems else MATCH, tuple(methods), reports[0], tuple(problems))


def run(spec: str | None = None, method: str = "auto") -> list[RowResult]:
    return [evaluate_row(r, method) for r in select(load_rows(), spec)]
