"""Involution fixity from class sizes and a class fusion map.

For an involution class t^G of G and a subgroup H,
``fix(t) = |t^G & H| * |G:H| / |t^G|`` where ``|t^G & H|`` is the total size
of the H-classes fusing into t^G.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from ifixity.report import EXACT, ZERO_ODD_ORDER, FixityReport


class ClassDataError(ValueError):
    """Invalid class data or fusion input; ``field`` names the offending entry."""

    def __init__(self, message: str, field: str = ""):
        self.field = field
        super().__init__(f"{field}: {message}" if field else message)


class DataInconsistencyError(ArithmeticError):
    """Class data that passes validation but yields a non-integral fixed point count."""


@dataclass(frozen=True)
class ClassEntry:
    label: str
    element_order: int
    size: int


@dataclass(frozen=True)
class ClassData:
    group_name: str
    group_order: int
    classes: tuple[ClassEntry, ...]

    def __post_init__(self):
        seen = set()
        for c in self.classes:
            if c.label in seen:
                raise ClassDataError(f"duplicate label {c.label!r}", "classes")
            seen.add(c.label)
            if c.size < 1 or self.group_order % c.size:
                raise ClassDataError(f"size {c.size} does not divide {self.group_order}",
                                     f"classes[{c.label}].size")
            if c.element_order < 1:
                raise ClassDataError("element order must be positive", f"classes[{c.label}].element_order")
        total = sum(c.size for c in self.classes)
        if total != self.group_order:
            raise ClassDataError(f"class sizes sum to {total}, not {self.group_order}", "classes")
        ones = [c for c in self.classes if c.element_order == 1]
        if len(ones) != 1 or ones[0].size != 1:
            raise ClassDataError("need exactly one identity class of size 1", "classes")

    def __getitem__(self, label: str) -> ClassEntry:
        for c in self.classes:
            if c.label == label:
                return c
        raise KeyError(f"{self.group_name} has no class {label!r}")

    def labels(self) -> list[str]:
        return [c.label for c in self.classes]

    def to_dict(self) -> dict:
        return {"group": self.group_name, "order": str(self.group_order),
                "classes": [{"label": c.label, "element_order": c.element_order, "size": str(c.size)}
                            for c in self.classes]}


@dataclass(frozen=True)
class FusionMap:
    source: str
    target: str
    entries: dict

    def validate(self, G: ClassData, H: ClassData) -> None:
        if self.source != H.group_name or self.target != G.group_name:
            raise ClassDataError(f"fusion {self.source} -> {self.target} does not match "
                                 f"{H.group_name} -> {G.group_name}", "from/to")
        for c in H.classes:
            if c.label not in self.entries:
                raise ClassDataError(f"class {c.label!r} of {H.group_name} is not mapped", "map")
            target = self.entries[c.label]
            try:
                g_class = G[target]
            except KeyError:
                raise ClassDataError(f"unknown class {target!r} of {G.group_name}", f"map[{c.label}]") from None
            if g_class.element_order != c.element_order:
                raise ClassDataError(f"{c.label} has order {c.element_order} but {target} has order "
                                     f"{g_class.element_order}", f"map[{c.label}]")
        extra = set(self.entries) - set(H.labels())
        if extra:
            raise ClassDataError(f"unknown classes of {H.group_name}: {sorted(extra)}", "map")


def _decimal(value, field: str) -> int:
    if isinstance(value, bool) or not isinstance(value, (str, int)):
        raise ClassDataError("expected a decimal string", field)
    text = str(value).strip()
    if not text.isdigit():
        raise ClassDataError(f"not a decimal integer: {value!r}", field)
    return int(text)


def class_data_from_dict(obj: dict) -> ClassData:
    for key in ("group", "order", "classes"):
        if key not in obj:
            raise ClassDataError("missing field", key)
    classes = []
    for i, c in enumerate(obj["classes"]):
        try:
            label, order, size = c["label"], c["element_order"], c["size"]
        except (KeyError, TypeError):
            raise ClassDataError("each class needs label, element_order and size", f"classes[{i}]") from None
        classes.append(ClassEntry(str(label), _decimal(order, f"classes[{i}].element_order"),
                                  _decimal(size, f"classes[{i}].size")))
    return ClassData(str(obj["group"]), _decimal(obj["order"], "order"), tuple(classes))


def fusion_from_dict(obj: dict) -> FusionMap:
    for key in ("from", "to", "map"):
        if key not in obj:
            raise ClassDataError("missing field", key)
    if not isinstance(obj["map"], dict):
        raise ClassDataError("expected an object of label pairs", "map")
    return FusionMap(str(obj["from"]), str(obj["to"]), {str(k): str(v) for k, v in obj["map"].items()})


def _read_json(path) -> dict:
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise ClassDataError(f"invalid JSON ({exc.msg}) at line {exc.lineno}") from None


def load_class_data(path: str | Path) -> ClassData:
    return class_data_from_dict(_read_json(path))


def load_fusion(path: str | Path) -> FusionMap:
    return fusion_from_dict(_read_json(path))


def fix_from_chardata(G: ClassData, H: ClassData, fusion: FusionMap, t_class: str) -> int:
    """Fixed points of an element of class ``t_class`` on the cosets of H."""
    fusion.validate(G, H)
    t = G[t_class]
    if t.element_order != 2:
        raise ClassDataError(f"{t_class} is not a class of involutions", "t_class")
    if G.group_order % H.group_order:
        raise ClassDataError(f"|{H.group_name}| does not divide |{G.group_name}|", "order")
    meet = sum(c.size for c in H.classes if fusion.entries[c.label] == t_class)
    num = meet * (G.group_order // H.group_order)
    if num % t.size:
        raise DataInconsistencyError(
            f"fix({t_class}) = {num}/{t.size} is not an integer; the class data is inconsistent")
    return num // t.size


def ifix_from_chardata(G: ClassData, H: ClassData, fusion: FusionMap) -> FixityReport:
    fusion.validate(G, H)
    n = G.group_order // H.group_order
    label = f"{G.group_name} on cosets of {H.group_name}"
    if H.group_order % 2:
        return FixityReport(n, 0, ZERO_ODD_ORDER, label)
    fixes = {c.label: fix_from_chardata(G, H, fusion, c.label)
             for c in G.classes if c.element_order == 2}
    return FixityReport(n, max(fixes.values(), default=0), EXACT, label, details={"fix": fixes})


# --- bundled data -------------------------------------------------------------------------

def _file_key(name: str) -> str:
    return re.sub(r"[^A-Za-z0-9]+", "_", name).strip("_")


def _bundled(filename: str) -> dict:
    ref = resources.files("ifixity") / "data" / "chartab" / filename
    if not ref.is_file():
        raise LookupError(f"no bundled data file {filename}")
    return json.loads(ref.read_text(encoding="utf-8"))


def bundled_class_data(name: str) -> ClassData:
    return class_data_from_dict(_bundled(f"{_file_key(name)}.json"))


def bundled_fusion(h: str, g: str) -> FusionMap:
    return fusion_from_dict(_bundled(f"{_file_key(h)}__{_file_key(g)}.fusion.json"))


def bundled_pairs() -> list[tuple[str, str]]:
    """(G, H) names of every bundled fusion map."""
    folder = resources.files("ifixity") / "data" / "chartab"
    out = []
    for ref in folder.iterdir():
        if ref.name.endswith(".fusion.json"):
            obj = json.loads(ref.read_text(encoding="utf-8"))
            out.append((obj["to"], obj["from"]))
    return sorted(out)


def bundled_ifix(group: str, h0: str) -> FixityReport:
    try:
        G, H, fusion = bundled_class_data(group), bundled_class_data(h0), bundled_fusion(h0, group)
    except LookupError:
        raise LookupError(f"no bundled class data for {group} on cosets of {h0}") from None
    return ifix_from_chardata(G, H, fusion)
