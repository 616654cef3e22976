"""Ext charts: trigraded class multiplicities with canonical serialization.

A chart records classes at (filtration s, stem, weight), where stem is the
Adams convention internal-stem-minus-filtration.  Charts from minimal
resolutions are compared against closed-form monomial charts; the JSON and
TSV forms are emitted bit-identically across runs.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable

from .milnor import BiDegree, xi_degree


FORMAT_VERSION = 1


def _sort_key(key: tuple[int, int, int]):
    s, stem, weight = key
    return (stem, s, weight)


@dataclass
class ExtChart:
    """Multiset of (s, stem, weight) classes with provenance."""

    module: str
    max_stem: int
    classes: dict[tuple[int, int, int], int] = field(default_factory=dict)

    def add(self, s: int, stem: int, weight: int, mult: int = 1) -> None:
        key = (s, stem, weight)
        self.classes[key] = self.classes.get(key, 0) + mult
        if self.classes[key] == 0:
            del self.classes[key]

    def mult(self, s: int, stem: int, weight: int) -> int:
        return self.classes.get((s, stem, weight), 0)

    def sorted_classes(self) -> list[tuple[int, int, int, int]]:
        return [
            (k[0], k[1], k[2], self.classes[k])
            for k in sorted(self.classes, key=_sort_key)
        ]

    def total(self) -> int:
        return sum(self.classes.values())

    def restricted(self, max_stem: int, max_filt: int | None = None) -> "ExtChart":
        out = ExtChart(self.module, min(self.max_stem, max_stem))
        for (s, stem, weight), mult in self.classes.items():
            if stem <= max_stem and (max_filt is None or s <= max_filt):
                out.add(s, stem, weight, mult)
        return out

    def to_json_dict(self) -> dict:
        return {
            "module": self.module,
            "max_stem": self.max_stem,
            "classes": [
                {"s": s, "stem": stem, "weight": weight, "mult": mult}
                for s, stem, weight, mult in self.sorted_classes()
            ],
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "ExtChart":
        chart = cls(str(data["module"]), int(data["max_stem"]))
        for entry in data["classes"]:
            chart.add(int(entry["s"]), int(entry["stem"]), int(entry["weight"]), int(entry["mult"]))
        return chart

    def to_tsv(self) -> str:
        lines = ["stem\ts\tweight\tmult"]
        for s, stem, weight, mult in self.sorted_classes():
            lines.append(f"{stem}\t{s}\t{weight}\t{mult}")
        return "\n".join(lines) + "\n"


def chart_file_dumps(chart: ExtChart, partial: bool = False, completed_stem: int | None = None) -> str:
    """Serialize a chart file with its format version, deterministically."""
    data = {"format_version": FORMAT_VERSION}
    data.update(chart.to_json_dict())
    if partial:
        data["partial"] = True
        data["completed_stem"] = completed_stem
    return json.dumps(data, indent=2, sort_keys=False) + "\n"


class ChartFormatError(ValueError):
    """A chart file violated the schema; the message names the field."""


def chart_file_loads(text: str) -> ExtChart:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ChartFormatError(f"not valid JSON: {exc}") from None
    for fieldname in ("format_version", "module", "max_stem", "classes"):
        if fieldname not in data:
            raise ChartFormatError(f"missing field {fieldname!r}")
    if data["format_version"] != FORMAT_VERSION:
        raise ChartFormatError(f"unsupported format_version {data['format_version']!r}")
    if not isinstance(data["classes"], list):
        raise ChartFormatError("field 'classes' must be a list")
    for entry in data["classes"]:
        for key in ("s", "stem", "weight", "mult"):
            if not isinstance(entry, dict) or key not in entry:
                raise ChartFormatError(f"class entry missing field {key!r}")
    return ExtChart.from_json_dict(data)


def _monomial_chart(
    name: str, gens: list[tuple[int, BiDegree]], max_stem: int
) -> ExtChart:
    """Chart of a polynomial algebra on filtration-graded generators.

    Each generator contributes (filtration, stem, weight); monomials add
    degrees, enumerated up to the stem bound.
    """
    chart = ExtChart(name, max_stem)

    def rec(i: int, s: int, stem: int, weight: int):
        if i == len(gens):
            chart.add(s, stem, weight)
            return
        filt, deg = gens[i]
        e = 0
        while stem + e * deg.stem <= max_stem:
            rec(i + 1, s + e * filt, stem + e * deg.stem, weight + e * deg.weight)
            e += 1

    rec(0, 0, 0, 0)
    return chart


def w_class_degree(n: int) -> BiDegree:
    """Chart degree of the periodicity class w_n: filtration 1, stem
    2^{n+2}-3, weight 2^{n+1}-1 (the degree of P_{n+1} minus one stem for
    the filtration shift)."""
    r = xi_degree(n + 1)
    return BiDegree(r.stem - 1, r.weight)


def koszul_chart(ts: Iterable[int], max_stem: int) -> ExtChart:
    """Ext of F2 over the exterior algebra E(P_t : t in ts).

    One polynomial class w_{t-1} per index, of filtration 1 and internal
    degree |P_t|; the chart is the monomial basis.
    """
    ts = tuple(sorted(set(ts)))
    if any(t < 1 for t in ts):
        raise ValueError("exterior indices must be >= 1")
    gens = [(1, w_class_degree(t - 1)) for t in ts]
    name = "koszul(" + ",".join(str(t) for t in ts) + ")"
    return _monomial_chart(name, gens, max_stem)


def polynomial_chart(gens: Iterable[BiDegree | tuple[int, int]], max_stem: int, name: str = "polynomial") -> ExtChart:
    """Additive chart of a polynomial ring on classes of filtration 1."""
    degs = [BiDegree(*g) for g in gens]
    if any(g.stem < 1 for g in degs):
        raise ValueError("polynomial chart generators need stem >= 1")
    return _monomial_chart(name, [(1, g) for g in degs], max_stem)


@dataclass
class ChartDiff:
    max_stem: int
    max_filt: int | None
    mismatches: list[tuple[tuple[int, int, int], int, int]] = field(default_factory=list)

    def is_empty(self) -> bool:
        return not self.mismatches

    def first(self) -> tuple[tuple[int, int, int], int, int] | None:
        return self.mismatches[0] if self.mismatches else None

    def to_json(self) -> dict:
        return {
            "max_stem": self.max_stem,
            "max_filt": self.max_filt,
            "mismatches": [
                {"s": k[0], "stem": k[1], "weight": k[2], "left": a, "right": b}
                for k, a, b in self.mismatches
            ],
        }


def compare_charts(
    a: ExtChart, b: ExtChart, max_stem: int, max_filt: int | None = None
) -> ChartDiff:
    """Multiplicity diff over stem <= max_stem (and filtration bound if given)."""
    diff = ChartDiff(max_stem, max_filt)
    keys = set(a.classes) | set(b.classes)
    for key in sorted(keys, key=_sort_key):
        s, stem, weight = key
        if stem > max_stem:
            continue
        if max_filt is not None and s > max_filt:
            continue
        ma = a.classes.get(key, 0)
        mb = b.classes.get(key, 0)
        if ma != mb:
            diff.mismatches.append((key, ma, mb))
    return diff
