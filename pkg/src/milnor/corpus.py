"""Built-in corpus of published examples and the two degree families.

Expected values hold only what the published examples state. Values the
engine produced on its own (exact ``sat`` for the non-free family, full
numerators, ...) live in ``data/derived_baselines.json`` and are never mixed
into the expectations here.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Any, Iterable

from .invariants import InvariantReport, full_report
from .polynomial import Ring, parse_polynomial

__all__ = [
    "Expectation",
    "CorpusEntry",
    "FamilySpec",
    "Outcome",
    "CORPUS",
    "FAMILIES",
    "get_entry",
    "family_polynomial",
    "family_entry",
    "evaluate",
    "compute_entry",
    "load_baselines",
    "BASELINES_PATH",
]

XYZ = ("x", "y", "z")


@dataclass(frozen=True)
class Expectation:
    """One stated fact about a report.

    ``field`` is a report field name (``series`` compares a prefix) or the
    relation ``st_vs_ct`` with value ``"<"``, ``"="`` or ``">"``. A soft
    expectation is a conjectured pattern: a miss is an anomaly, not a failure.
    """

    field: str
    value: Any
    hard: bool = True
    source: str = "published"


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    polynomial: str
    variables: tuple[str, ...]
    expected: tuple[Expectation, ...]
    provenance: str
    family: str | None = None
    degree: int | None = None

    def parse(self):
        return parse_polynomial(self.polynomial, Ring(self.variables))

    def tags(self) -> set[str]:
        tags = {"corpus", self.name}
        if self.family:
            tags.add(self.family)
        for e in self.expected:
            tags.add(e.field)
            if e.field == "is_free":
                tags.add("free")
        return tags


@dataclass(frozen=True)
class FamilySpec:
    family: str
    d_min: int
    d_max: int

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}; choose from {sorted(FAMILIES)}")
        if self.d_min < 5:
            raise ValueError("both families start at degree 5")
        if self.d_max < self.d_min:
            raise ValueError("empty degree range")

    def degrees(self) -> range:
        return range(self.d_min, self.d_max + 1)


def _mono(var: str, e: int) -> str | None:
    if e == 0:
        return None
    return var if e == 1 else f"{var}^{e}"


def _term(*factors: tuple[str, int]) -> str:
    parts = [p for p in (_mono(v, e) for v, e in factors) if p]
    return "*".join(parts) if parts else "1"


def family_polynomial(family: str, d: int) -> str:
    if family == "st":
        return "+".join(
            [_term(("y", d - 1), ("z", 1)), _term(("x", d)), _term(("x", 2), ("y", d - 2))]
        )
    if family == "cd":
        return "+".join(
            [
                _term(("x", 2), ("y", 2), ("z", d - 4)),
                _term(("x", 5), ("z", d - 5)),
                _term(("y", 5), ("z", d - 5)),
                _term(("x", d)),
                _term(("y", d)),
            ]
        )
    raise ValueError(f"unknown family {family!r}")


def _st_entry(d: int) -> CorpusEntry:
    relation = "<" if d == 5 else "=" if d == 6 else ">"
    expected = [Expectation("is_free", True), Expectation("st_vs_ct", relation)]
    if d == 5:
        expected += [Expectation("st", 4), Expectation("ct", 5)]
    elif d == 6:
        expected += [Expectation("st", 6), Expectation("ct", 6)]
    return CorpusEntry(
        f"st-{d}", family_polynomial("st", d), XYZ, tuple(expected), "ex:free-sequence", "st", d
    )


def family_entry(family: str, d: int) -> CorpusEntry:
    if family == "st":
        return _st_entry(d)
    if family == "cd":
        return _cd_entry(d)
    raise ValueError(f"unknown family {family!r}")


def _cd_entry(d: int) -> CorpusEntry:
    expected = (
        Expectation("tau", 10),
        Expectation("is_free", False),
        Expectation("ct", 3 * d - 9, hard=False),
        Expectation("st", 3 * d - 9, hard=False),
    )
    return CorpusEntry(f"c-{d}", family_polynomial("cd", d), XYZ, expected, "ex:t255-sequence", "cd", d)


_A3 = "(x^2-y^2)*(y^2-z^2)*(x^2-z^2)"

CORPUS: tuple[CorpusEntry, ...] = (
    CorpusEntry(
        "triangle",
        "x*y*z",
        XYZ,
        (
            Expectation("series", (1, 3, 3, 3)),
            Expectation("tau", 3),
            Expectation("ct", 2),
            Expectation("st", 1),
            Expectation("sat", 0),
            Expectation("is_free", True),
        ),
        "ex:triangle-conic",
    ),
    CorpusEntry(
        "conic-tangent",
        "x*(x*z+y^2)",
        XYZ,
        (
            Expectation("series", (1, 3, 3, 3)),
            Expectation("tau", 3),
            Expectation("ct", 2),
            Expectation("st", 1),
            Expectation("sat", 0),
            Expectation("is_free", True),
        ),
        "ex:triangle-conic",
    ),
    CorpusEntry(
        "a3-arrangement",
        _A3,
        XYZ,
        (
            Expectation("series", (1, 3, 6, 10, 15, 18, 19, 19)),
            Expectation("tau", 19),
            Expectation("ct", 6),
            Expectation("st", 6),
            Expectation("sat", 0),
            Expectation("is_free", True),
        ),
        "ex:line-arrangements",
    ),
    CorpusEntry(
        "xyz-a3-arrangement",
        f"x*y*z*{_A3}",
        XYZ,
        (
            Expectation("series", (1, 3, 6, 10, 15, 21, 28, 36, 42, 46, 48, 49, 49)),
            Expectation("tau", 49),
            Expectation("ct", 10),
            Expectation("st", 11),
            Expectation("is_free", True),
        ),
        "ex:line-arrangements",
    ),
    *(_st_entry(d) for d in range(5, 16)),
    CorpusEntry(
        "simis-sextic",
        "4*(x^2+y^2+x*z)^3-27*(x^2+y^2)^2*z^2",
        XYZ,
        (
            Expectation("series", (1, 3, 6, 10, 15, 18, 19, 19)),
            Expectation("tau", 19),
            Expectation("ct", 6),
            Expectation("st", 6),
            Expectation("is_free", True),
        ),
        "ex:simis-sextic",
    ),
    *(_cd_entry(d) for d in range(5, 16)),
    CorpusEntry(
        "nodal-quintic",
        "x^4*y+x^3*y^2+y^5+x*y^2*z^2+(x^2+x*y+y^2)*z^3",
        XYZ,
        (
            Expectation("series", (1, 3, 6, 10, 12, 12, 10, 6, 3, 1, 1)),
            Expectation("tau", 1),
            Expectation("ct", 9),
            Expectation("st", 9),
        ),
        "ex:one-node",
    ),
)

FAMILIES = {"st": "y^(d-1)*z + x^d + x^2*y^(d-2)", "cd": "x^2*y^2*z^(d-4) + x^5*z^(d-5) + y^5*z^(d-5) + x^d + y^d"}


def get_entry(name: str, corpus: Iterable[CorpusEntry] = CORPUS) -> CorpusEntry:
    corpus = list(corpus)
    for entry in corpus:
        if entry.name == name:
            return entry
    names = ", ".join(e.name for e in corpus)
    raise KeyError(f"unknown example {name!r}; available: {names}")


@dataclass
class Outcome:
    """Result of checking one report against its expectations."""

    name: str
    report: InvariantReport | None
    failures: list[str] = field(default_factory=list)
    anomalies: list[str] = field(default_factory=list)
    passed_checks: list[str] = field(default_factory=list)
    error: str | None = None

    @property
    def ok(self) -> bool:
        return self.error is None and not self.failures


def _observed(report: InvariantReport, exp: Expectation):
    if exp.field == "series":
        return report.series_prefix[: len(exp.value)]
    if exp.field == "st_vs_ct":
        if report.ct is None:
            return None
        return "<" if report.st < report.ct else "=" if report.st == report.ct else ">"
    return getattr(report, exp.field)


def evaluate(entry: CorpusEntry, report: InvariantReport) -> Outcome:
    out = Outcome(entry.name, report)
    for exp in entry.expected:
        seen = _observed(report, exp)
        want = tuple(exp.value) if isinstance(exp.value, (list, tuple)) else exp.value
        line = f"{exp.field}: expected {want}, got {seen}"
        if seen == want:
            out.passed_checks.append(line)
        elif exp.hard:
            out.failures.append(line)
        else:
            out.anomalies.append(line)
    return out


def compute_entry(entry: CorpusEntry, max_degree: int | None = None) -> Outcome:
    report = full_report(entry.parse(), max_degree=max_degree)
    return evaluate(entry, report)


BASELINES_PATH = Path(__file__).with_name("data") / "derived_baselines.json"


def load_baselines(path: Path | None = None) -> dict[str, dict[str, Any]]:
    if path is not None:
        return json.loads(Path(path).read_text())
    try:
        text = resources.files("milnor").joinpath("data/derived_baselines.json").read_text()
    except FileNotFoundError:
        return {}
    return json.loads(text)


BASELINE_FIELDS = ("tau", "ct", "st", "sat", "free", "reg", "numerator_Q", "defect")


def baseline_record(report: InvariantReport) -> dict[str, Any]:
    rec = report.to_record()
    return {k: rec[k] for k in BASELINE_FIELDS}
