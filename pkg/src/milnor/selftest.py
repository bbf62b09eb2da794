"""Self-test harness: corpus, property suites and engine baselines."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Iterable

from .corpus import CORPUS, BASELINES_PATH, CorpusEntry, baseline_record, evaluate, load_baselines
from .groebner import buchberger, ideal_equal
from .hilbert import smooth_series
from .invariants import InvariantReport, full_report, milnor_algebra, theorem1_check
from .saturation import saturate_irrelevant


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str = ""
    anomalies: list[str] = field(default_factory=list)


@dataclass
class Check:
    name: str
    tags: frozenset[str]
    run: Callable[[], CheckResult]

    def matches(self, pattern: str | None) -> bool:
        if not pattern:
            return True
        return pattern in self.name or any(pattern in t for t in self.tags)


class _ReportCache:
    def __init__(self):
        self._reports: dict[str, InvariantReport] = {}

    def get(self, entry: CorpusEntry) -> InvariantReport:
        if entry.name not in self._reports:
            self._reports[entry.name] = full_report(entry.parse())
        return self._reports[entry.name]


def _corpus_check(entry: CorpusEntry, cache: _ReportCache) -> Check:
    def run():
        outcome = evaluate(entry, cache.get(entry))
        detail = "; ".join(outcome.failures) if outcome.failures else f"{len(outcome.passed_checks)} facts"
        return CheckResult(f"corpus:{entry.name}", outcome.ok, detail, outcome.anomalies)

    return Check(f"corpus:{entry.name}", frozenset(entry.tags()), run)


def _smooth_properties() -> CheckResult:
    bad = []
    for n in (1, 2, 3):
        for d in range(3, 13):
            c = smooth_series(n, d).coefficients
            T = (n + 1) * (d - 2)
            if len(c) != T + 1 or c[T] != 1:
                bad.append(f"n={n} d={d}: length/top")
            if any(c[k] != c[T - k] for k in range(T + 1)):
                bad.append(f"n={n} d={d}: not symmetric")
            if any(not c[k - 1] < c[k] for k in range(1, T // 2 + 1)):
                bad.append(f"n={n} d={d}: not strictly increasing up to T/2")
            if any(c[k] ** 2 < c[k - 1] * c[k + 1] for k in range(1, T)):
                bad.append(f"n={n} d={d}: not log-concave")
    return CheckResult("property:smooth-series", not bad, "; ".join(bad) or "n<=3, 3<=d<=12")


def _theorem_properties(corpus: Iterable[CorpusEntry], cache: _ReportCache) -> CheckResult:
    bad, applicable = [], 0
    for entry in corpus:
        r = cache.get(entry)
        if r.ct is None:
            continue
        v = theorem1_check(r)
        if v.applicable:
            applicable += 1
            if not v.all_ok:
                bad.append(f"{entry.name}: {v}")
        if not r.sat <= max(r.T - r.ct, r.st):
            bad.append(f"{entry.name}: sat bound")
        if not (2 * r.st >= r.T - 1 if r.d % 2 else 2 * r.st >= r.T):
            bad.append(f"{entry.name}: st symmetry bound")
        if r.reg < r.T - r.ct or (r.is_free and r.reg != r.T - r.ct):
            bad.append(f"{entry.name}: regularity")
    return CheckResult("property:theorem", not bad, "; ".join(bad) or f"{applicable} applicable inputs")


def _saturation_idempotence(corpus: Iterable[CorpusEntry]) -> CheckResult:
    bad = []
    for entry in corpus:
        G = milnor_algebra(entry.parse()).jacobian
        once = saturate_irrelevant(G)
        if once.is_unit():
            continue
        if not ideal_equal(saturate_irrelevant(once), once):
            bad.append(entry.name)
        if not ideal_equal(saturate_irrelevant(G, "intersect"), once):
            bad.append(f"{entry.name} (strategy)")
    return CheckResult("property:saturation-idempotence", not bad, ", ".join(bad) or "ok")


def _baseline_check(corpus: Iterable[CorpusEntry], cache: _ReportCache, baselines: dict) -> CheckResult:
    bad, seen = [], 0
    for entry in corpus:
        want = baselines.get(entry.name)
        if want is None:
            continue
        seen += 1
        got = baseline_record(cache.get(entry))
        if got != want:
            diff = sorted(k for k in want if got.get(k) != want[k])
            bad.append(f"{entry.name}: {','.join(diff)}")
    if not seen:
        return CheckResult("baseline:engine", True, "no baselines recorded")
    return CheckResult("baseline:engine", not bad, "; ".join(bad) or f"{seen} entries")


def build_checks(corpus: Iterable[CorpusEntry] = CORPUS, baselines: dict | None = None) -> list[Check]:
    corpus = list(corpus)
    cache = _ReportCache()
    baselines = load_baselines() if baselines is None else baselines
    small = [e for e in corpus if e.degree is None or e.degree <= 7]
    checks = [_corpus_check(e, cache) for e in corpus]
    checks += [
        Check("property:smooth-series", frozenset({"property", "smooth"}), _smooth_properties),
        Check(
            "property:theorem",
            frozenset({"property", "theorem", "free", "regularity"}),
            lambda: _theorem_properties(corpus, cache),
        ),
        Check(
            "property:saturation-idempotence",
            frozenset({"property", "saturation", "free"}),
            lambda: _saturation_idempotence(small),
        ),
        Check(
            "baseline:engine",
            frozenset({"baseline", "sat", "free"}),
            lambda: _baseline_check(corpus, cache, baselines),
        ),
    ]
    return checks


def run_selftest(
    corpus: Iterable[CorpusEntry] = CORPUS,
    pattern: str | None = None,
    baselines: dict | None = None,
) -> list[CheckResult]:
    results = []
    for check in build_checks(corpus, baselines):
        if not check.matches(pattern):
            continue
        try:
            results.append(check.run())
        except Exception as exc:  # a crash is a failed check, keep going
            results.append(CheckResult(check.name, False, f"{type(exc).__name__}: {exc}"))
    return results


def regenerate_baselines(corpus: Iterable[CorpusEntry] = CORPUS, path: Path = BASELINES_PATH) -> dict:
    data = {e.name: baseline_record(full_report(e.parse())) for e in corpus}
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(data, indent=1, sort_keys=True) + "\n")
    return data
