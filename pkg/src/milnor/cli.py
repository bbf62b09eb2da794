"""Command-line front end.

Exit codes: 0 ok, 1 check failure, 2 parse error, 3 non-isolated
singularities, 4 timeout.
"""

from __future__ import annotations

import argparse
import contextlib
import json
import signal
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Any

from . import kernels
from .corpus import CORPUS, CorpusEntry, FamilySpec, compute_entry, evaluate, family_entry, family_polynomial, get_entry
from .invariants import ConsistencyError, InvariantReport, NonIsolatedError, full_report
from .polynomial import ParseError, Ring, parse_polynomial

EXIT_OK, EXIT_CHECK, EXIT_PARSE, EXIT_NON_ISOLATED, EXIT_TIMEOUT = 0, 1, 2, 3, 4
DEFAULT_TIMEOUT = 300.0


class ComputationTimeout(Exception):
    pass


@contextlib.contextmanager
def time_limit(seconds: float | None):
    if not seconds or seconds <= 0:
        yield
        return

    def handler(signum, frame):
        raise ComputationTimeout(f"exceeded {seconds:g} s")

    previous = signal.signal(signal.SIGALRM, handler)
    signal.setitimer(signal.ITIMER_REAL, seconds)
    try:
        yield
    finally:
        signal.setitimer(signal.ITIMER_REAL, 0)
        signal.signal(signal.SIGALRM, previous)


def _dump(record: dict[str, Any]) -> str:
    return json.dumps(record, sort_keys=True, separators=(",", ":"))


def render_report(report: InvariantReport, title: str | None = None) -> str:
    ct = "infinite" if report.ct is None else str(report.ct)
    reg = "undefined (smooth)" if report.reg is None else str(report.reg)
    rows = [
        ("degree d", report.d),
        ("ambient n", report.n),
        ("T", report.T),
        ("krull dim", report.krull_dim),
        ("tau", report.tau),
        ("ct", ct),
        ("st", report.st),
        ("sat", report.sat),
        ("free", "yes" if report.is_free else "no"),
        ("reg", reg),
        ("series", ", ".join(map(str, report.series_prefix)) + ", ..."),
        ("numerator Q", list(report.numerator_Q)),
    ]
    width = max(len(k) for k, _ in rows)
    lines = [title] if title else []
    lines += [f"  {k.ljust(width)}  {v}" for k, v in rows]
    return "\n".join(lines)


def _report_for(poly_text: str, variables: str, max_degree: int | None) -> InvariantReport:
    f = parse_polynomial(poly_text, Ring.of(variables))
    return full_report(f, max_degree=max_degree)


def cmd_compute(args) -> int:
    with time_limit(args.timeout_secs):
        report = _report_for(args.poly, args.vars, args.max_degree)
    if args.json:
        print(_dump(report.to_record()))
    else:
        print(render_report(report, f"f = {args.poly}"))
    return EXIT_OK


def _print_outcome(outcome, as_json: bool, entry: CorpusEntry) -> None:
    if as_json:
        rec: dict[str, Any] = {"name": entry.name, "poly": entry.polynomial}
        if outcome.report is not None:
            rec.update(outcome.report.to_record())
        rec.update(
            {
                "ok": outcome.ok,
                "failures": outcome.failures,
                "anomalies": outcome.anomalies,
                "error": outcome.error,
            }
        )
        print(_dump(rec))
        return
    print(render_report(outcome.report, f"{entry.name}: {entry.polynomial}"))
    for line in outcome.passed_checks:
        print(f"  PASS     {line}")
    for line in outcome.failures:
        print(f"  FAIL     {line}")
    for line in outcome.anomalies:
        print(f"  ANOMALY  {line}")


def cmd_example(args) -> int:
    try:
        entry = get_entry(args.name)
    except KeyError as exc:
        print(exc.args[0], file=sys.stderr)
        return EXIT_CHECK
    with time_limit(args.timeout_secs):
        outcome = compute_entry(entry, args.max_degree)
    _print_outcome(outcome, args.json, entry)
    return EXIT_OK if outcome.ok else EXIT_CHECK


def cmd_list(args) -> int:
    for entry in CORPUS:
        print(f"{entry.name:20s} {entry.polynomial}")
    return EXIT_OK


def _parse_degrees(text: str) -> tuple[int, int]:
    if ".." in text:
        a, b = text.split("..", 1)
        return int(a), int(b)
    return int(text), int(text)


def _family_row(family: str, d: int, timeout: float | None) -> dict[str, Any]:
    """Compute one family member; errors become part of the row."""
    entry = family_entry(family, d)
    row: dict[str, Any] = {"family": family, "d": d, "poly": family_polynomial(family, d)}
    try:
        with time_limit(timeout):
            report = full_report(entry.parse())
    except ComputationTimeout as exc:
        row.update(status="timeout", error=str(exc))
        return row
    except (NonIsolatedError, ConsistencyError) as exc:
        row.update(status="error", error=str(exc))
        return row
    outcome = evaluate(entry, report)
    row.update(report.to_record())
    row.update(
        status="ok" if outcome.ok else "fail",
        failures=outcome.failures,
        anomalies=outcome.anomalies,
    )
    return row


def cmd_family(args) -> int:
    lo, hi = _parse_degrees(args.degrees)
    spec = FamilySpec(args.family, lo, hi)
    degrees = list(spec.degrees())
    if args.jobs and args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            rows = list(pool.map(_family_row, [spec.family] * len(degrees), degrees, [args.timeout_secs] * len(degrees)))
    else:
        rows = [_family_row(spec.family, d, args.timeout_secs) for d in degrees]
    rows.sort(key=lambda r: r["d"])
    if args.json:
        for row in rows:
            print(_dump(row))
    else:
        print(f"{'d':>3} {'T':>4} {'tau':>5} {'ct':>4} {'st':>4} {'sat':>4} {'free':>5} {'reg':>4}  status")
        for row in rows:
            if row["status"] in ("timeout", "error"):
                print(f"{row['d']:>3}  {row['status']}: {row['error']}")
                continue
            flags = "; ".join(row["failures"] + [f"anomaly {a}" for a in row["anomalies"]])
            print(
                f"{row['d']:>3} {row['T']:>4} {row['tau']:>5} {row['ct']:>4} {row['st']:>4} "
                f"{row['sat']:>4} {str(row['free']):>5} {row['reg']:>4}  {row['status']}"
                + (f"  [{flags}]" if flags else "")
            )
    bad = [r for r in rows if r["status"] != "ok"]
    if any(r["status"] == "fail" or r["status"] == "error" for r in bad):
        return EXIT_CHECK
    if bad:
        return EXIT_TIMEOUT
    return EXIT_OK


def cmd_selftest(args) -> int:
    from .selftest import regenerate_baselines, run_selftest

    if args.regenerate_baselines:
        data = regenerate_baselines()
        print(f"wrote engine baselines for {len(data)} corpus entries")
    results = run_selftest(CORPUS, pattern=args.filter)
    width = max((len(r.name) for r in results), default=10)
    for r in results:
        mark = "PASS" if r.passed else "FAIL"
        if args.json:
            print(_dump({"check": r.name, "passed": r.passed, "detail": r.detail, "anomalies": r.anomalies}))
        else:
            print(f"{mark}  {r.name.ljust(width)}  {r.detail}")
            for a in r.anomalies:
                print(f"      anomaly: {a}")
    failed = sum(not r.passed for r in results)
    if not args.json:
        print(f"{len(results) - failed}/{len(results)} checks passed (kernel backend: {kernels.default_backend_name()})")
    return EXIT_OK if failed == 0 else EXIT_CHECK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="milnor", description="Milnor algebra invariants of projective hypersurfaces."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, json_flag=True):
        if json_flag:
            p.add_argument("--json", action="store_true", help="line-delimited JSON output")
        p.add_argument("--timeout-secs", type=float, default=DEFAULT_TIMEOUT)

    p = sub.add_parser("compute", help="invariants of one polynomial")
    p.add_argument("--vars", required=True, help="comma-separated variable names, e.g. x,y,z")
    p.add_argument("--poly", required=True, help="polynomial text with explicit * and ^")
    p.add_argument("--max-degree", type=int, default=None, help="last degree of the printed series")
    common(p)
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("example", help="run one built-in example against its stated values")
    p.add_argument("name")
    p.add_argument("--max-degree", type=int, default=None)
    common(p)
    p.set_defaults(func=cmd_example)

    p = sub.add_parser("family", help="sweep a degree family")
    p.add_argument("family", choices=["st", "cd"])
    p.add_argument("--degrees", default="5..15", help="degree range A..B")
    p.add_argument("--jobs", type=int, default=1)
    common(p)
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("selftest", help="corpus, property suites and engine baselines")
    p.add_argument("--filter", default=None, help="run only checks whose name or tags contain this")
    p.add_argument("--regenerate-baselines", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_selftest)

    p = sub.add_parser("list-examples", help="list built-in examples")
    p.set_defaults(func=cmd_list)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except NonIsolatedError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NON_ISOLATED
    except ComputationTimeout as exc:
        print(f"timeout: {exc}", file=sys.stderr)
        return EXIT_TIMEOUT
    except (ConsistencyError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CHECK


if __name__ == "__main__":
    sys.exit(main())
