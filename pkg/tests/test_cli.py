import dataclasses
import json
import subprocess
import sys

import pytest

from milnor import cli
from milnor.corpus import CORPUS, Expectation, get_entry
from milnor.invariants import InvariantReport


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_compute_text(capsys):
    code, out, _ = run(capsys, "compute", "--vars", "x,y,z", "--poly", "x*y*z")
    assert code == 0
    assert "tau" in out and "free" in out and "yes" in out


def test_compute_json_round_trip(capsys):
    code, out, _ = run(capsys, "compute", "--vars", "x,y,z", "--poly", "x*(x*z+y^2)", "--json")
    assert code == 0
    rec = json.loads(out)
    assert (rec["tau"], rec["ct"], rec["st"], rec["sat"], rec["free"]) == (3, 2, 1, 0, True)
    assert rec["series"][:4] == [1, 3, 3, 3]
    assert InvariantReport.from_record(rec).to_record() == rec


def test_compute_json_smooth(capsys):
    code, out, _ = run(capsys, "compute", "--vars", "x,y,z", "--poly", "x^3+y^3+z^3", "--json")
    rec = json.loads(out)
    assert code == 0 and rec["ct"] == "infinite" and rec["reg"] is None


def test_compute_is_deterministic(capsys):
    args = ("compute", "--vars", "x,y,z", "--poly", "x^4*y+x^3*y^2+y^5+x*y^2*z^2+(x^2+x*y+y^2)*z^3", "--json")
    _, first, _ = run(capsys, *args)
    _, second, _ = run(capsys, *args)
    assert first == second


def test_max_degree(capsys):
    _, out, _ = run(capsys, "compute", "--vars", "x,y,z", "--poly", "x*y*z", "--json", "--max-degree", "9")
    assert len(json.loads(out)["series"]) == 10


@pytest.mark.parametrize(
    "poly, code",
    [("x*+y", cli.EXIT_PARSE), ("x*w", cli.EXIT_PARSE), ("x^2*y^2*(x+y)", cli.EXIT_NON_ISOLATED), ("x^3+y", cli.EXIT_CHECK)],
)
def test_exit_codes(capsys, poly, code):
    got, _, err = run(capsys, "compute", "--vars", "x,y,z", "--poly", poly)
    assert got == code
    assert err


def test_timeout_exit_code(capsys):
    code, _, err = run(
        capsys, "compute", "--vars", "x,y,z", "--poly", "x^2*y^2*z^11+x^5*z^10+y^5*z^10+x^15+y^15",
        "--timeout-secs", "0.01",
    )
    assert code == cli.EXIT_TIMEOUT
    assert "timeout" in err


def test_example(capsys):
    code, out, _ = run(capsys, "example", "triangle")
    assert code == 0
    assert "PASS" in out and "FAIL" not in out


def test_example_json(capsys):
    code, out, _ = run(capsys, "example", "nodal-quintic", "--json")
    rec = json.loads(out)
    assert code == 0 and rec["ok"] and rec["tau"] == 1 and rec["st"] == 9


def test_unknown_example(capsys):
    code, _, err = run(capsys, "example", "no-such-thing")
    assert code == cli.EXIT_CHECK
    assert "available" in err


def test_list_examples(capsys):
    code, out, _ = run(capsys, "list-examples")
    assert code == 0
    assert len(out.strip().splitlines()) == len(CORPUS)


def test_family_rows(capsys):
    code, out, _ = run(capsys, "family", "cd", "--degrees", "5..7", "--json")
    rows = [json.loads(line) for line in out.splitlines()]
    assert code == 0
    assert [r["d"] for r in rows] == [5, 6, 7]
    assert all(r["tau"] == 10 and r["free"] is False for r in rows)
    assert [r["ct"] for r in rows] == [6, 9, 12]


def test_family_parallel_matches_serial(capsys):
    _, serial, _ = run(capsys, "family", "st", "--degrees", "5..7", "--json")
    _, parallel, _ = run(capsys, "family", "st", "--degrees", "5..7", "--json", "--jobs", "2")
    assert serial == parallel


def test_family_table(capsys):
    code, out, _ = run(capsys, "family", "st", "--degrees", "5..6")
    assert code == 0
    assert out.splitlines()[0].split()[:3] == ["d", "T", "tau"]


def test_family_rejects_low_degree(capsys):
    code, _, _ = run(capsys, "family", "st", "--degrees", "3..6")
    assert code == cli.EXIT_CHECK


def test_selftest_filter(capsys):
    code, out, _ = run(capsys, "selftest", "--filter", "triangle")
    assert code == 0
    assert "1/1 checks passed" in out


def test_selftest_json(capsys):
    code, out, _ = run(capsys, "selftest", "--filter", "smooth", "--json")
    rec = json.loads(out.splitlines()[0])
    assert code == 0 and rec["passed"]


@pytest.fixture
def corrupted_corpus(monkeypatch):
    entry = get_entry("triangle")
    bad = dataclasses.replace(entry, expected=entry.expected + (Expectation("tau", 4),))
    monkeypatch.setattr(cli, "CORPUS", (bad,) + tuple(e for e in CORPUS if e.name != "triangle"))


def test_selftest_flags_corrupted_corpus(capsys, corrupted_corpus):
    code, out, _ = run(capsys, "selftest", "--filter", "triangle")
    assert code == cli.EXIT_CHECK
    assert "FAIL" in out and "tau: expected 4, got 3" in out


def test_soft_expectation_is_anomaly_not_failure(capsys, monkeypatch):
    entry = get_entry("c-5")
    odd = dataclasses.replace(entry, expected=entry.expected + (Expectation("st", 99, hard=False),))
    monkeypatch.setattr(cli, "CORPUS", (odd,))
    code, out, _ = run(capsys, "selftest", "--filter", "c-5")
    assert code == 0
    assert "anomaly: st: expected 99" in out


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "milnor", "compute", "--vars", "x,y,z", "--poly", "x*y*z", "--json"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["tau"] == 3
