"""Compare the compiled and pure-Python reduction kernels.

Usage: python benchmarks/bench_kernels.py [--repeat N] [--quick]

Each workload runs end to end (Groebner basis of the Jacobian ideal, then
saturation) once per backend; the best of ``--repeat`` runs is reported.
Results of the two backends are compared for equality.
"""

from __future__ import annotations

import argparse
import itertools
import random
import time

from milnor import Polynomial, Ring, buchberger, parse_polynomial, partial_derivative, saturate_irrelevant
from milnor import kernels
from milnor.corpus import family_polynomial

A3 = "(x^2-y^2)*(y^2-z^2)*(x^2-z^2)"


def dense_form(variables: str, d: int, seed: int = 1) -> Polynomial:
    """Random dense form: coefficient growth dominates, unlike the sparse corpus."""
    ring = Ring.of(variables)
    rng = random.Random(seed)
    terms = {
        e: rng.randint(-5, 5) for e in itertools.product(range(d + 1), repeat=ring.nvars) if sum(e) == d
    }
    return Polynomial(ring, terms)


def workloads(quick: bool):
    xyz = Ring.of("x,y,z")
    yield "xyz*A3", parse_polynomial(f"x*y*z*{A3}", xyz)
    yield "simis", parse_polynomial("4*(x^2+y^2+x*z)^3-27*(x^2+y^2)^2*z^2", xyz)
    for d in (8, 11) if quick else (8, 11, 15):
        yield f"st-{d}", parse_polynomial(family_polynomial("st", d), xyz)
        yield f"c-{d}", parse_polynomial(family_polynomial("cd", d), xyz)
    yield "dense-7", dense_form("x,y,z", 7)
    yield "dense-4v4", dense_form("w,x,y,z", 4)
    if not quick:
        yield "dense-8", dense_form("x,y,z", 8)


def run_once(f: Polynomial):
    t0 = time.perf_counter()
    G = buchberger([partial_derivative(f, i) for i in range(f.ring.nvars)])
    t1 = time.perf_counter()
    S = saturate_irrelevant(G)
    t2 = time.perf_counter()
    return (t1 - t0, t2 - t1), (G.elements, S.elements)


def best_of(f: Polynomial, backend: str, repeat: int):
    kernels.force_backend(backend)
    try:
        runs = [run_once(f) for _ in range(repeat)]
    finally:
        kernels.force_backend(None)
    gb = min(r[0][0] for r in runs)
    sat = min(r[0][1] for r in runs)
    return gb, sat, runs[0][1]


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--quick", action="store_true", help="skip the largest inputs")
    args = ap.parse_args(argv)
    if not kernels.COMPILED_AVAILABLE:
        print("compiled kernels are not built; nothing to compare")
        return 1
    print(f"{'input':10s} {'python gb':>10s} {'cython gb':>10s} {'python sat':>11s} {'cython sat':>11s} {'speedup':>8s}")
    mismatches = 0
    for name, f in workloads(args.quick):
        pg, ps, pres = best_of(f, "python", args.repeat)
        cg, cs, cres = best_of(f, "cython", args.repeat)
        same = pres == cres
        mismatches += not same
        speedup = (pg + ps) / (cg + cs)
        print(
            f"{name:10s} {pg:10.4f} {cg:10.4f} {ps:11.4f} {cs:11.4f} {speedup:7.2f}x"
            + ("" if same else "  RESULTS DIFFER")
        )
    return 1 if mismatches else 0


if __name__ == "__main__":
    raise SystemExit(main())
