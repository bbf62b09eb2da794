"""Independent reference computations used only by the tests.

Nothing here goes through the Groebner engine or the Hilbert numerator
recursion: graded dimensions come from enumerating monomials and from ranks
of explicit coefficient matrices.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations_with_replacement
from typing import Iterable, Sequence


def monomials_of_degree(nvars: int, k: int) -> list[tuple[int, ...]]:
    out = []
    for combo in combinations_with_replacement(range(nvars), k):
        e = [0] * nvars
        for v in combo:
            e[v] += 1
        out.append(tuple(e))
    return out


def divides(a: Sequence[int], b: Sequence[int]) -> bool:
    return all(x <= y for x, y in zip(a, b))


def standard_monomial_counts(gens: Iterable[Sequence[int]], nvars: int, bound: int) -> list[int]:
    """``dim (S/I)_k`` for a monomial ideal, by counting monomials outside it."""
    gens = [tuple(g) for g in gens]
    return [
        sum(1 for m in monomials_of_degree(nvars, k) if not any(divides(g, m) for g in gens))
        for k in range(bound + 1)
    ]


def series_times_one_minus_t(coeffs: Sequence[int], power: int) -> list[int]:
    """Multiply a truncated power series by ``(1 - t)^power``."""
    c = list(coeffs)
    for _ in range(power):
        c = [c[0]] + [c[i] - c[i - 1] for i in range(1, len(c))]
    return c


def exact_rank(rows: list[dict]) -> int:
    """Rank over Q of sparse rows ``{column: value}`` by Gaussian elimination."""
    pivots: dict = {}
    rank = 0
    for row in rows:
        row = {k: Fraction(v) for k, v in row.items() if v}
        while row:
            col = max(row)
            if col not in pivots:
                lead = row[col]
                pivots[col] = {k: v / lead for k, v in row.items()}
                rank += 1
                break
            factor = row[col]
            for k, v in pivots[col].items():
                nv = row.get(k, 0) - factor * v
                if nv:
                    row[k] = nv
                else:
                    row.pop(k, None)
    return rank


def ideal_degree_dimension(gens: Sequence[dict], nvars: int, k: int) -> int:
    """``dim I_k`` for the ideal generated by homogeneous ``gens``.

    Each generator is ``{exponent tuple: coefficient}``. The degree-``k``
    piece is spanned by monomial multiples of the generators.
    """
    rows = []
    for g in gens:
        deg = sum(next(iter(g)))
        if deg > k:
            continue
        for m in monomials_of_degree(nvars, k - deg):
            rows.append({tuple(a + b for a, b in zip(e, m)): c for e, c in g.items()})
    return exact_rank(rows)


def quotient_dims(gens: Sequence[dict], nvars: int, bound: int) -> list[int]:
    """``dim (S/I)_k`` for ``0 <= k <= bound`` via explicit ranks."""
    out = []
    for k in range(bound + 1):
        total = len(monomials_of_degree(nvars, k))
        out.append(total - ideal_degree_dimension(gens, nvars, k))
    return out


def to_dicts(polys) -> list[dict]:
    return [p.as_dict() for p in polys if not p.is_zero()]
