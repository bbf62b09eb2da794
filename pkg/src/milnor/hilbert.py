"""Hilbert-Poincare series of graded quotients S/I.

Series are kept exactly as ``numerator / (1 - t)^k`` with integer numerator
coefficients (lowest degree first).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Sequence

from .groebner import MonomialIdeal

__all__ = [
    "HilbertSeries",
    "SeriesPrefix",
    "ZeroModuleError",
    "hilbert_numerator",
    "hilbert_series",
    "expand",
    "reduce_form",
    "smooth_series",
    "poly_mul",
    "poly_trim",
]


class ZeroModuleError(ValueError):
    """The series is identically zero (quotient by the unit ideal)."""


def poly_trim(p: Sequence[int]) -> tuple[int, ...]:
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return tuple(p)


def poly_mul(a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return poly_trim(out)


def _poly_add(a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    n = max(len(a), len(b))
    return poly_trim([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)])


def _one_minus_t_power(e: int) -> tuple[int, ...]:
    return tuple((-1) ** i * comb(e, i) for i in range(e + 1))


@dataclass(frozen=True)
class HilbertSeries:
    """``numerator(t) / (1 - t)^denominator_exponent``."""

    numerator: tuple[int, ...]
    denominator_exponent: int

    def __post_init__(self):
        object.__setattr__(self, "numerator", poly_trim(self.numerator))

    def expand(self, bound: int) -> "SeriesPrefix":
        return expand(self, bound)

    def reduce(self) -> tuple[tuple[int, ...], int]:
        return reduce_form(self)

    def __sub__(self, other: "HilbertSeries") -> "HilbertSeries":
        k = max(self.denominator_exponent, other.denominator_exponent)
        a = poly_mul(self.numerator, _one_minus_t_power(k - self.denominator_exponent))
        b = poly_mul(other.numerator, _one_minus_t_power(k - other.denominator_exponent))
        return HilbertSeries(_poly_add(a, [-x for x in b]), k)

    def polynomial_part(self) -> tuple[int, ...]:
        """Exact quotient numerator / (1-t)^k when it is a polynomial."""
        p = list(self.numerator)
        for _ in range(self.denominator_exponent):
            p = _divide_one_minus_t(p)
            if p is None:
                raise ValueError("series is not a polynomial")
        return poly_trim(p)


@dataclass(frozen=True)
class SeriesPrefix:
    """Coefficients ``c_0..c_N``; ``stable_value`` is the eventual constant, if any."""

    coefficients: tuple[int, ...]
    stable_value: int | None = None

    def __getitem__(self, k: int) -> int:
        return self.coefficients[k]

    def __len__(self) -> int:
        return len(self.coefficients)


def _divide_one_minus_t(p: Sequence[int]) -> list[int] | None:
    """Exact division by (1 - t), or ``None`` when (1 - t) does not divide."""
    if sum(p) != 0:
        return None
    # p = (1 - t) q  =>  q_k = sum_{i<=k} p_i
    q, acc = [], 0
    for c in p[:-1]:
        acc += c
        q.append(acc)
    return q


def _numerator_rec(gens: tuple[tuple[int, ...], ...], nvars: int) -> tuple[int, ...]:
    if not gens:
        return (1,)
    if any(sum(g) == 0 for g in gens):
        return ()
    if all(sum(1 for e in g if e) == 1 for g in gens):
        result: tuple[int, ...] = (1,)
        for g in gens:
            result = poly_mul(result, (1,) + (0,) * (sum(g) - 1) + (-1,))
        return result
    top = max(gens, key=lambda g: (sum(g), g))
    # pivot: the variable with the largest exponent in a top-degree generator
    v = max(range(nvars), key=lambda i: (top[i], -i))
    plus = _minimalize([g for g in gens if g[v] == 0] + [tuple(1 if i == v else 0 for i in range(nvars))])
    colon = _minimalize(
        [tuple(e - 1 if (i == v and e > 0) else e for i, e in enumerate(g)) for g in gens]
    )
    return _poly_add(_numerator_cached(plus, nvars), (0,) + _numerator_cached(colon, nvars))


def _minimalize(gens) -> tuple[tuple[int, ...], ...]:
    ordered = sorted(set(gens), key=lambda g: (sum(g), g))
    out: list[tuple[int, ...]] = []
    for g in ordered:
        if not any(all(a <= b for a, b in zip(h, g)) for h in out):
            out.append(g)
    return tuple(out)


@lru_cache(maxsize=1 << 16)
def _numerator_cached(gens: tuple[tuple[int, ...], ...], nvars: int) -> tuple[int, ...]:
    return _numerator_rec(gens, nvars)


def hilbert_numerator(ideal: MonomialIdeal, nvars: int | None = None) -> tuple[int, ...]:
    """Numerator ``P`` with ``HP(S/I) = P(t) / (1 - t)^nvars``."""
    nvars = ideal.nvars if nvars is None else nvars
    gens = _minimalize(m.exponents for m in ideal.generators)
    return _numerator_cached(gens, nvars)


def hilbert_series(ideal: MonomialIdeal) -> HilbertSeries:
    return HilbertSeries(hilbert_numerator(ideal), ideal.nvars)


def expand(series: HilbertSeries, bound: int) -> SeriesPrefix:
    """Exact coefficients ``c_0..c_bound`` of the power series."""
    if bound < 0:
        raise ValueError("bound must be nonnegative")
    c = list(series.numerator[: bound + 1]) + [0] * max(0, bound + 1 - len(series.numerator))
    for _ in range(series.denominator_exponent):
        acc = 0
        for k in range(bound + 1):
            acc += c[k]
            c[k] = acc
    stable = None
    try:
        q, dim = reduce_form(series)
        if dim == 0:
            stable = 0
        elif dim == 1:
            stable = sum(q)
    except ZeroModuleError:
        stable = 0
    return SeriesPrefix(tuple(c), stable)


def reduce_form(series: HilbertSeries) -> tuple[tuple[int, ...], int]:
    """Return ``(Q, dim)`` with ``P = (1-t)^(k-dim) * Q`` and ``Q(1) != 0``."""
    p = list(series.numerator)
    if not p:
        raise ZeroModuleError("zero Hilbert series (unit ideal)")
    dim = series.denominator_exponent
    while True:
        q = _divide_one_minus_t(p)
        if q is None:
            break
        p = q
        dim -= 1
    return tuple(p), dim


def smooth_series(n: int, d: int) -> SeriesPrefix:
    """Series of the Milnor algebra of a smooth degree-``d`` hypersurface in P^n."""
    if d < 2 or n < 1:
        raise ValueError("need d >= 2 and n >= 1")
    coeffs: tuple[int, ...] = (1,)
    block = (1,) * (d - 1)
    for _ in range(n + 1):
        coeffs = poly_mul(coeffs, block)
    return SeriesPrefix(coeffs, 0)
