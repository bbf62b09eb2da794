"""Packed integer monomials used inside the Groebner engine.

A monomial is carried as two integers:

* ``key``: an order key that is *additive* (key(u*v) == key(u) + key(v)) and
  whose integer comparison is the monomial order;
* ``exps``: exponents in fixed-width bit fields, each with a guard bit, so
  divisibility is a single subtract-and-mask.

The order is degrevlex on a permuted variable sequence, optionally preceded
by one auxiliary elimination variable that dominates everything and has
weight zero in the grading.
"""

from __future__ import annotations

from typing import Sequence

WIDTH = 12
BASE = 1 << WIDTH
MAX_EXPONENT = (1 << (WIDTH - 1)) - 1


class Encoding:
    """Monomial packing for ``nvars`` ring variables (+ optional aux variable).

    Exponent vectors passed in and out have the ring variables first and the
    auxiliary exponent last when ``aux`` is set.
    """

    def __init__(self, nvars: int, permutation: Sequence[int] | None = None, aux: bool = False):
        self.nvars = nvars
        self.permutation = tuple(permutation) if permutation is not None else tuple(range(nvars))
        self.aux = aux
        self.nfields = nvars + (1 if aux else 0)
        k = nvars - 1
        # key = aux*B^(k+1) + deg*B^k - sum_{j>=1} e_{perm[j]} * B^(j-1)
        weights = [0] * self.nfields
        for pos, var in enumerate(self.permutation):
            weights[var] = BASE**k - (BASE ** (pos - 1) if pos >= 1 else 0)
        if aux:
            weights[nvars] = BASE ** (k + 1)
        self.weights = tuple(weights)
        self.shifts = tuple(WIDTH * i for i in range(self.nfields))
        self.guard = sum(1 << (s + WIDTH - 1) for s in self.shifts)
        self.field_mask = BASE - 1
        key_digits = k + 1 + (1 if aux else 0)
        self.fits64 = key_digits * WIDTH <= 64 and self.nfields * WIDTH <= 64

    def __eq__(self, other):
        return (
            isinstance(other, Encoding)
            and (self.nvars, self.permutation, self.aux) == (other.nvars, other.permutation, other.aux)
        )

    def __hash__(self):
        return hash((self.nvars, self.permutation, self.aux))

    def key(self, exps: Sequence[int]) -> int:
        return sum(w * e for w, e in zip(self.weights, exps))

    def pack(self, exps: Sequence[int]) -> int:
        packed = 0
        for s, e in zip(self.shifts, exps):
            if e > MAX_EXPONENT:
                raise OverflowError(f"exponent {e} exceeds packing limit {MAX_EXPONENT}")
            packed |= e << s
        return packed

    def unpack(self, packed: int) -> tuple[int, ...]:
        m = self.field_mask
        return tuple((packed >> s) & m for s in self.shifts)

    def encode(self, exps: Sequence[int]) -> tuple[int, int]:
        if len(exps) != self.nfields:
            raise ValueError(f"expected {self.nfields} exponents, got {len(exps)}")
        if sum(exps[: self.nvars]) >= BASE - 1:
            raise OverflowError("monomial degree exceeds packing limit")
        return self.key(exps), self.pack(exps)

    def divides(self, a: int, b: int) -> bool:
        g = self.guard
        return ((b | g) - a) & g == g

    def lcm(self, a: int, b: int) -> tuple[int, int]:
        """Return ``(key, packed)`` of lcm of two packed monomials."""
        ea, eb = self.unpack(a), self.unpack(b)
        return self.encode([max(x, y) for x, y in zip(ea, eb)])

    def coprime(self, a: int, b: int) -> bool:
        ea, eb = self.unpack(a), self.unpack(b)
        return all(x == 0 or y == 0 for x, y in zip(ea, eb))

    def degree(self, packed: int) -> int:
        """Grading degree (the auxiliary variable has weight zero)."""
        return sum(self.unpack(packed)[: self.nvars])
