"""Reduced Groebner bases of homogeneous ideals.

Buchberger's algorithm with the normal selection strategy (smallest lcm
degree first, ties broken by pair indices) and the Gebauer-Moeller
installation of the coprime and chain criteria. Internally every polynomial
is integer-primitive; the public :class:`GroebnerBasis` exposes monic
rational polynomials.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence

from . import kernels
from ._packing import Encoding
from .polynomial import Monomial, MonomialOrder, NotHomogeneousError, Polynomial, Ring

__all__ = [
    "IdealGens",
    "GroebnerBasis",
    "MonomialIdeal",
    "buchberger",
    "normal_form",
    "lead_term_ideal",
    "ideal_contains",
    "ideal_equal",
    "s_polynomial",
]


@dataclass(frozen=True)
class IdealGens:
    """Generators of a homogeneous ideal; zero generators are dropped."""

    generators: tuple[Polynomial, ...]
    ring: Ring

    def __init__(self, generators: Iterable[Polynomial], ring: Ring | None = None):
        gens = tuple(g for g in generators if not g.is_zero())
        if ring is None:
            if not gens:
                raise ValueError("ring must be given for an ideal without nonzero generators")
            ring = gens[0].ring
        for g in gens:
            if g.ring != ring:
                raise ValueError("generators belong to different rings")
            if not g.is_homogeneous():
                raise NotHomogeneousError(f"generator {g} is not homogeneous")
        object.__setattr__(self, "generators", gens)
        object.__setattr__(self, "ring", ring)


@dataclass(frozen=True)
class MonomialIdeal:
    """Monomial ideal given by an antichain of minimal generators."""

    generators: tuple[Monomial, ...]
    nvars: int

    def __init__(self, generators: Iterable[Monomial], nvars: int):
        gens = sorted(set(generators), key=lambda m: (m.degree, m.exponents))
        minimal: list[Monomial] = []
        for m in gens:
            if len(m.exponents) != nvars:
                raise ValueError("generator has the wrong number of variables")
            if not any(g.divides(m) for g in minimal):
                minimal.append(m)
        object.__setattr__(self, "generators", tuple(minimal))
        object.__setattr__(self, "nvars", nvars)

    def contains(self, m: Monomial) -> bool:
        return any(g.divides(m) for g in self.generators)


# internal representation helpers


def _primitive(coefs: list[int]) -> list[int]:
    c = 0
    for x in coefs:
        c = gcd(c, x)
        if c == 1:
            break
    if coefs and coefs[0] < 0:
        c = -c
    if c in (0, 1):
        return coefs
    return [x // c for x in coefs]


def _encode_terms(items, enc: Encoding, kern):
    """Internal polynomial from ``(exponent tuple, int)`` pairs, made primitive."""
    rows = sorted(((*enc.encode(e), c) for e, c in items if c), reverse=True)
    coefs = _primitive([r[2] for r in rows])
    return kern.new_poly([r[0] for r in rows], [r[1] for r in rows], coefs)


def _integer_items(poly: Polynomial, extra: tuple[int, ...] = ()):
    den = 1
    for _, c in poly.terms:
        den = lcm(den, c.denominator)
    return [(m.exponents + extra, int(c * den)) for m, c in poly.terms]


def _encode_poly(poly: Polynomial, enc: Encoding, kern):
    extra = (0,) if enc.aux else ()
    return _encode_terms(_integer_items(poly, extra), enc, kern)


def _items(p, enc: Encoding):
    return [(enc.unpack(e), c) for e, c in zip(p[1], p[2])]


def _decode_poly(p, enc: Encoding, ring: Ring, order: MonomialOrder, monic: bool = True) -> Polynomial:
    lc = p[2][0] if (monic and len(p[2])) else 1
    return Polynomial(
        ring, {enc.unpack(e)[: ring.nvars]: Fraction(c, lc) for e, c in zip(p[1], p[2])}, order
    )


def _encoding_for(order: MonomialOrder) -> Encoding:
    return Encoding(order.nvars, order.permutation)


def _reencode(p, src: Encoding, dst: Encoding, kern_dst, drop_aux: bool = False):
    items = []
    for e, c in zip(p[1], p[2]):
        exps = src.unpack(e)
        if drop_aux:
            exps = exps[: dst.nfields]
        items.append((exps, c))
    return _encode_terms(items, dst, kern_dst)


class _PairInfo:
    __slots__ = ("deg", "i", "j", "lcm_key", "lcm_exps")

    def __init__(self, deg, i, j, lcm_key, lcm_exps):
        self.deg, self.i, self.j, self.lcm_key, self.lcm_exps = deg, i, j, lcm_key, lcm_exps

    def sort_key(self):
        return (self.deg, self.i, self.j)


def s_polynomial_internal(f, g, enc: Encoding, kern):
    lk, le = enc.lcm(f[1][0], g[1][0])
    a = g[2][0]
    b = f[2][0]
    h = gcd(a, b)
    a //= h
    b //= h
    if a < 0:
        a, b = -a, -b
    empty = kern.new_poly([], [], [])
    shifted_f = kern.lin_comb(1, empty, 0, -1, lk - f[0][0], le - f[1][0], f, 0)
    return kern.lin_comb(a, shifted_f, 1, b, lk - g[0][0], le - g[1][0], g, 1)


def _nf(f, basis: list, enc: Encoding, kern, full: bool = True):
    if not basis:
        return f, 1
    leads = [g[1][0] for g in basis]
    return kern.normal_form(f, basis, leads, enc.guard, full)


def _finish(p, kern):
    keys, exps, coefs = p
    return kern.new_poly(keys, exps, _primitive(list(coefs))) if len(coefs) else p


def groebner_internal(gens: list, enc: Encoding, kern) -> list:
    """Reduced Groebner basis (integer-primitive, positive lead coefficients).

    ``gens`` must be homogeneous in the grading where any auxiliary variable
    has weight zero. The result is sorted by increasing lead key.
    """
    polys: list = []  # every basis element ever installed, by index
    lead_exps: list[int] = []
    active: list[int] = []
    pairs: list[_PairInfo] = []

    def install(h):
        t = len(polys)
        polys.append(h)
        lead_exps.append(h[1][0])
        eh = h[1][0]
        # Gebauer-Moeller update
        cands = list(active)
        lcms = {g: enc.lcm(eh, lead_exps[g]) for g in cands}
        kept: list[int] = []
        remaining = list(cands)
        while remaining:
            g1 = remaining.pop(0)
            l1 = lcms[g1][1]
            if enc.coprime(eh, lead_exps[g1]):
                kept.append(g1)
                continue
            if any(enc.divides(lcms[g2][1], l1) for g2 in remaining) or any(
                enc.divides(lcms[g2][1], l1) for g2 in kept
            ):
                continue
            kept.append(g1)
        new_pairs = [g for g in kept if not enc.coprime(eh, lead_exps[g])]
        survivors = []
        for p in pairs:
            l12 = p.lcm_exps
            if (
                enc.divides(eh, l12)
                and enc.lcm(lead_exps[p.i], eh)[1] != l12
                and enc.lcm(lead_exps[p.j], eh)[1] != l12
            ):
                continue
            survivors.append(p)
        for g in new_pairs:
            lk, le = lcms[g]
            survivors.append(_PairInfo(enc.degree(le), g, t, lk, le))
        pairs[:] = survivors
        active[:] = [g for g in active if not enc.divides(eh, lead_exps[g])] + [t]

    def reducers():
        return [polys[g] for g in sorted(active, key=lambda g: (len(polys[g][2]), g))]

    pending = sorted(
        (g for g in gens if len(g[2])), key=lambda g: (enc.degree(g[1][0]), g[0][0])
    )
    pending_degrees = [enc.degree(g[1][0]) for g in pending]
    red = reducers()
    while pending or pairs:
        next_pair = min(pairs, key=_PairInfo.sort_key) if pairs else None
        if pending and (next_pair is None or pending_degrees[0] <= next_pair.deg):
            f = pending.pop(0)
            pending_degrees.pop(0)
        else:
            pairs.remove(next_pair)
            f = s_polynomial_internal(polys[next_pair.i], polys[next_pair.j], enc, kern)
        h, _ = _nf(f, red, enc, kern)
        if len(h[2]):
            install(_finish(h, kern))
            red = reducers()
            if h[1][0] == 0:
                return [kern.new_poly([0], [0], [1])]

    # interreduce the minimal basis
    minimal = sorted(active, key=lambda g: polys[g][0][0])
    reduced = []
    for g in minimal:
        others = [polys[o] for o in minimal if o != g]
        others.sort(key=lambda p: len(p[2]))
        r, _ = _nf(polys[g], others, enc, kern, full=True)
        reduced.append(_finish(r, kern))
    return reduced


class GroebnerBasis:
    """Reduced Groebner basis: monic elements sorted by increasing lead monomial."""

    def __init__(self, ring: Ring, order: MonomialOrder, internal: list, enc: Encoding):
        self.ring = ring
        self.order = order
        self._enc = enc
        self._internal = internal
        self.elements = tuple(_decode_poly(p, enc, ring, order) for p in internal)

    @property
    def kernel(self):
        return kernels.backend_for(self._enc)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def is_unit(self) -> bool:
        return any(g.degree == 0 for g in self.elements)

    def is_zero(self) -> bool:
        return not self.elements

    def lead_monomials(self) -> list[Monomial]:
        return [g.lead_monomial() for g in self.elements]

    def __repr__(self):
        body = ", ".join(str(g) for g in self.elements)
        return f"GroebnerBasis([{body}], order={self.order.permutation})"


def _check_compatible(ring: Ring, order: MonomialOrder, G: GroebnerBasis) -> None:
    if ring != G.ring:
        raise ValueError("mismatched rings")
    if order != G.order:
        raise ValueError("mismatched monomial orders")


def _internal_for(enc: Encoding, kern, polys: Sequence[Polynomial]) -> list:
    return [_encode_poly(p, enc, kern) for p in polys if not p.is_zero()]


def buchberger(ideal: IdealGens | Sequence[Polynomial], order: MonomialOrder | None = None) -> GroebnerBasis:
    """Reduced Groebner basis of a homogeneous ideal."""
    if not isinstance(ideal, IdealGens):
        ideal = IdealGens(ideal)
    ring = ideal.ring
    order = order if order is not None else ring.default_order()
    if order.nvars != ring.nvars:
        raise ValueError("order and ring have different variable counts")
    enc = _encoding_for(order)
    kern = kernels.backend_for(enc)
    internal = groebner_internal(_internal_for(enc, kern, ideal.generators), enc, kern)
    return GroebnerBasis(ring, order, internal, enc)


def basis_from_internal(ring: Ring, order: MonomialOrder, internal: list, enc: Encoding) -> GroebnerBasis:
    return GroebnerBasis(ring, order, internal, enc)


def normal_form(f: Polynomial, G: GroebnerBasis) -> Polynomial:
    """Exact remainder of ``f`` under the reduced basis ``G``."""
    _check_compatible(f.ring, f.order, G)
    if f.is_zero():
        return f
    den = 1
    for _, c in f.terms:
        den = lcm(den, c.denominator)
    content = 0
    ints = []
    for m, c in f.terms:
        v = int(c * den)
        content = gcd(content, v)
        ints.append((m.exponents, v))
    enc, kern = G._enc, G.kernel
    p = kern.new_poly(
        [enc.key(e) for e, _ in ints], [enc.pack(e) for e, _ in ints], [v // content for _, v in ints]
    )
    r, u = _nf(p, G._internal, enc, kern)
    scale = Fraction(content, den * u)
    return Polynomial(
        f.ring, {enc.unpack(e): c * scale for e, c in zip(r[1], r[2])}, f.order
    )


def s_polynomial(f: Polynomial, g: Polynomial) -> Polynomial:
    """S-polynomial of two nonzero polynomials sharing ring and order."""
    f._check(g)
    m = f.lead_monomial().lcm(g.lead_monomial())

    def cofactor(p: Polynomial) -> Polynomial:
        e = tuple(a - b for a, b in zip(m.exponents, p.lead_monomial().exponents))
        return Polynomial.monomial(p.ring, e, 1 / p.lead_coefficient(), p.order)

    return cofactor(f) * f - cofactor(g) * g


def lead_term_ideal(G: GroebnerBasis) -> MonomialIdeal:
    return MonomialIdeal(G.lead_monomials(), G.ring.nvars)


def ideal_contains(G: GroebnerBasis, f: Polynomial) -> bool:
    return normal_form(f, G).is_zero()


def ideal_equal(I: GroebnerBasis, J: GroebnerBasis) -> bool:
    if I.ring != J.ring:
        raise ValueError("mismatched rings")
    if I.order != J.order:
        raise ValueError("mismatched monomial orders")
    return set(I.elements) == set(J.elements)
