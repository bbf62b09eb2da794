"""Saturation with respect to the irrelevant ideal and the saturation defect.

``I : (x_0, ..., x_n)^inf`` is the intersection of the single-variable
saturations ``I : x_i^inf``. Each of those is read off a degrevlex basis
in which ``x_i`` is the last variable (divide out the largest power of
``x_i``); intersections go through an auxiliary elimination variable.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import kernels
from ._packing import Encoding
from .groebner import (
    GroebnerBasis,
    _encode_terms,
    _encoding_for,
    _reencode,
    groebner_internal,
    lead_term_ideal,
)
from .hilbert import HilbertSeries, hilbert_series
from .polynomial import MonomialOrder

__all__ = [
    "SaturationResult",
    "UnitIdealError",
    "convert_order",
    "colon_var_saturate",
    "intersect",
    "saturate_irrelevant",
    "sat_threshold",
    "defect_dims",
    "saturation",
]


class UnitIdealError(ValueError):
    pass


@dataclass(frozen=True)
class SaturationResult:
    saturated_ideal: GroebnerBasis
    sat_threshold: int
    defect_dims: tuple[tuple[int, int], ...]


def convert_order(G: GroebnerBasis, order: MonomialOrder) -> GroebnerBasis:
    """Reduced basis of the same ideal in another degrevlex variable order."""
    if order == G.order:
        return G
    enc = _encoding_for(order)
    kern = kernels.backend_for(enc)
    internal = [_reencode(p, G._enc, enc, kern) for p in G._internal]
    return GroebnerBasis(G.ring, order, groebner_internal(internal, enc, kern), enc)


def _divide_out(p, enc: Encoding, var: int, kern):
    items = [(enc.unpack(e), c) for e, c in zip(p[1], p[2])]
    low = min(e[var] for e, _ in items)
    if low == 0:
        return p, False
    shifted = []
    for e, c in items:
        e = list(e)
        e[var] -= low
        shifted.append((tuple(e), c))
    return _encode_terms(shifted, enc, kern), True


def colon_var_saturate(G: GroebnerBasis, i: int) -> GroebnerBasis:
    """Reduced basis of ``I : x_i^inf`` in the order of ``G``."""
    nvars = G.ring.nvars
    if not 0 <= i < nvars:
        raise IndexError(f"variable index {i} out of range")
    order = MonomialOrder.with_last(nvars, i)
    work = convert_order(G, order)
    enc, kern = work._enc, work.kernel
    internal = work._internal
    while True:
        divided = [_divide_out(p, enc, i, kern) for p in internal]
        if not any(changed for _, changed in divided):
            break
        internal = groebner_internal([p for p, _ in divided], enc, kern)
    return convert_order(GroebnerBasis(G.ring, order, internal, enc), G.order)


def intersect(I: GroebnerBasis, J: GroebnerBasis) -> GroebnerBasis:
    """Reduced basis of ``I ∩ J`` by eliminating ``s`` from ``s*I + (1-s)*J``.

    The elimination order puts ``s`` strictly above every ring variable
    (block order) and uses the degrevlex order of ``I`` inside the ring block.
    """
    if I.ring != J.ring:
        raise ValueError("mismatched rings")
    if I.order != J.order:
        J = convert_order(J, I.order)
    if I.is_unit():
        return J
    if J.is_unit():
        return I
    enc = Encoding(I.ring.nvars, I.order.permutation, aux=True)
    kern = kernels.backend_for(enc)
    gens = []
    for p in I._internal:
        gens.append(_encode_terms([(e + (1,), c) for e, c in _unpacked(p, I._enc)], enc, kern))
    for p in J._internal:
        items = _unpacked(p, J._enc)
        both = [(e + (0,), c) for e, c in items] + [(e + (1,), -c) for e, c in items]
        gens.append(_encode_terms(both, enc, kern))
    basis = groebner_internal(gens, enc, kern)
    aux_shift = enc.shifts[-1]
    kept = [p for p in basis if not (p[1][0] >> aux_shift) & enc.field_mask]
    base_enc = I._enc
    base_kern = kernels.backend_for(base_enc)
    out = [_reencode(p, enc, base_enc, base_kern, drop_aux=True) for p in kept]
    return GroebnerBasis(I.ring, I.order, groebner_internal(out, base_enc, base_kern), base_enc)


def _unpacked(p, enc: Encoding):
    return [(enc.unpack(e), c) for e, c in zip(p[1], p[2])]


def _series(G: GroebnerBasis) -> HilbertSeries:
    return hilbert_series(lead_term_ideal(G))


def _same_hilbert_polynomial(a: HilbertSeries, b: HilbertSeries) -> bool:
    try:
        (a - b).polynomial_part()
    except ValueError:
        return False
    return True


def saturate_irrelevant(G: GroebnerBasis, strategy: str = "auto") -> GroebnerBasis:
    """Reduced basis of ``I : m^inf`` for the irrelevant ideal ``m``.

    ``strategy="intersect"`` always intersects all single-variable
    saturations. ``"auto"`` stops as soon as the partial intersection has
    the Hilbert polynomial of ``I``: a saturated ideal containing the
    saturation of ``I`` with the same Hilbert polynomial equals it.
    A unit result means the quotient ``S/I`` is artinian.
    """
    if G.is_unit():
        raise UnitIdealError("cannot saturate the unit ideal")
    if strategy not in ("auto", "intersect"):
        raise ValueError(f"unknown strategy {strategy!r}")
    target = _series(G)
    colons = [colon_var_saturate(G, i) for i in range(G.ring.nvars)]
    if strategy == "auto":
        for Q in colons:
            if _same_hilbert_polynomial(_series(Q), target):
                return Q
    acc = colons[0]
    for Q in colons[1:]:
        if strategy == "auto" and _same_hilbert_polynomial(_series(acc), target):
            break
        acc = intersect(acc, Q)
    return acc


def sat_threshold(G: GroebnerBasis, Gsat: GroebnerBasis) -> int:
    """Least ``q`` with ``dim I_k == dim Isat_k`` for every ``k >= q``.

    Read from the exact difference of the two Hilbert series, which is a
    polynomial.
    """
    diff = _defect_polynomial(G, Gsat)
    return len(diff)


def _defect_polynomial(G: GroebnerBasis, Gsat: GroebnerBasis) -> tuple[int, ...]:
    if G.ring != Gsat.ring:
        raise ValueError("mismatched rings")
    try:
        diff = (_series(G) - _series(Gsat)).polynomial_part()
    except ValueError as exc:
        raise ValueError("ideals do not agree in high degrees; not a saturation pair") from exc
    if any(c < 0 for c in diff):
        raise ValueError("second ideal does not contain the first")
    return diff


def defect_dims(G: GroebnerBasis, Gsat: GroebnerBasis, bound: int) -> list[tuple[int, int]]:
    """``(k, dim (Isat/I)_k)`` for ``0 <= k <= bound``."""
    diff = _defect_polynomial(G, Gsat)
    return [(k, diff[k] if k < len(diff) else 0) for k in range(bound + 1)]


def saturation(G: GroebnerBasis, bound: int, strategy: str = "auto") -> SaturationResult:
    Gsat = saturate_irrelevant(G, strategy)
    return SaturationResult(Gsat, sat_threshold(G, Gsat), tuple(defect_dims(G, Gsat, bound)))
