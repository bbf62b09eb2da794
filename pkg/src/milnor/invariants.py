"""Invariants of projective hypersurfaces from their graded Milnor algebra.

For a homogeneous ``f`` of degree ``d`` in ``n + 1`` variables, with
``T = (n + 1)(d - 2)``: total Tjurina number, coincidence and stability
thresholds, saturation threshold of the Jacobian ideal, freeness, and the
regularity ``max(T - ct, sat - 1)``.
"""

from __future__ import annotations

import enum
from dataclasses import asdict, dataclass
from typing import Any

from .groebner import GroebnerBasis, buchberger, ideal_equal, lead_term_ideal
from .hilbert import HilbertSeries, SeriesPrefix, expand, hilbert_series, reduce_form, smooth_series
from .polynomial import NotHomogeneousError, Polynomial, euler_check, partial_derivative
from .saturation import defect_dims, sat_threshold, saturate_irrelevant

__all__ = [
    "Singularity",
    "NonIsolatedError",
    "ConsistencyError",
    "InvariantReport",
    "Theorem1Verdict",
    "MilnorAlgebra",
    "milnor_algebra",
    "check_isolated",
    "total_tjurina",
    "coincidence_threshold",
    "stability_threshold",
    "stability_threshold_scan",
    "freeness",
    "regularity",
    "sat_bound_check",
    "theorem1_check",
    "full_report",
]


class Singularity(enum.Enum):
    SMOOTH = "smooth"
    ISOLATED = "isolated"
    NON_ISOLATED = "non_isolated"


class NonIsolatedError(ValueError):
    def __init__(self, krull_dim: int):
        super().__init__(
            f"singular locus is not isolated: Milnor algebra has Krull dimension {krull_dim}"
        )
        self.krull_dim = krull_dim


class ConsistencyError(AssertionError):
    """Two independent computations of the same invariant disagree."""


@dataclass(frozen=True)
class MilnorAlgebra:
    jacobian: GroebnerBasis
    series: HilbertSeries


def _jacobian_generators(f: Polynomial) -> list[Polynomial]:
    return [partial_derivative(f, i) for i in range(f.ring.nvars)]


def milnor_algebra(f: Polynomial) -> MilnorAlgebra:
    """Groebner basis of the Jacobian ideal and the Hilbert series of ``S/J_f``."""
    if f.is_zero() or not f.is_homogeneous():
        raise NotHomogeneousError("f must be a nonzero homogeneous polynomial")
    if f.degree < 3:
        raise ValueError(f"f must have degree at least 3, got {f.degree}")
    G = buchberger(_jacobian_generators(f), f.order)
    return MilnorAlgebra(G, hilbert_series(lead_term_ideal(G)))


def check_isolated(series: HilbertSeries) -> tuple[Singularity, int]:
    """Classify by the Krull dimension of the Milnor algebra."""
    _, dim = reduce_form(series)
    if dim == 0:
        return Singularity.SMOOTH, 0
    if dim == 1:
        return Singularity.ISOLATED, 1
    return Singularity.NON_ISOLATED, dim


def total_tjurina(series: HilbertSeries) -> int:
    q, dim = reduce_form(series)
    if dim == 0:
        return 0
    if dim != 1:
        raise NonIsolatedError(dim)
    return sum(q)


def coincidence_threshold(f_series: SeriesPrefix, smooth: SeriesPrefix) -> int | None:
    """Largest ``q`` with agreement in all degrees ``<= q``; ``None`` means infinite."""
    n = len(f_series)
    ref = list(smooth.coefficients) + [0] * max(0, n - len(smooth))
    for k in range(n):
        if f_series[k] != ref[k]:
            return k - 1
    if f_series.stable_value == 0 and len(f_series) > len(smooth.coefficients):
        return None
    raise ValueError("series prefixes agree on their whole length; extend the prefix")


def stability_threshold(series: HilbertSeries, tau: int | None = None) -> int:
    """``deg Q`` where ``HP = Q / (1 - t)``."""
    q, dim = reduce_form(series)
    if dim != 1:
        if dim == 0:
            return len(q)
        raise NonIsolatedError(dim)
    if tau is not None and sum(q) != tau:
        raise ValueError(f"tau={tau} does not match the series (Q(1)={sum(q)})")
    return len(q) - 1


def stability_threshold_scan(prefix: SeriesPrefix, tau: int) -> int:
    """Least ``q`` with ``c_k == tau`` for ``q <= k`` within the prefix."""
    coeffs = prefix.coefficients
    q = len(coeffs)
    while q > 0 and coeffs[q - 1] == tau:
        q -= 1
    if q == len(coeffs):
        raise ValueError("prefix does not reach the stable value")
    return q


def freeness(f: Polynomial) -> bool:
    """``True`` iff the Jacobian ideal is saturated."""
    G = milnor_algebra(f).jacobian
    Gsat = saturate_irrelevant(G)
    return ideal_equal(G, Gsat)


def regularity(T: int, ct: int | None, sat: int) -> int:
    if ct is None:
        raise ValueError("regularity formula needs a finite coincidence threshold (singular input)")
    return max(T - ct, sat - 1)


def sat_bound_check(T: int, ct: int, st: int, sat: int) -> bool:
    return sat <= max(T - ct, st)


_NOT_APPLICABLE = "not applicable"


@dataclass(frozen=True)
class Theorem1Verdict:
    applicable: bool
    d_odd_ok: bool = True
    ct_formula_ok: bool = True
    st_formula_ok: bool = True
    freeness_ok: bool | str = _NOT_APPLICABLE

    @property
    def all_ok(self) -> bool:
        return (
            self.d_odd_ok
            and self.ct_formula_ok
            and self.st_formula_ok
            and self.freeness_ok in (True, _NOT_APPLICABLE)
        )


@dataclass(frozen=True)
class InvariantReport:
    d: int
    n: int
    T: int
    tau: int
    ct: int | None  # None: infinite (smooth)
    st: int
    sat: int
    is_free: bool
    reg: int | None  # None: undefined (smooth)
    series_prefix: tuple[int, ...]
    numerator_Q: tuple[int, ...]
    krull_dim: int
    defect_dims: tuple[int, ...] = ()

    @property
    def smooth(self) -> bool:
        return self.krull_dim == 0

    def to_record(self) -> dict[str, Any]:
        """Flat JSON-ready record with the stable field names."""
        return {
            "d": self.d,
            "n": self.n,
            "T": self.T,
            "tau": self.tau,
            "ct": "infinite" if self.ct is None else self.ct,
            "st": self.st,
            "sat": self.sat,
            "free": self.is_free,
            "reg": self.reg,
            "series": list(self.series_prefix),
            "numerator_Q": list(self.numerator_Q),
            "krull_dim": self.krull_dim,
            "defect": list(self.defect_dims),
        }

    @classmethod
    def from_record(cls, rec: dict[str, Any]) -> "InvariantReport":
        return cls(
            d=rec["d"],
            n=rec["n"],
            T=rec["T"],
            tau=rec["tau"],
            ct=None if rec["ct"] == "infinite" else rec["ct"],
            st=rec["st"],
            sat=rec["sat"],
            is_free=rec["free"],
            reg=rec["reg"],
            series_prefix=tuple(rec["series"]),
            numerator_Q=tuple(rec["numerator_Q"]),
            krull_dim=rec["krull_dim"],
            defect_dims=tuple(rec.get("defect", ())),
        )

    def as_dict(self) -> dict[str, Any]:
        return asdict(self)


def theorem1_check(report: InvariantReport) -> Theorem1Verdict:
    """Check the consequences forced when ``st < ct``."""
    if report.ct is None or not report.st < report.ct:
        return Theorem1Verdict(applicable=False)
    T = report.T
    return Theorem1Verdict(
        applicable=True,
        d_odd_ok=report.d % 2 == 1,
        ct_formula_ok=2 * report.ct == T + 1,
        st_formula_ok=2 * report.st == T - 1,
        freeness_ok=report.is_free if report.n == 2 else _NOT_APPLICABLE,
    )


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise ConsistencyError(message)


def full_report(f: Polynomial, max_degree: int | None = None) -> InvariantReport:
    """Compute every invariant of ``f`` and cross-check them before returning.

    Raises :class:`NonIsolatedError` when the Milnor algebra has Krull
    dimension above 1. ``max_degree`` sets the length of the reported series
    prefix (default ``T + 2``).
    """
    alg = milnor_algebra(f)
    _require(euler_check(f), "Euler identity failed")
    d = f.degree
    n = f.ring.nvars - 1
    T = (n + 1) * (d - 2)
    kind, dim = check_isolated(alg.series)
    if kind is Singularity.NON_ISOLATED:
        raise NonIsolatedError(dim)
    bound = T + 2
    prefix = expand(alg.series, max(bound, max_degree or 0))
    shown = prefix.coefficients[: (max_degree if max_degree is not None else bound) + 1]
    q, _ = reduce_form(alg.series)
    smooth = smooth_series(n, d)
    G = alg.jacobian
    Gsat = saturate_irrelevant(G)
    sat = sat_threshold(G, Gsat)
    defect = tuple(v for _, v in defect_dims(G, Gsat, bound))
    sat_series = hilbert_series(lead_term_ideal(Gsat))

    if kind is Singularity.SMOOTH:
        _require(prefix.coefficients[: T + 1] == smooth.coefficients, "smooth series mismatch")
        _require(Gsat.is_unit(), "smooth Jacobian ideal must saturate to the unit ideal")
        report = InvariantReport(
            d=d, n=n, T=T, tau=0, ct=None, st=T + 1, sat=sat, is_free=False, reg=None,
            series_prefix=shown, numerator_Q=q, krull_dim=0, defect_dims=defect,
        )
        _require(sat == T + 1, "smooth saturation threshold must be T+1")
        return report

    tau = total_tjurina(alg.series)
    st = stability_threshold(alg.series, tau)
    ct = coincidence_threshold(prefix, smooth)
    is_free = ideal_equal(G, Gsat)
    reg = regularity(T, ct, sat)
    report = InvariantReport(
        d=d, n=n, T=T, tau=tau, ct=ct, st=st, sat=sat, is_free=is_free, reg=reg,
        series_prefix=shown, numerator_Q=q, krull_dim=1, defect_dims=defect,
    )

    # cross-checks by independent routes
    _require(tau > 0, "isolated singular case must have tau > 0")
    _require(st == stability_threshold_scan(prefix, tau), "st: deg Q disagrees with prefix scan")
    _require(expand(sat_series, bound)[bound] == tau, "tau: Q(1) disagrees with dim of S/Jsat")
    _require(is_free == (sat == 0), "freeness must match sat == 0")
    _require(reg >= T - ct, "regularity below T - ct")
    _require(not is_free or reg == T - ct, "free divisor must have reg == T - ct")
    _require(sat_bound_check(T, ct, st, sat), "sat exceeds max(T - ct, st)")
    _require(2 * st >= T - 1 if d % 2 else 2 * st >= T, "st below the symmetry bound")
    _require(all(v == 0 for v in defect[sat:]), "defect does not vanish from sat on")
    _require(theorem1_check(report).all_ok, "st < ct but the forced consequences fail")
    return report

