"""Exact Milnor-algebra invariants of projective hypersurfaces.

Quick start::

    >>> from milnor import Ring, parse_polynomial, full_report
    >>> r = full_report(parse_polynomial("x*y*z", Ring.of("x,y,z")))
    >>> (r.tau, r.ct, r.st, r.sat, r.is_free)
    (3, 2, 1, 0, True)
"""

from .groebner import (
    GroebnerBasis,
    IdealGens,
    MonomialIdeal,
    buchberger,
    ideal_contains,
    ideal_equal,
    lead_term_ideal,
    normal_form,
)
from .hilbert import HilbertSeries, SeriesPrefix, expand, hilbert_numerator, reduce_form, smooth_series
from .invariants import (
    InvariantReport,
    NonIsolatedError,
    Theorem1Verdict,
    check_isolated,
    coincidence_threshold,
    freeness,
    full_report,
    milnor_algebra,
    regularity,
    sat_bound_check,
    stability_threshold,
    theorem1_check,
    total_tjurina,
)
from .kernels import default_backend_name
from .polynomial import (
    Monomial,
    MonomialOrder,
    ParseError,
    Polynomial,
    Ring,
    compare,
    euler_check,
    parse_polynomial,
    partial_derivative,
)
from .saturation import colon_var_saturate, defect_dims, intersect, sat_threshold, saturate_irrelevant

__version__ = "0.1.0"
