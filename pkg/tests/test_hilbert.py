import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from milnor import HilbertSeries, Monomial, MonomialIdeal, expand, hilbert_numerator, reduce_form, smooth_series
from milnor.hilbert import ZeroModuleError, hilbert_series

from oracles import series_times_one_minus_t, standard_monomial_counts


def mono_ideal(*exps, nvars=3):
    return MonomialIdeal([Monomial(e) for e in exps], nvars)


def test_numerator_of_coordinate_pairs():
    I = mono_ideal((1, 1, 0), (1, 0, 1), (0, 1, 1))
    assert hilbert_numerator(I) == (1, 0, -3, 2)


def test_numerator_edge_cases():
    assert hilbert_numerator(mono_ideal()) == (1,)
    assert hilbert_numerator(mono_ideal((0, 0, 0))) == ()
    assert hilbert_numerator(mono_ideal((2, 0, 0), (0, 3, 0))) == (1, 0, -1, -1, 0, 1)


def test_expand_examples():
    assert expand(HilbertSeries((1,), 3), 4).coefficients == (1, 3, 6, 10, 15)
    assert expand(HilbertSeries((1, 0, -3, 2), 3), 5).coefficients == (1, 3, 3, 3, 3, 3)
    assert expand(HilbertSeries((1, 0, -3, 2), 3), 5).stable_value == 3
    with pytest.raises(ValueError):
        expand(HilbertSeries((1,), 1), -1)


def test_reduce_form_examples():
    assert reduce_form(HilbertSeries((1, 0, -3, 2), 3)) == ((1, 2), 1)
    assert reduce_form(HilbertSeries((1, -3, 3, -1), 3)) == ((1,), 0)
    assert reduce_form(HilbertSeries((1,), 3)) == ((1,), 3)
    with pytest.raises(ZeroModuleError):
        reduce_form(HilbertSeries((), 3))


def test_smooth_series_examples():
    assert smooth_series(2, 3).coefficients == (1, 3, 3, 1)
    assert smooth_series(2, 4).coefficients == (1, 3, 6, 7, 6, 3, 1)
    assert smooth_series(1, 5).coefficients == (1, 2, 3, 4, 3, 2, 1)
    assert smooth_series(2, 5).stable_value == 0


def test_series_difference_polynomial_part():
    a = HilbertSeries((1, 0, -3, 2), 3)
    b = HilbertSeries((1, 2), 1)
    assert (a - b).polynomial_part() == ()
    with pytest.raises(ValueError):
        (a - HilbertSeries((1,), 3)).polynomial_part()


@pytest.mark.parametrize("n", [2, 3])
@pytest.mark.parametrize("d", range(3, 13))
def test_smooth_series_shape(n, d):
    c = smooth_series(n, d).coefficients
    T = (n + 1) * (d - 2)
    assert len(c) == T + 1
    assert c == c[::-1]
    assert all(c[k] < c[k + 1] for k in range(T // 2))
    assert all(c[k] ** 2 >= c[k - 1] * c[k + 1] for k in range(1, T))
    assert sum(c) == (d - 1) ** (n + 1)


exps = st.tuples(st.integers(0, 4), st.integers(0, 4), st.integers(0, 4))


@given(st.lists(exps, max_size=6))
@settings(max_examples=150, deadline=None)
def test_numerator_matches_monomial_count(gens):
    I = MonomialIdeal([Monomial(e) for e in gens], 3)
    bound = 10
    counts = standard_monomial_counts([g.exponents for g in I.generators], 3, bound)
    series = hilbert_series(I)
    assert list(expand(series, bound).coefficients) == counts
    assert all(c >= 0 for c in counts)
    numerator = series_times_one_minus_t(counts, 3)
    want = list(series.numerator) + [0] * (bound + 1 - len(series.numerator))
    assert numerator == want[: bound + 1]


@given(st.lists(exps, min_size=1, max_size=6))
@settings(max_examples=80, deadline=None)
def test_reduce_form_round_trip(gens):
    series = hilbert_series(MonomialIdeal([Monomial(e) for e in gens], 3))
    if not series.numerator:
        return
    q, dim = reduce_form(series)
    assert sum(q) != 0
    back = HilbertSeries(q, dim)
    assert expand(back, 12).coefficients == expand(series, 12).coefficients
