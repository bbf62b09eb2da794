import random
from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from milnor import (
    IdealGens,
    Monomial,
    MonomialIdeal,
    MonomialOrder,
    Polynomial,
    Ring,
    buchberger,
    ideal_contains,
    ideal_equal,
    lead_term_ideal,
    normal_form,
    parse_polynomial,
    partial_derivative,
)
from milnor import kernels
from milnor.corpus import CORPUS, family_polynomial
from milnor.groebner import s_polynomial
from milnor.hilbert import expand, hilbert_series
from milnor.polynomial import NotHomogeneousError
from milnor.saturation import saturate_irrelevant

from oracles import quotient_dims, to_dicts

R3 = Ring.of("x,y,z")


def P(text, ring=R3):
    return parse_polynomial(text, ring)


def jacobian(text, ring=R3):
    f = P(text, ring)
    return [partial_derivative(f, i) for i in range(ring.nvars)]


def assert_groebner(G):
    """Every S-polynomial reduces to zero and the basis is reduced."""
    for g, h in combinations(G.elements, 2):
        assert normal_form(s_polynomial(g, h), G).is_zero()
    leads = G.lead_monomials()
    for g in G.elements:
        assert g.lead_coefficient() == 1
        for m, _ in g.terms:
            others = [l for l in leads if l != g.lead_monomial()]
            assert not any(l.divides(m) for l in others)


def test_textbook_basis():
    G = buchberger([P("x^2-y^2"), P("x*y")])
    assert set(G.elements) == {P("x^2-y^2"), P("x*y"), P("y^3")}
    assert_groebner(G)


def test_normal_form_examples():
    G = buchberger([P("x^2-y^2"), P("x*y")])
    assert normal_form(P("x^3"), G) == P("0")
    assert normal_form(P("x^2+y^2"), G) == P("2*y^2")
    assert normal_form(P("x*z+y^3"), G) == P("x*z")
    assert normal_form(P("x^2*z") * Fraction(3, 2), G) == P("y^2*z") * Fraction(3, 2)


def test_normal_form_is_idempotent_and_exact():
    G = buchberger(jacobian(family_polynomial("cd", 6)))
    rng = random.Random(5)
    for _ in range(10):
        terms = {}
        for _ in range(6):
            e = tuple(rng.randint(0, 4) for _ in range(3))
            terms[e] = rng.randint(-9, 9)
        f = Polynomial(R3, terms)
        r = normal_form(f, G)
        assert normal_form(r, G) == r
        assert ideal_contains(G, f - r)


def test_unit_and_zero_ideals():
    G = buchberger([P("x^2"), P("y^2"), P("z^2"), P("x*y+z^2")])
    assert not G.is_unit()
    assert buchberger(IdealGens([P("0")], R3)).is_zero()
    assert buchberger([P("x-x+1")]).is_unit()


def test_rejects_inhomogeneous():
    with pytest.raises(NotHomogeneousError):
        buchberger([P("x^2+y")])


def test_lead_term_ideal_is_minimal():
    G = buchberger([P("x^2"), P("x^3"), P("x*y")])
    L = lead_term_ideal(G)
    assert set(L.generators) == {Monomial((2, 0, 0)), Monomial((1, 1, 0))}
    assert MonomialIdeal([Monomial((1, 0, 0)), Monomial((2, 1, 0))], 3).generators == (Monomial((1, 0, 0)),)


def test_ideal_contains():
    G = buchberger(jacobian("x*y*z"))
    assert ideal_contains(G, P("x*y*z"))
    assert ideal_contains(G, P("x*y+2*y*z"))
    assert not ideal_contains(G, P("x^2"))


def test_ideal_equal_detects_saturation():
    G = buchberger(jacobian("x*y*z"))
    assert ideal_equal(G, saturate_irrelevant(G))
    C5 = buchberger(jacobian(family_polynomial("cd", 5)))
    assert not ideal_equal(C5, saturate_irrelevant(C5))


def test_ideal_equal_requires_same_order():
    G = buchberger([P("x*y")])
    H = buchberger([P("x*y")], MonomialOrder.with_last(3, 0))
    with pytest.raises(ValueError):
        ideal_equal(G, H)


def test_macaulay_counts_match_rank_oracle():
    for entry in CORPUS[:4]:
        gens = jacobian(entry.polynomial)
        G = buchberger(gens)
        bound = 3 * (entry.parse().degree - 2) + 2
        engine = expand(hilbert_series(lead_term_ideal(G)), bound).coefficients
        assert list(engine) == quotient_dims(to_dicts(gens), 3, bound), entry.name


@pytest.mark.parametrize("seed", range(4))
def test_generator_order_does_not_matter(seed):
    gens = jacobian(family_polynomial("st", 7)) + [P("x^3*y^3-z^6")]
    rng = random.Random(seed)
    shuffled = gens[:]
    rng.shuffle(shuffled)
    scaled = [g * rng.choice([-3, 2, 7]) for g in shuffled]
    assert set(buchberger(gens).elements) == set(buchberger(scaled).elements)


@pytest.mark.parametrize("entry", [e for e in CORPUS if e.name in ("a3-arrangement", "simis-sextic", "c-6", "st-6")], ids=lambda e: e.name)
def test_buchberger_criterion_on_corpus(entry):
    assert_groebner(buchberger(jacobian(entry.polynomial)))


@pytest.mark.parametrize("last", range(3))
def test_permuted_orders_give_groebner_bases(last):
    order = MonomialOrder.with_last(3, last)
    gens = [g.reorder(order) for g in jacobian(family_polynomial("cd", 5))]
    G = buchberger(gens, order)
    assert_groebner(G)
    for g in gens:
        assert ideal_contains(G, g)


@pytest.mark.skipif(not kernels.COMPILED_AVAILABLE, reason="compiled kernels not built")
@pytest.mark.parametrize("text", [family_polynomial("cd", 7), family_polynomial("st", 8), CORPUS[3].polynomial])
def test_backends_agree(text):
    try:
        kernels.force_backend("python")
        slow = buchberger(jacobian(text))
        assert slow.kernel.NAME == "python"
        kernels.force_backend("cython")
        fast = buchberger(jacobian(text))
        assert fast.kernel.NAME == "cython"
    finally:
        kernels.force_backend(None)
    assert slow.elements == fast.elements


def test_four_variables():
    R4 = Ring.of("w,x,y,z")
    gens = jacobian("w^3+x^3+y^3+z^3+w*x*y", R4)
    G = buchberger(gens)
    assert_groebner(G)
    assert list(expand(hilbert_series(lead_term_ideal(G)), 6).coefficients) == quotient_dims(to_dicts(gens), 4, 6)


small_forms = st.lists(
    st.tuples(st.tuples(st.integers(0, 3), st.integers(0, 3)), st.integers(-3, 3)), min_size=1, max_size=4
)


def _homogenize(terms, degree=3):
    out = {}
    for (a, b), c in terms:
        if a + b <= degree:
            e = (a, b, degree - a - b)
            out[e] = out.get(e, 0) + c
    return Polynomial(R3, out)


@given(st.lists(small_forms, min_size=1, max_size=3))
@settings(max_examples=40, deadline=None)
def test_random_ideals_are_groebner(forms):
    gens = [_homogenize(t) for t in forms]
    if all(g.is_zero() for g in gens):
        return
    G = buchberger(IdealGens(gens, R3))
    assert_groebner(G)
    for g in gens:
        assert ideal_contains(G, g)
    dims = expand(hilbert_series(lead_term_ideal(G)), 5).coefficients
    assert list(dims) == quotient_dims(to_dicts(gens), 3, 5)
