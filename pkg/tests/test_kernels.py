import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from milnor import Monomial, MonomialOrder, compare, kernels
from milnor import _kernels_py
from milnor._packing import MAX_EXPONENT, Encoding

exps = st.tuples(*[st.integers(0, 60)] * 3)
perms = st.permutations([0, 1, 2]).map(tuple)


@given(perms, exps, exps)
@settings(max_examples=300, deadline=None)
def test_key_matches_order(perm, a, b):
    enc = Encoding(3, perm)
    c = compare(Monomial(a), Monomial(b), MonomialOrder(perm))
    ka, kb = enc.key(a), enc.key(b)
    assert (ka > kb) - (ka < kb) == c


@given(perms, exps, exps)
@settings(max_examples=200, deadline=None)
def test_key_and_packing_are_additive(perm, a, b):
    enc = Encoding(3, perm)
    ab = tuple(x + y for x, y in zip(a, b))
    assert enc.key(ab) == enc.key(a) + enc.key(b)
    assert enc.pack(ab) == enc.pack(a) + enc.pack(b)
    assert enc.unpack(enc.pack(a)) == a


@given(exps, exps)
@settings(max_examples=300, deadline=None)
def test_guard_bit_divisibility(a, b):
    enc = Encoding(3)
    assert enc.divides(enc.pack(a), enc.pack(b)) == all(x <= y for x, y in zip(a, b))
    key, packed = enc.lcm(enc.pack(a), enc.pack(b))
    m = tuple(max(x, y) for x, y in zip(a, b))
    assert (key, packed) == enc.encode(m)
    assert enc.coprime(enc.pack(a), enc.pack(b)) == all(x == 0 or y == 0 for x, y in zip(a, b))


def test_aux_variable_dominates_and_has_no_degree():
    enc = Encoding(3, aux=True)
    assert enc.key((0, 0, 0, 1)) > enc.key((40, 0, 0, 0))
    assert enc.degree(enc.pack((1, 2, 3, 5))) == 6
    with pytest.raises(ValueError):
        enc.encode((1, 2, 3))


def test_packing_limits():
    enc = Encoding(3)
    with pytest.raises(OverflowError):
        enc.pack((MAX_EXPONENT + 1, 0, 0))
    with pytest.raises(OverflowError):
        enc.encode((2000, 2000, 100))


def test_fits64():
    assert Encoding(3).fits64 and Encoding(3, aux=True).fits64
    assert Encoding(5).fits64
    assert not Encoding(6).fits64


def test_backend_selection():
    try:
        kernels.force_backend("python")
        assert kernels.default_backend_name() == "python"
        assert kernels.backend_for(Encoding(3)) is _kernels_py
        with pytest.raises(ValueError):
            kernels.force_backend("fortran")
    finally:
        kernels.force_backend(None)
    wide = kernels.backend_for(Encoding(7))
    assert wide is _kernels_py


compiled = pytest.mark.skipif(not kernels.COMPILED_AVAILABLE, reason="compiled kernels not built")


def _poly(kern, enc, terms):
    rows = sorted(((*enc.encode(e), c) for e, c in terms.items() if c), reverse=True)
    return kern.new_poly([r[0] for r in rows], [r[1] for r in rows], [r[2] for r in rows])


def _plain(p):
    return list(p[0]), list(p[1]), list(p[2])


terms = st.dictionaries(st.tuples(*[st.integers(0, 6)] * 3), st.integers(-50, 50), min_size=1, max_size=8)


@compiled
@given(terms, terms, st.tuples(*[st.integers(0, 3)] * 3), st.integers(-9, 9), st.integers(-9, 9))
@settings(max_examples=150, deadline=None)
def test_lin_comb_twins(f, g, m, a, b):
    from milnor import _kernels as ck

    enc = Encoding(3)
    mk, me = enc.encode(m)
    outs = []
    for kern in (_kernels_py, ck):
        pf, pg = _poly(kern, enc, f), _poly(kern, enc, g)
        outs.append(_plain(kern.lin_comb(a, pf, 0, b, mk, me, pg, 0)))
    assert outs[0] == outs[1]


@compiled
@given(terms, st.lists(terms, min_size=1, max_size=3), st.booleans())
@settings(max_examples=150, deadline=None)
def test_normal_form_twins(f, gs, full):
    from milnor import _kernels as ck

    enc = Encoding(3)
    outs = []
    for kern in (_kernels_py, ck):
        reducers = [_poly(kern, enc, g) for g in gs if any(g.values())]
        leads = [r[1][0] for r in reducers]
        r, u = kern.normal_form(_poly(kern, enc, f), reducers, leads, enc.guard, full)
        outs.append((_plain(r), u))
    assert outs[0] == outs[1]
