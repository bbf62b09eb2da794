# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled reduction kernels.

Same contract as :mod:`milnor._kernels_py`, but keys and packed exponents
live in ``array('Q')`` buffers so the merge loop compares and adds machine
words. Coefficients stay Python integers.
"""

from cpython cimport array
import array
from math import gcd

NAME = "cython"

cdef array.array _QTEMPLATE = array.array("Q", [])


cdef inline array.array _qarray(Py_ssize_t n):
    return array.clone(_QTEMPLATE, n, zero=False)


def new_poly(keys, exps, coefs):
    return (array.array("Q", keys), array.array("Q", exps), list(coefs))


cdef tuple _lin_comb(object a, tuple f, Py_ssize_t fs, object b,
                     unsigned long long mk, unsigned long long me,
                     tuple g, Py_ssize_t gs):
    cdef array.array fka = f[0], fea = f[1], gka = g[0], gea = g[1]
    cdef list fc = f[2], gc = g[2]
    cdef unsigned long long* fk = fka.data.as_ulonglongs
    cdef unsigned long long* fe = fea.data.as_ulonglongs
    cdef unsigned long long* gk = gka.data.as_ulonglongs
    cdef unsigned long long* ge = gea.data.as_ulonglongs
    cdef Py_ssize_t nf = len(fka), ng = len(gka)
    cdef Py_ssize_t cap = (nf - fs) + (ng - gs)
    if cap < 0:
        cap = 0
    cdef array.array rka = _qarray(cap), rea = _qarray(cap)
    cdef unsigned long long* rk = rka.data.as_ulonglongs
    cdef unsigned long long* re = rea.data.as_ulonglongs
    cdef list rc = []
    cdef Py_ssize_t i = fs, j = gs, n = 0
    cdef unsigned long long ki, kj
    cdef bint a_one = a == 1
    cdef object nb = -b
    cdef object c
    while i < nf and j < ng:
        ki = fk[i]
        kj = gk[j] + mk
        if ki > kj:
            rk[n] = ki
            re[n] = fe[i]
            rc.append(fc[i] if a_one else a * fc[i])
            n += 1
            i += 1
        elif ki < kj:
            rk[n] = kj
            re[n] = ge[j] + me
            rc.append(nb * gc[j])
            n += 1
            j += 1
        else:
            c = (fc[i] if a_one else a * fc[i]) - b * gc[j]
            if c:
                rk[n] = ki
                re[n] = fe[i]
                rc.append(c)
                n += 1
            i += 1
            j += 1
    while i < nf:
        rk[n] = fk[i]
        re[n] = fe[i]
        rc.append(fc[i] if a_one else a * fc[i])
        n += 1
        i += 1
    while j < ng:
        rk[n] = gk[j] + mk
        re[n] = ge[j] + me
        rc.append(nb * gc[j])
        n += 1
        j += 1
    array.resize(rka, n)
    array.resize(rea, n)
    return (rka, rea, rc)


def lin_comb(a, tuple f, Py_ssize_t fs, b, unsigned long long mk, unsigned long long me,
             tuple g, Py_ssize_t gs):
    """Return ``a*f[fs:] - b*(m*g)[gs:]`` where ``m`` has key ``mk`` and exponents ``me``."""
    return _lin_comb(a, f, fs, b, mk, me, g, gs)


def normal_form(tuple f, list reducers, leads, unsigned long long guard, bint full):
    """Fraction-free normal form; see the pure-Python twin for the contract."""
    cdef Py_ssize_t nleads = len(leads)
    cdef array.array lead_arr = array.array("Q", leads)
    cdef unsigned long long* lp = lead_arr.data.as_ulonglongs
    cdef array.array fka = f[0], fea = f[1]
    cdef list fc = f[2]
    cdef array.array rka = _qarray(0), rea = _qarray(0)
    cdef list rc = []
    cdef object u = 1
    cdef Py_ssize_t pos = 0, t, idx, m
    cdef unsigned long long probe
    cdef tuple g
    cdef array.array gka, gea
    cdef object a, c, h
    while pos < len(fka):
        probe = fea.data.as_ulonglongs[pos] | guard
        idx = -1
        for t in range(nleads):
            if ((probe - lp[t]) & guard) == guard:
                idx = t
                break
        if idx < 0:
            if not full:
                m = len(fka) - pos
                array.extend_buffer(rka, <char*>(fka.data.as_ulonglongs + pos), m)
                array.extend_buffer(rea, <char*>(fea.data.as_ulonglongs + pos), m)
                rc.extend(fc[pos:])
                break
            array.extend_buffer(rka, <char*>(fka.data.as_ulonglongs + pos), 1)
            array.extend_buffer(rea, <char*>(fea.data.as_ulonglongs + pos), 1)
            rc.append(fc[pos])
            pos += 1
            continue
        g = reducers[idx]
        gka = g[0]
        gea = g[1]
        a = (<list>g[2])[0]
        c = fc[pos]
        h = gcd(a, c)
        if h != 1:
            a = a // h
            c = c // h
        if a < 0:
            a = -a
            c = -c
        fka, fea, fc = _lin_comb(a, (fka, fea, fc), pos + 1, c,
                                 fka.data.as_ulonglongs[pos] - gka.data.as_ulonglongs[0],
                                 fea.data.as_ulonglongs[pos] - gea.data.as_ulonglongs[0],
                                 g, 1)
        pos = 0
        if a != 1:
            u = u * a
            rc = [a * x for x in rc]
    return (rka, rea, rc), u
