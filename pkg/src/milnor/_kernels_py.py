"""Pure-Python reduction kernels (reference backend).

An internal polynomial is a triple ``(keys, exps, coefs)`` of equal-length
sequences sorted by strictly decreasing key, with nonzero integer
coefficients. See :mod:`milnor._packing` for the monomial encoding.
"""

from math import gcd

NAME = "python"


def new_poly(keys, exps, coefs):
    return (list(keys), list(exps), list(coefs))


def lin_comb(a, f, fs, b, mk, me, g, gs):
    """Return ``a*f[fs:] - b*(m*g)[gs:]`` where ``m`` has key ``mk`` and exponents ``me``."""
    fk, fe, fc = f
    gk, ge, gc = g
    rk, re, rc = [], [], []
    i, j = fs, gs
    nf, ng = len(fk), len(gk)
    while i < nf and j < ng:
        ki = fk[i]
        kj = gk[j] + mk
        if ki > kj:
            rk.append(ki)
            re.append(fe[i])
            rc.append(a * fc[i])
            i += 1
        elif ki < kj:
            rk.append(kj)
            re.append(ge[j] + me)
            rc.append(-b * gc[j])
            j += 1
        else:
            c = a * fc[i] - b * gc[j]
            if c:
                rk.append(ki)
                re.append(fe[i])
                rc.append(c)
            i += 1
            j += 1
    while i < nf:
        rk.append(fk[i])
        re.append(fe[i])
        rc.append(a * fc[i])
        i += 1
    while j < ng:
        rk.append(gk[j] + mk)
        re.append(ge[j] + me)
        rc.append(-b * gc[j])
        j += 1
    return rk, re, rc


def normal_form(f, reducers, leads, guard, full):
    """Fraction-free normal form of ``f`` modulo ``reducers``.

    ``leads[i]`` is the packed lead exponent of ``reducers[i]``. Returns
    ``(r, u)`` where ``r`` is the remainder scaled by the positive-or-negative
    integer ``u``: ``u * f == r + (combination of reducers)``. With
    ``full=False`` only the lead term is reduced.
    """
    fk, fe, fc = f
    rk, re, rc = [], [], []
    u = 1
    pos = 0
    nleads = len(leads)
    while pos < len(fk):
        probe = fe[pos] | guard
        idx = -1
        for t in range(nleads):
            if (probe - leads[t]) & guard == guard:
                idx = t
                break
        if idx < 0:
            if not full:
                rk.extend(fk[pos:])
                re.extend(fe[pos:])
                rc.extend(fc[pos:])
                break
            rk.append(fk[pos])
            re.append(fe[pos])
            rc.append(fc[pos])
            pos += 1
            continue
        g = reducers[idx]
        a = g[2][0]
        c = fc[pos]
        h = gcd(a, c)
        a //= h
        c //= h
        if a < 0:
            a, c = -a, -c
        fk, fe, fc = lin_comb(a, (fk, fe, fc), pos + 1, c, fk[pos] - g[0][0], fe[pos] - g[1][0], g, 1)
        pos = 0
        if a != 1:
            u *= a
            rc = [a * x for x in rc]
    return (rk, re, rc), u
