# cython: language_level=3, boundscheck=False, wraparound=False
"""Cython build of the sparse polynomial kernel.

Same data layout and semantics as _poly_py: polynomials are dicts keyed by
packed exponents, coefficients are (Fraction, Fraction) pairs.  Coefficient
arithmetic stays in Python objects (exact rationals); the win is in loop and
dict-traffic overhead, which dominates the small-coefficient sweeps.
"""

from fractions import Fraction

_F0 = Fraction(0)
_F1 = Fraction(1)

QI_ZERO = (_F0, _F0)
QI_ONE = (_F1, _F0)

VAR_SHIFT = (0, 8, 16, 24)

cdef unsigned long M11 = 1
cdef unsigned long M12 = 1UL << 8
cdef unsigned long M21 = 1UL << 16
cdef unsigned long M22 = 1UL << 24


def qi_add(a, b):
    return (a[0] + b[0], a[1] + b[1])


def qi_sub(a, b):
    return (a[0] - b[0], a[1] - b[1])


def qi_neg(a):
    return (-a[0], -a[1])


def qi_mul(a, b):
    ar, ai = a
    br, bi = b
    return (ar * br - ai * bi, ar * bi + ai * br)


def qi_inv(a):
    ar, ai = a
    d = ar * ar + ai * ai
    if d == 0:
        raise ZeroDivisionError("inverse of zero Gaussian rational")
    return (ar / d, -ai / d)


def qi_is_zero(a):
    return not a[0] and not a[1]


def poly_add(dict p, dict q):
    cdef dict out = dict(p)
    for k, c in q.items():
        old = out.get(k)
        if old is not None:
            sr = old[0] + c[0]
            si = old[1] + c[1]
            if sr or si:
                out[k] = (sr, si)
            else:
                del out[k]
        else:
            out[k] = c
    return out


def poly_neg(dict p):
    cdef dict out = {}
    for k, c in p.items():
        out[k] = (-c[0], -c[1])
    return out


def poly_scale(dict p, a):
    ar, ai = a
    if not ar and not ai:
        return {}
    cdef dict out = {}
    for k, c in p.items():
        out[k] = (c[0] * ar - c[1] * ai, c[0] * ai + c[1] * ar)
    return out


def poly_mul(dict p, dict q):
    if len(p) > len(q):
        p, q = q, p
    cdef dict out = {}
    cdef unsigned long k
    for k1, c1 in p.items():
        ar = c1[0]
        ai = c1[1]
        for k2, c2 in q.items():
            k = <unsigned long> k1 + <unsigned long> k2
            cr = ar * c2[0] - ai * c2[1]
            ci = ar * c2[1] + ai * c2[0]
            old = out.get(k)
            if old is not None:
                cr = cr + old[0]
                ci = ci + old[1]
            if cr or ci:
                out[k] = (cr, ci)
            elif old is not None:
                del out[k]
    return out


def poly_diff(dict p, int var):
    cdef int shift = (0, 8, 16, 24)[var]
    cdef dict out = {}
    cdef unsigned long k
    cdef unsigned long e
    for key, c in p.items():
        k = <unsigned long> key
        e = (k >> shift) & 0xFF
        if e:
            out[k - (1UL << shift)] = (c[0] * e, c[1] * e)
    return out


def poly_reduce_n(dict p):
    cdef dict quot = {}
    cdef dict rem = {}
    cdef list work = list(p.items())
    cdef unsigned long k, rest
    while work:
        key, c = work.pop()
        k = <unsigned long> key
        if (k & 0xFF) and ((k >> 24) & 0xFF):
            rest = k - M11 - M22
            old = quot.get(rest)
            if old is not None:
                sr = old[0] + c[0]
                si = old[1] + c[1]
                if sr or si:
                    quot[rest] = (sr, si)
                else:
                    del quot[rest]
            else:
                quot[rest] = c
            work.append((rest + M12 + M21, c))
        else:
            old = rem.get(key)
            if old is not None:
                sr = old[0] + c[0]
                si = old[1] + c[1]
                if sr or si:
                    rem[key] = (sr, si)
                else:
                    del rem[key]
            else:
                rem[key] = c
    return quot, rem
