"""Pure-Python kernel for sparse polynomial arithmetic over Gaussian rationals.

A polynomial in the four matrix entries z11, z12, z21, z22 is a dict mapping
a packed exponent key to a coefficient.  The key packs the four exponents
into one int, eight bits each:

    key = e11 | (e12 << 8) | (e21 << 16) | (e22 << 24)

A coefficient is a pair (re, im) of fractions.Fraction.

This module holds only the hot loops (multiplication, differentiation,
reduction modulo N = z11*z22 - z12*z21).  A Cython build of the same
functions lives in _poly_cy.pyx; quatlab._poly picks one at import time.
"""

from fractions import Fraction

_F0 = Fraction(0)
_F1 = Fraction(1)

QI_ZERO = (_F0, _F0)
QI_ONE = (_F1, _F0)

# packed exponent increments for z11, z12, z21, z22
VAR_SHIFT = (0, 8, 16, 24)
_M11 = 1
_M12 = 1 << 8
_M21 = 1 << 16
_M22 = 1 << 24


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


def poly_add(p, q):
    """Sum of two polynomials (dicts are never mutated)."""
    out = dict(p)
    for k, c in q.items():
        if k in out:
            s = (out[k][0] + c[0], out[k][1] + c[1])
            if s[0] or s[1]:
                out[k] = s
            else:
                del out[k]
        else:
            out[k] = c
    return out


def poly_neg(p):
    return {k: (-c[0], -c[1]) for k, c in p.items()}


def poly_scale(p, a):
    if qi_is_zero(a):
        return {}
    ar, ai = a
    return {k: (cr * ar - ci * ai, cr * ai + ci * ar) for k, (cr, ci) in p.items()}


def poly_mul(p, q):
    if len(p) > len(q):
        p, q = q, p
    out = {}
    for k1, (ar, ai) in p.items():
        for k2, (br, bi) in q.items():
            k = k1 + k2
            cr = ar * br - ai * bi
            ci = ar * bi + ai * br
            if k in out:
                old = out[k]
                cr += old[0]
                ci += old[1]
            if cr or ci:
                out[k] = (cr, ci)
            elif k in out:
                del out[k]
    return out


def poly_diff(p, var):
    """Partial derivative with respect to variable index 0..3."""
    shift = VAR_SHIFT[var]
    out = {}
    for k, (cr, ci) in p.items():
        e = (k >> shift) & 0xFF
        if e:
            out[k - (1 << shift)] = (cr * e, ci * e)
    return out


def poly_reduce_n(p):
    """Split p = N * quot + rem with no monomial of rem divisible by z11*z22.

    N = z11*z22 - z12*z21.  The rewrite z11*z22 -> N + z12*z21 strictly
    decreases e11 + e22, so the loop terminates and the remainder is the
    unique normal form.  Returns (quot, rem).
    """
    quot = {}
    rem = {}
    work = list(p.items())
    while work:
        k, c = work.pop()
        e11 = k & 0xFF
        e22 = (k >> 24) & 0xFF
        if e11 and e22:
            rest = k - _M11 - _M22
            if rest in quot:
                s = (quot[rest][0] + c[0], quot[rest][1] + c[1])
                if s[0] or s[1]:
                    quot[rest] = s
                else:
                    del quot[rest]
            else:
                quot[rest] = c
            work.append((rest + _M12 + _M21, c))
        else:
            if k in rem:
                s = (rem[k][0] + c[0], rem[k][1] + c[1])
                if s[0] or s[1]:
                    rem[k] = s
                else:
                    del rem[k]
            else:
                rem[k] = c
    return quot, rem
