"""Matrix coefficients t^l_{n m} of SU(2) as exact polynomials.

t^l_{n m}(Z) is the coefficient of s^(l-n) in (s z11 + z21)^(l-m) *
(s z12 + z22)^(l+m) -- a residue, hence a finite binomial convolution.
Indices are stored doubled (2l, 2n, 2m) so that index arithmetic stays in
the integers; out-of-range indices denote the zero polynomial.

Key facts used throughout (each is covered by a test):
  * t^l_{n m} is homogeneous of degree 2l and harmonic;
  * box(N^k t^l_{n m}) = 4k(2l + k + 1) N^(k-1) t^l_{n m};
  * on diagonal matrices, t^l_{n m}(diag(a, d)) = delta_{mn} a^(l-m) d^(l+m);
  * sum_m t^l_{n m}(Z^-1) t^l_{m n'}(Z) = delta_{n n'}.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb

from quatlab._poly import QI_ZERO, qi_add
from quatlab.fields import FieldMatrix, ScalarField, _mono_key


class TIndex(tuple):
    """Triple (2l, 2n, 2m); all components share parity, |2n|,|2m| <= 2l."""

    __slots__ = ()

    def __new__(cls, twol, twon, twom):
        return super().__new__(cls, (twol, twon, twom))

    @property
    def twol(self):
        return self[0]

    @property
    def twon(self):
        return self[1]

    @property
    def twom(self):
        return self[2]

    def is_valid(self) -> bool:
        twol, twon, twom = self
        if twol < 0:
            return False
        if (twon - twol) % 2 or (twom - twol) % 2:
            return False
        return abs(twon) <= twol and abs(twom) <= twol


_T_CACHE = {}


def t_polynomial(twol, twon, twom) -> ScalarField:
    """The matrix coefficient t^l_{n m}(Z); zero when out of range."""
    idx = TIndex(twol, twon, twom)
    cached = _T_CACHE.get(idx)
    if cached is not None:
        return cached
    if not idx.is_valid():
        f = ScalarField.zero()
    else:
        a = (twol - twom) // 2  # l - m
        b = (twol + twom) // 2  # l + m
        spow = (twol - twon) // 2  # l - n
        poly = {}
        # [s^spow] (s z11 + z21)^a (s z12 + z22)^b
        for i in range(a + 1):
            j = spow - i
            if j < 0 or j > b:
                continue
            c = Fraction(comb(a, i) * comb(b, j))
            key = _mono_key(i, j, a - i, b - j)
            old = poly.get(key, QI_ZERO)
            poly[key] = qi_add(old, (c, Fraction(0)))
        f = ScalarField({0: poly})
    _T_CACHE[idx] = f
    return f


def t_inverse(twol, twon, twom) -> ScalarField:
    """t^l_{n m}(Z^-1) as an exact Laurent element."""
    return t_polynomial(twol, twon, twom).subs_inverse()


def t_matrix_block(twol, base_twon, base_twom, coeffs, inverted=False, npow=0):
    """2x2 block (coeffs[i][j] * t^l_{n+i, m+j}) used by family tables."""
    out = FieldMatrix(2, 2)
    for i in range(2):
        for j in range(2):
            c = coeffs[i][j]
            if c == 0:
                continue
            t = t_polynomial(twol, base_twon + 2 * i, base_twom + 2 * j)
            if inverted:
                t = t.subs_inverse()
            out.entries[i][j] = t.scale(Fraction(c))
    if npow:
        out = out.shift_n(npow)
    return out


def z_times_t(twol, twon, twom):
    """Right-hand side of the product identity for Z * t^l_{n m}(Z).

    Returns the 2x2 matrix field

      1/(2l+1) [ (l-n+1) t^{l+1/2}_{n-1/2, m-1/2}   (l-n+1) t^{l+1/2}_{n-1/2, m+1/2}
                 (l+n+1) t^{l+1/2}_{n+1/2, m-1/2}   (l+n+1) t^{l+1/2}_{n+1/2, m+1/2} ]
      + N/(2l+1) [ (l+m) t^{l-1/2}_{n-1/2, m-1/2}  -(l-m) t^{l-1/2}_{n-1/2, m+1/2}
                  -(l+m) t^{l-1/2}_{n+1/2, m-1/2}   (l-m) t^{l-1/2}_{n+1/2, m+1/2} ]

    and asserts it equals Z * t^l_{n m}(Z) exactly.
    """
    half = Fraction(1, 2)
    inv = Fraction(1, twol + 1)
    out = FieldMatrix(2, 2)
    for i, nn in enumerate((twon - 1, twon + 1)):
        for j, mm in enumerate((twom - 1, twom + 1)):
            c1 = Fraction(twol - twon + 2 if i == 0 else twol + twon + 2, 2)
            lead = t_polynomial(twol + 1, nn, mm).scale(c1 * inv)
            c2 = Fraction(twol + twom if j == 0 else twol - twom, 2)
            sign = 1 if i == j else -1
            sub = t_polynomial(twol - 1, nn, mm).scale(sign * c2 * inv).shift_n(1)
            out.entries[i][j] = lead + sub
    lhs = FieldMatrix.z_matrix().scale(t_polynomial(twol, twon, twom))
    if not (lhs - out).is_zero():
        raise AssertionError(f"product identity failed at (2l,2n,2m)=({twol},{twon},{twom})")
    del half
    return out


def partial_t_inverse(twol, twon, twom):
    """Right-hand side of the derivative identity for N^-1 t^l_{n m}(Z^-1).

    Asserts  partial(N^-1 t^l_{n m}(Z^-1)) =
      -N^-1 [ (l-n+1) t^{l+1/2}_{n-1/2, m-1/2}(Z^-1)  (l-n+1) t^{l+1/2}_{n-1/2, m+1/2}(Z^-1)
              (l+n+1) t^{l+1/2}_{n+1/2, m-1/2}(Z^-1)  (l+n+1) t^{l+1/2}_{n+1/2, m+1/2}(Z^-1) ]
    and returns it.
    """
    from quatlab.diffops import partial_of_scalar

    out = FieldMatrix(2, 2)
    for i, nn in enumerate((twon - 1, twon + 1)):
        c = Fraction(twol - twon + 2 if i == 0 else twol + twon + 2, 2)
        for j, mm in enumerate((twom - 1, twom + 1)):
            out.entries[i][j] = t_polynomial(twol + 1, nn, mm).subs_inverse().scale(-c).shift_n(-1)
    lhs = partial_of_scalar(t_polynomial(twol, twon, twom).subs_inverse().shift_n(-1))
    if not (lhs - out).is_zero():
        raise AssertionError(f"derivative identity failed at (2l,2n,2m)=({twol},{twon},{twom})")
    return out


def t_matrix_of_product(twol, zmat):
    """Representation matrix [t^l_{n m}] evaluated on a numeric 2x2 matrix."""
    dim = twol + 1
    out = [[None] * dim for _ in range(dim)]
    for i in range(dim):
        for j in range(dim):
            out[i][j] = t_polynomial(twol, -twol + 2 * i, -twol + 2 * j).evaluate(zmat)
    return out
