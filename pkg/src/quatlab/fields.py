"""The exact function ring C[z11, z12, z21, z22, N(Z)^-1] and matrix variants.

A ScalarField is stored in the canonical graded form

    f = sum_k N^k * p_k

where N = z11*z22 - z12*z21 and each p_k is fully reduced under the rewrite
z11*z22 -> N + z12*z21 (no monomial of p_k has both e11 > 0 and e22 > 0).
The rewrite is confluent and strictly decreases e11 + e22, so the form is
unique; equality is a dict comparison.

Harmonic decomposition, the inversion substitution Z -> Z^-1 = Z^+/N, and
the exact SU(2) / U(2) integration functionals live here as well.  The two
functionals are implemented algebraically: restriction to the group kills
every non-constant harmonic, so an integral reduces to reading off constant
harmonics at the right grading (see su2_integral / u2_integral).
"""

from __future__ import annotations

from fractions import Fraction

from quatlab._poly import (
    QI_ONE,
    QI_ZERO,
    poly_add,
    poly_diff,
    poly_mul,
    poly_neg,
    poly_reduce_n,
    poly_scale,
    qi_add,
    qi_is_zero,
    qi_mul,
    qi_neg,
)
from quatlab.scalars import ExactScalar, qi

VAR_NAMES = ("z11", "z12", "z21", "z22")

# d(N)/d(z_ij) as (variable index, coefficient) pairs: dN/dz11 = z22, etc.
_DN = {
    0: (3, QI_ONE),
    1: (2, (Fraction(-1), Fraction(0))),
    2: (1, (Fraction(-1), Fraction(0))),
    3: (0, QI_ONE),
}


def _mono_key(e11, e12, e21, e22):
    return e11 | (e12 << 8) | (e21 << 16) | (e22 << 24)


def _unpack(key):
    return (key & 0xFF, (key >> 8) & 0xFF, (key >> 16) & 0xFF, (key >> 24) & 0xFF)


def _mono_degree(key):
    e = _unpack(key)
    return e[0] + e[1] + e[2] + e[3]


def _poly_is_zero(p):
    return not p


def poly_laplacian(p):
    """4*(d11 d22 - d12 d21) applied to a plain polynomial dict."""
    a = poly_diff(poly_diff(p, 0), 3)
    b = poly_diff(poly_diff(p, 1), 2)
    return poly_scale(poly_add(a, poly_neg(b)), qi(4))


class ScalarField:
    """Element of C[z11, z12, z21, z22, N^-1] in canonical graded form."""

    __slots__ = ("blocks",)

    def __init__(self, blocks=None, reduced=False):
        if blocks is None:
            self.blocks = {}
            return
        if reduced:
            self.blocks = {k: p for k, p in blocks.items() if p}
            return
        self.blocks = _canonicalize(blocks)

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def const(cls, c):
        if isinstance(c, int) or isinstance(c, Fraction):
            c = qi(c)
        if qi_is_zero(c):
            return cls()
        return cls({0: {0: c}}, reduced=True)

    @classmethod
    def one(cls):
        return cls.const(qi(1))

    @classmethod
    def gen(cls, i):
        """The coordinate z11, z12, z21 or z22 (i = 0..3)."""
        return cls({0: {_mono_key(*(1 if j == i else 0 for j in range(4))): QI_ONE}}, reduced=True)

    @classmethod
    def n_power(cls, k):
        return cls({k: {0: QI_ONE}}, reduced=True)

    @classmethod
    def monomial(cls, coeff, e11, e12, e21, e22, npow=0):
        return cls({npow: {_mono_key(e11, e12, e21, e22): coeff}})

    # -- predicates ----------------------------------------------------

    def is_zero(self):
        return not self.blocks

    def __bool__(self):
        return bool(self.blocks)

    def __eq__(self, other):
        if not isinstance(other, ScalarField):
            return NotImplemented
        return self.blocks == other.blocks

    def __hash__(self):
        return hash(tuple(sorted((k, frozenset(p.items())) for k, p in self.blocks.items())))

    # -- ring operations ------------------------------------------------

    def __add__(self, other):
        other = _coerce_field(other)
        out = dict(self.blocks)
        for k, p in other.blocks.items():
            if k in out:
                s = poly_add(out[k], p)
                if s:
                    out[k] = s
                else:
                    del out[k]
            else:
                out[k] = p
        return ScalarField(out, reduced=True)

    __radd__ = __add__

    def __neg__(self):
        return ScalarField({k: poly_neg(p) for k, p in self.blocks.items()}, reduced=True)

    def __sub__(self, other):
        return self + (-_coerce_field(other))

    def __rsub__(self, other):
        return _coerce_field(other) + (-self)

    def __mul__(self, other):
        other = _coerce_field(other)
        out = {}
        for k1, p1 in self.blocks.items():
            for k2, p2 in other.blocks.items():
                k = k1 + k2
                pr = poly_mul(p1, p2)
                if k in out:
                    out[k] = poly_add(out[k], pr)
                else:
                    out[k] = pr
        return ScalarField(out)

    __rmul__ = __mul__

    def scale(self, c):
        if isinstance(c, (int, Fraction)):
            c = qi(c)
        return ScalarField({k: poly_scale(p, c) for k, p in self.blocks.items()}, reduced=True)

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative powers only via n_power blocks")
        out = ScalarField.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base if n > 1 else base
            n >>= 1
        return out

    def shift_n(self, k):
        """Multiply by N^k (exact for any integer k)."""
        return ScalarField({kk + k: p for kk, p in self.blocks.items()}, reduced=True)

    # -- calculus --------------------------------------------------------

    def diff(self, var):
        """d/dz_ij with (z11, z12, z21, z22) indexed 0..3."""
        out = {}
        dvar, dcoef = _DN[var]
        for k, p in self.blocks.items():
            dp = poly_diff(p, var)
            if dp:
                out.setdefault(k, [])
                out[k].append(dp)
            if k:
                gen_p = {_mono_key(*(1 if j == dvar else 0 for j in range(4))): dcoef}
                extra = poly_scale(poly_mul(gen_p, p), qi(k))
                if extra:
                    out.setdefault(k - 1, [])
                    out[k - 1].append(extra)
        merged = {}
        for k, ps in out.items():
            tot = {}
            for p in ps:
                tot = poly_add(tot, p)
            if tot:
                merged[k] = tot
        return ScalarField(merged)

    def degree_op(self):
        """Euler operator sum z_ij d/dz_ij."""
        out = ScalarField.zero()
        for v in range(4):
            out = out + ScalarField.gen(v) * self.diff(v)
        return out

    def homogeneous_components(self):
        """Split into {total degree: field}; degree of N^k p is 2k + deg p."""
        comps = {}
        for k, p in self.blocks.items():
            for key, c in p.items():
                d = 2 * k + _mono_degree(key)
                comps.setdefault(d, {}).setdefault(k, {})[key] = c
        return {d: ScalarField(b, reduced=True) for d, b in sorted(comps.items())}

    def is_homogeneous(self):
        return len(self.homogeneous_components()) <= 1

    def homogeneity(self):
        comps = self.homogeneous_components()
        if len(comps) != 1:
            raise ValueError("inhomogeneous input")
        return next(iter(comps))

    def subs_inverse(self):
        """The substitution f(Z) -> f(Z^-1), via Z^-1 = Z^+/N.  Involutive.

        Entrywise: z11 -> z22/N, z12 -> -z12/N, z21 -> -z21/N, z22 -> z11/N,
        and N -> 1/N.
        """
        out = {}
        for k, p in self.blocks.items():
            for key, c in p.items():
                e11, e12, e21, e22 = _unpack(key)
                d = e11 + e12 + e21 + e22
                sign = (-1) ** (e12 + e21)
                nk = -k - d
                nkey = _mono_key(e22, e12, e21, e11)
                cc = qi_mul(c, qi(sign))
                out.setdefault(nk, {})
                s = qi_add(out[nk].get(nkey, QI_ZERO), cc)
                if qi_is_zero(s):
                    out[nk].pop(nkey, None)
                else:
                    out[nk][nkey] = s
        return ScalarField(out)

    def conj_entries(self):
        """Complex-conjugate the i in coefficients (used by numeric checks)."""
        out = {}
        for k, p in self.blocks.items():
            out[k] = {key: (c[0], -c[1]) for key, c in p.items()}
        return ScalarField(out, reduced=True)

    # -- harmonic structure ----------------------------------------------

    def laplacian(self):
        """The flat 4d Laplacian, box = 4(d11 d22 - d12 d21)."""
        a = self.diff(0).diff(3)
        b = self.diff(1).diff(2)
        return (a - b).scale(qi(4))

    def harmonic_parts(self):
        """Write f = sum_m N^m H_m with every H_m harmonic; {m: poly dict}.

        Exact and unique (solid-harmonics decomposition done degree by
        degree); works for any Laurent element.
        """
        parts = {}
        for k, p in self.blocks.items():
            by_deg = {}
            for key, c in p.items():
                by_deg.setdefault(_mono_degree(key), {})[key] = c
            for d, ph in by_deg.items():
                for j, h in _poly_harmonic_decomp(ph, d).items():
                    m = k + j
                    parts[m] = poly_add(parts.get(m, {}), h)
        return {m: h for m, h in parts.items() if h}

    def harmonic_decomposition(self):
        """Spec form: list of (j, h_j as ScalarField) for homogeneous input."""
        if not self.is_homogeneous():
            raise ValueError("inhomogeneous input")
        out = []
        for m, h in sorted(self.harmonic_parts().items()):
            out.append((m, ScalarField({0: h})))
        return out

    # -- evaluation and display -------------------------------------------

    def evaluate(self, z):
        """Numeric value at a 2x2 complex matrix (nested list or ndarray)."""
        z11, z12 = complex(z[0][0]), complex(z[0][1])
        z21, z22 = complex(z[1][0]), complex(z[1][1])
        nval = z11 * z22 - z12 * z21
        tot = 0j
        for k, p in self.blocks.items():
            s = 0j
            for key, (cr, ci) in p.items():
                e11, e12, e21, e22 = _unpack(key)
                s += (float(cr) + 1j * float(ci)) * z11**e11 * z12**e12 * z21**e21 * z22**e22
            tot += s * nval**k
        return tot

    def constant_term(self):
        """Coefficient of N^0 * 1."""
        return self.blocks.get(0, {}).get(0, QI_ZERO)

    def __repr__(self):
        from quatlab.grammar import format_field

        return format_field(self)


def _coerce_field(x):
    if isinstance(x, ScalarField):
        return x
    if isinstance(x, (int, Fraction)):
        return ScalarField.const(qi(x))
    if isinstance(x, tuple) and len(x) == 2:
        return ScalarField.const(x)
    raise TypeError(f"cannot coerce {x!r} to ScalarField")


def _canonicalize(blocks):
    work = {k: p for k, p in blocks.items() if p}
    out = {}
    while work:
        k = min(work)
        p = work.pop(k)
        quot, rem = poly_reduce_n(p)
        if rem:
            if k in out:
                rem = poly_add(out[k], rem)
            if rem:
                out[k] = rem
            else:
                del out[k]
        if quot:
            if k + 1 in work:
                work[k + 1] = poly_add(work[k + 1], quot)
                if not work[k + 1]:
                    del work[k + 1]
            else:
                work[k + 1] = quot
    return out


def _poly_harmonic_decomp(p, d):
    """p homogeneous of degree d -> {j: h_j} with p = sum N^j h_j, h harmonic."""
    if not p:
        return {}
    lap = poly_laplacian(p)
    if not lap:
        return {0: p}
    sub = _poly_harmonic_decomp(lap, d - 2)
    out = {}
    n_poly = {_mono_key(1, 0, 0, 1): QI_ONE, _mono_key(0, 1, 1, 0): (Fraction(-1), Fraction(0))}
    acc = dict(p)
    for j in sorted(sub):
        out[j + 1] = poly_scale(sub[j], qi(Fraction(1, 4 * (j + 1) * (d - j))))
    for j, h in out.items():
        term = h
        for _ in range(j):
            term = poly_mul(term, n_poly)
        acc = poly_add(acc, poly_neg(term))
    if acc:
        out[0] = acc
    return out


# -- integration functionals ------------------------------------------------


def su2_general(f: ScalarField):
    """(1/2 pi^2) * integral over SU(2) of f restricted to the unit sphere.

    On SU(2), N = 1 and every non-constant harmonic integrates to zero, so
    the value is the sum of all degree-zero harmonic coefficients.
    """
    tot = QI_ZERO
    for _m, h in f.harmonic_parts().items():
        c = h.get(0)
        if c is not None:
            tot = qi_add(tot, c)
    return tot


def su2_integral(f: ScalarField) -> ExactScalar:
    return ExactScalar.from_qi(su2_general(f))


def u2_general(f: ScalarField):
    """(i/2 pi^3) * integral over U(2)_R of f, zero unless homogeneity -4.

    The central-circle factor kills every total homogeneity except -4, and
    on the remaining part only the constant harmonic at N^-2 survives.
    Calibrated so that u2_general(N^-2) = 1.
    """
    comp = f.homogeneous_components().get(-4)
    if comp is None:
        return QI_ZERO
    h = comp.harmonic_parts().get(-2, {})
    return h.get(0, QI_ZERO)


def u2_integral(f: ScalarField) -> ExactScalar:
    """Strict form: errors unless the integrand is scale-invariant."""
    for d, comp in f.homogeneous_components().items():
        if d != -4 and not comp.is_zero():
            raise ValueError("not scale-invariant")
    return ExactScalar.from_qi(u2_general(f))


# -- matrix-valued fields -----------------------------------------------------


class FieldMatrix:
    """Dense (rows x cols) array of ScalarField entries.

    Covers 2x2 matrix fields, 4-columns / 4-rows (symmetric-spinor valued
    functions) and 4x4 tensor fields; shape is checked in products.
    """

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows, cols, entries=None):
        self.rows = rows
        self.cols = cols
        if entries is None:
            self.entries = [[ScalarField.zero() for _ in range(cols)] for _ in range(rows)]
        else:
            assert len(entries) == rows and all(len(r) == cols for r in entries)
            self.entries = [[_coerce_field(e) for e in r] for r in entries]

    # constructors
    @classmethod
    def zero(cls, rows, cols):
        return cls(rows, cols)

    @classmethod
    def identity(cls, n=2):
        m = cls(n, n)
        for i in range(n):
            m.entries[i][i] = ScalarField.one()
        return m

    @classmethod
    def z_matrix(cls):
        return cls(2, 2, [[ScalarField.gen(0), ScalarField.gen(1)], [ScalarField.gen(2), ScalarField.gen(3)]])

    @classmethod
    def column(cls, entries):
        return cls(len(entries), 1, [[e] for e in entries])

    @classmethod
    def row(cls, entries):
        return cls(1, len(entries), [list(entries)])

    def __getitem__(self, ij):
        return self.entries[ij[0]][ij[1]]

    def column_entries(self):
        assert self.cols == 1
        return [self.entries[i][0] for i in range(self.rows)]

    def row_entries(self):
        assert self.rows == 1
        return list(self.entries[0])

    def is_zero(self):
        return all(e.is_zero() for r in self.entries for e in r)

    def __eq__(self, other):
        if not isinstance(other, FieldMatrix):
            return NotImplemented
        return self.rows == other.rows and self.cols == other.cols and self.entries == other.entries

    def __add__(self, other):
        assert self.rows == other.rows and self.cols == other.cols
        return FieldMatrix(
            self.rows,
            self.cols,
            [[self.entries[i][j] + other.entries[i][j] for j in range(self.cols)] for i in range(self.rows)],
        )

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return FieldMatrix(self.rows, self.cols, [[-e for e in r] for r in self.entries])

    def __matmul__(self, other):
        assert self.cols == other.rows
        out = FieldMatrix(self.rows, other.cols)
        for i in range(self.rows):
            for j in range(other.cols):
                s = ScalarField.zero()
                for k in range(self.cols):
                    s = s + self.entries[i][k] * other.entries[k][j]
                out.entries[i][j] = s
        return out

    def scale(self, c):
        if isinstance(c, ScalarField):
            return FieldMatrix(self.rows, self.cols, [[e * c for e in r] for r in self.entries])
        return FieldMatrix(self.rows, self.cols, [[e.scale(c) for e in r] for r in self.entries])

    def map(self, fn):
        return FieldMatrix(self.rows, self.cols, [[fn(e) for e in r] for r in self.entries])

    def trace(self):
        assert self.rows == self.cols
        s = ScalarField.zero()
        for i in range(self.rows):
            s = s + self.entries[i][i]
        return s

    def transpose(self):
        return FieldMatrix(self.cols, self.rows, [[self.entries[i][j] for i in range(self.rows)] for j in range(self.cols)])

    def adjugate(self):
        """Z^+ for 2x2: (z22, -z12; -z21, z11).  Z Z^+ = N(Z) Id."""
        assert self.rows == 2 and self.cols == 2
        a, b = self.entries[0]
        c, d = self.entries[1]
        return FieldMatrix(2, 2, [[d, -b], [-c, a]])

    def det2(self):
        assert self.rows == 2 and self.cols == 2
        return self.entries[0][0] * self.entries[1][1] - self.entries[0][1] * self.entries[1][0]

    def kron(self, other):
        """Kronecker product; (A kron B)(C kron D) = AC kron BD."""
        out = FieldMatrix(self.rows * other.rows, self.cols * other.cols)
        for i in range(self.rows):
            for j in range(self.cols):
                for k in range(other.rows):
                    for l in range(other.cols):
                        out.entries[i * other.rows + k][j * other.cols + l] = self.entries[i][j] * other.entries[k][l]
        return out

    def subs_inverse(self):
        return self.map(lambda e: e.subs_inverse())

    def shift_n(self, k):
        return self.map(lambda e: e.shift_n(k))

    def evaluate(self, z):
        return [[self.entries[i][j].evaluate(z) for j in range(self.cols)] for i in range(self.rows)]

    def homogeneous_components(self):
        degs = set()
        for r in self.entries:
            for e in r:
                degs |= set(e.homogeneous_components().keys())
        out = {}
        for d in sorted(degs):
            out[d] = self.map(lambda e, d=d: e.homogeneous_components().get(d, ScalarField.zero()))
        return out

    def __repr__(self):
        rows = []
        for r in self.entries:
            rows.append("[" + ", ".join(repr(e) for e in r) + "]")
        return f"FieldMatrix({self.rows}x{self.cols}, " + "; ".join(rows) + ")"


def is_symmetric_pair_valued(col: FieldMatrix) -> bool:
    """Whether a 4-column (or 4-row) has equal second and third entries."""
    if col.cols == 1 and col.rows == 4:
        return col.entries[1][0] == col.entries[2][0]
    if col.rows == 1 and col.cols == 4:
        return col.entries[0][1] == col.entries[0][2]
    raise ValueError("expected a 4-column or 4-row")


N_FIELD = ScalarField.n_power(1)
N_INV_FIELD = ScalarField.n_power(-1)
