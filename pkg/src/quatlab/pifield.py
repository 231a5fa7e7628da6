"""Fields with pi-polynomial coefficients.

The symbolic core works over Q(i); diagonal limits and closed-form constants
introduce powers of pi.  PiField / PiMatrix wrap a dict {pi power: value}
so those results stay exact.
"""

from __future__ import annotations

from fractions import Fraction

from quatlab.fields import FieldMatrix, ScalarField
from quatlab.scalars import ExactScalar, qi


class PiField:
    """Sum over k of pi^k * (ScalarField)."""

    __slots__ = ("parts",)

    def __init__(self, parts=None):
        p = {}
        if parts:
            for k, f in parts.items():
                if not f.is_zero():
                    p[k] = f
        self.parts = p

    @classmethod
    def from_field(cls, f: ScalarField):
        return cls({0: f})

    @classmethod
    def from_exact(cls, e: ExactScalar):
        return cls({k: ScalarField.const(c) for k, c in e.terms.items()})

    @classmethod
    def zero(cls):
        return cls()

    def is_zero(self):
        return not self.parts

    def as_field(self) -> ScalarField:
        if any(k != 0 for k in self.parts):
            raise ValueError("value has a pi part")
        return self.parts.get(0, ScalarField.zero())

    def as_exact(self) -> ExactScalar:
        """Constant (degree-0, N^0) value as an ExactScalar."""
        terms = {}
        for k, f in self.parts.items():
            const = f.constant_term()
            if f != ScalarField.const(const):
                raise ValueError("value is not a constant")
            terms[k] = const
        return ExactScalar(terms)

    def __add__(self, other):
        other = _coerce(other)
        p = dict(self.parts)
        for k, f in other.parts.items():
            s = p.get(k, ScalarField.zero()) + f
            if s.is_zero():
                p.pop(k, None)
            else:
                p[k] = s
        return PiField(p)

    __radd__ = __add__

    def __neg__(self):
        return PiField({k: -f for k, f in self.parts.items()})

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        p = {}
        for k1, f1 in self.parts.items():
            for k2, f2 in other.parts.items():
                k = k1 + k2
                s = p.get(k, ScalarField.zero()) + f1 * f2
                if s.is_zero():
                    p.pop(k, None)
                else:
                    p[k] = s
        return PiField(p)

    __rmul__ = __mul__

    def scale_exact(self, e: ExactScalar):
        return self * PiField.from_exact(e)

    def __eq__(self, other):
        if not isinstance(other, PiField):
            return NotImplemented
        return self.parts == other.parts

    def evaluate(self, z):
        import math

        return sum(f.evaluate(z) * math.pi**k for k, f in self.parts.items())

    def __repr__(self):
        from quatlab.grammar import format_pifield

        return format_pifield(self)


class PiMatrix:
    """Matrix with PiField entries (used for diagonal-limit outputs)."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows, cols, entries=None):
        self.rows = rows
        self.cols = cols
        if entries is None:
            self.entries = [[PiField.zero() for _ in range(cols)] for _ in range(rows)]
        else:
            self.entries = [[_coerce(e) for e in row] for row in entries]

    @classmethod
    def from_matrix(cls, m: FieldMatrix):
        return cls(m.rows, m.cols, [[PiField.from_field(e) for e in r] for r in m.entries])

    def as_matrix(self) -> FieldMatrix:
        return FieldMatrix(self.rows, self.cols, [[e.as_field() for e in r] for r in self.entries])

    def __add__(self, other):
        assert self.rows == other.rows and self.cols == other.cols
        return PiMatrix(
            self.rows,
            self.cols,
            [[self.entries[i][j] + other.entries[i][j] for j in range(self.cols)] for i in range(self.rows)],
        )

    def __neg__(self):
        return PiMatrix(self.rows, self.cols, [[-e for e in r] for r in self.entries])

    def __sub__(self, other):
        return self + (-other)

    def __matmul__(self, other):
        assert self.cols == other.rows
        out = PiMatrix(self.rows, other.cols)
        for i in range(self.rows):
            for j in range(other.cols):
                s = PiField.zero()
                for k in range(self.cols):
                    s = s + self.entries[i][k] * other.entries[k][j]
                out.entries[i][j] = s
        return out

    def scale(self, c):
        return PiMatrix(self.rows, self.cols, [[e * c for e in r] for r in self.entries])

    def is_zero(self):
        return all(e.is_zero() for r in self.entries for e in r)

    def __eq__(self, other):
        if not isinstance(other, PiMatrix):
            return NotImplemented
        return self.rows == other.rows and self.cols == other.cols and self.entries == other.entries

    def __repr__(self):
        rows = []
        for r in self.entries:
            rows.append("[" + ", ".join(repr(e) for e in r) + "]")
        return f"PiMatrix({self.rows}x{self.cols}, " + "; ".join(rows) + ")"


def _coerce(x) -> PiField:
    if isinstance(x, PiField):
        return x
    if isinstance(x, ScalarField):
        return PiField.from_field(x)
    if isinstance(x, ExactScalar):
        return PiField.from_exact(x)
    if isinstance(x, (int, Fraction)):
        return PiField.from_field(ScalarField.const(qi(x)))
    if isinstance(x, tuple) and len(x) == 2:
        return PiField.from_field(ScalarField.const(x))
    raise TypeError(f"cannot coerce {x!r} to PiField")
