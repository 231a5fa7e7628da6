"""Exact scalar tower: Gaussian rationals and polynomials in the symbol pi.

The working coefficient field for all symbolic computation is Q(i),
represented as a pair (re, im) of fractions.Fraction.  Closed-form constants
(diagonal limits, Bernoulli constants) additionally carry powers of pi; they
live in ExactScalar, a polynomial in the formal transcendental pi with Q(i)
coefficients.
"""

from __future__ import annotations

from fractions import Fraction

from quatlab._poly import QI_ONE, QI_ZERO, qi_add, qi_inv, qi_is_zero, qi_mul, qi_neg


def qi(re=0, im=0):
    """Build a Gaussian rational from ints/Fractions/strings."""
    return (Fraction(re), Fraction(im))


QI_I = qi(0, 1)


def qi_str(a) -> str:
    """Canonical text form 'a/b+c/d*i' (zero parts omitted, '0' if zero)."""
    re, im = a
    parts = []
    if re:
        parts.append(str(re))
    if im:
        s = f"{im}*i"
        if parts and im > 0:
            parts.append("+" + s)
        else:
            parts.append(s)
    return "".join(parts) if parts else "0"


class ExactScalar:
    """Polynomial in the formal symbol pi with Gaussian-rational coefficients.

    pi is treated as transcendental: no relations are imposed, so equality
    is decidable coefficient-wise.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        t = {}
        if terms:
            for k, c in terms.items():
                if not qi_is_zero(c):
                    t[k] = c
        self.terms = t

    @classmethod
    def from_qi(cls, c):
        return cls({0: c})

    @classmethod
    def of(cls, re=0, im=0, pi_power=0):
        return cls({pi_power: qi(re, im)})

    @classmethod
    def pi(cls, power=1):
        return cls({power: QI_ONE})

    def is_zero(self) -> bool:
        return not self.terms

    def constant_part(self):
        return self.terms.get(0, QI_ZERO)

    def as_qi(self):
        """The Q(i) value, failing if a genuine pi power is present."""
        if any(k != 0 for k in self.terms):
            raise ValueError("scalar has transcendental (pi) part")
        return self.terms.get(0, QI_ZERO)

    def __add__(self, other):
        other = _coerce(other)
        t = dict(self.terms)
        for k, c in other.terms.items():
            s = qi_add(t.get(k, QI_ZERO), c)
            if qi_is_zero(s):
                t.pop(k, None)
            else:
                t[k] = s
        return ExactScalar(t)

    __radd__ = __add__

    def __neg__(self):
        return ExactScalar({k: qi_neg(c) for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        t = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                k = k1 + k2
                s = qi_add(t.get(k, QI_ZERO), qi_mul(c1, c2))
                if qi_is_zero(s):
                    t.pop(k, None)
                else:
                    t[k] = s
        return ExactScalar(t)

    __rmul__ = __mul__

    def scale(self, c):
        return ExactScalar({k: qi_mul(v, c) for k, v in self.terms.items()})

    def __eq__(self, other):
        try:
            other = _coerce(other)
        except TypeError:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for k in sorted(self.terms):
            c = qi_str(self.terms[k])
            if k == 0:
                parts.append(c)
            else:
                p = "pi" if k == 1 else f"pi^{k}"
                parts.append(f"({c})*{p}")
        return " + ".join(parts)

    def evaluate(self) -> complex:
        """Numeric value with pi = 3.14159..."""
        import math

        tot = 0j
        for k, (re, im) in self.terms.items():
            tot += (float(re) + 1j * float(im)) * math.pi**k
        return tot


def _coerce(x) -> ExactScalar:
    if isinstance(x, ExactScalar):
        return x
    if isinstance(x, (int, Fraction)):
        return ExactScalar.from_qi(qi(x))
    if isinstance(x, tuple) and len(x) == 2:
        return ExactScalar.from_qi(x)
    raise TypeError(f"cannot coerce {x!r} to ExactScalar")


def qi_div(a, b):
    return qi_mul(a, qi_inv(b))
