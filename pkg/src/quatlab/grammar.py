"""Textual expression grammar shared by the library and the CLI.

Terms:  N^<int>   z11 z12 z21 z22   t[<2l>,<2n>,<2m>]   inv(t[...])
        fam(<name>,...)   Gaussian rationals a/b+c/d*i   pi
Operators: + - * ^ and parentheses.  inv(t[...]) denotes N^-1 * t(Z^-1).

Values are PiField (scalar) or PiMatrix (family references); every emitted
expression re-parses to an equal canonical value.
"""

from __future__ import annotations

import re
from fractions import Fraction

from quatlab.fields import ScalarField, _unpack
from quatlab.pifield import PiField, PiMatrix
from quatlab.scalars import qi

_TOKEN = re.compile(
    r"\s*(?:(?P<num>\d+(?:/\d+)?)|(?P<name>[A-Za-z][A-Za-z0-9']*)"
    r"|(?P<op>[\^+\-*(),\[\]]))"
)

VAR_BY_NAME = {"z11": 0, "z12": 1, "z21": 2, "z22": 3}


class ParseError(ValueError):
    def __init__(self, msg, pos):
        super().__init__(f"{msg} at position {pos}")
        self.pos = pos


def tokenize(text):
    toks = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == m.start():
            if text[pos:].strip():
                raise ParseError(f"unexpected character {text[pos]!r}", pos)
            break
        if m.group("num"):
            toks.append(("num", Fraction(m.group("num")), m.start()))
        elif m.group("name"):
            toks.append(("name", m.group("name"), m.start()))
        else:
            toks.append(("op", m.group("op"), m.start()))
        pos = m.end()
    toks.append(("end", None, len(text)))
    return toks


class Parser:
    def __init__(self, text):
        self.toks = tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def next(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def expect(self, kind, value=None):
        t = self.next()
        if t[0] != kind or (value is not None and t[1] != value):
            raise ParseError(f"expected {value or kind}, got {t[1]!r}", t[2])
        return t

    def parse(self):
        v = self.parse_sum()
        t = self.peek()
        if t[0] != "end":
            raise ParseError(f"trailing input {t[1]!r}", t[2])
        return v

    def parse_sum(self):
        v = self.parse_product()
        while True:
            t = self.peek()
            if t[0] == "op" and t[1] in "+-":
                self.next()
                rhs = self.parse_product()
                v = v + rhs if t[1] == "+" else v - rhs
            else:
                return v

    def parse_product(self):
        v = self.parse_unary()
        while True:
            t = self.peek()
            if t[0] == "op" and t[1] == "*":
                self.next()
                v = _mul(v, self.parse_unary())
            else:
                return v

    def parse_unary(self):
        t = self.peek()
        if t[0] == "op" and t[1] == "-":
            self.next()
            return -self.parse_unary()
        return self.parse_power()

    def parse_power(self):
        base = self.parse_atom()
        t = self.peek()
        if t[0] == "op" and t[1] == "^":
            self.next()
            exp = self._signed_int()
            return _power(base, exp, t[2])
        return base

    def _signed_int(self):
        sign = 1
        t = self.peek()
        if t[0] == "op" and t[1] == "-":
            self.next()
            sign = -1
        t = self.expect("num")
        if t[1].denominator != 1:
            raise ParseError("exponent must be an integer", t[2])
        return sign * int(t[1])

    def parse_atom(self):
        t = self.next()
        if t[0] == "num":
            return PiField.from_field(ScalarField.const(qi(t[1])))
        if t[0] == "op" and t[1] == "(":
            v = self.parse_sum()
            self.expect("op", ")")
            return v
        if t[0] == "name":
            name = t[1]
            if name in VAR_BY_NAME:
                return PiField.from_field(ScalarField.gen(VAR_BY_NAME[name]))
            if name == "N":
                nxt = self.peek()
                if nxt[0] == "op" and nxt[1] == "^":
                    self.next()
                    k = self._signed_int()
                    return PiField.from_field(ScalarField.n_power(k))
                return PiField.from_field(ScalarField.n_power(1))
            if name == "i":
                return PiField.from_field(ScalarField.const(qi(0, 1)))
            if name == "pi":
                return PiField({1: ScalarField.one()})
            if name == "t":
                idx = self._bracket_ints(3, t[2])
                return _t_value(idx, inverted=False)
            if name == "inv":
                self.expect("op", "(")
                tt = self.expect("name")
                if tt[1] != "t":
                    raise ParseError("inv(...) expects t[...]", tt[2])
                idx = self._bracket_ints(3, tt[2])
                self.expect("op", ")")
                return _t_value(idx, inverted=True)
            if name == "fam":
                return self._parse_family(t[2])
            raise ParseError(f"unknown symbol {name!r}", t[2])
        raise ParseError(f"unexpected token {t[1]!r}", t[2])

    def _bracket_ints(self, n, pos):
        self.expect("op", "[")
        vals = []
        for j in range(n):
            if j:
                self.expect("op", ",")
            vals.append(self._signed_int())
        self.expect("op", "]")
        return tuple(vals)

    def _parse_family(self, pos):
        from quatlab import families

        self.expect("op", "(")
        t = self.expect("name")
        fname = t[1]
        args = []
        while True:
            nxt = self.peek()
            if nxt[0] == "op" and nxt[1] == ",":
                self.next()
                args.append(self._signed_int())
            else:
                break
        self.expect("op", ")")
        val = families.family(fname, *args)
        from quatlab.fields import FieldMatrix

        if isinstance(val, FieldMatrix):
            return PiMatrix.from_matrix(val)
        return PiField.from_field(val)


def _t_value(idx, inverted):
    from quatlab.tcoeff import t_polynomial

    f = t_polynomial(*idx)
    if inverted:
        f = f.subs_inverse().shift_n(-1)
    return PiField.from_field(f)


def _mul(a, b):
    if isinstance(a, PiMatrix) and isinstance(b, PiMatrix):
        return a @ b
    if isinstance(a, PiMatrix):
        return a.scale(b)
    if isinstance(b, PiMatrix):
        return b.scale(a)
    return a * b


def _power(base, exp, pos):
    if isinstance(base, PiMatrix):
        raise ParseError("matrix powers are not supported", pos)
    if exp >= 0:
        out = PiField.from_field(ScalarField.one())
        for _ in range(exp):
            out = out * base
        return out
    # negative powers only for pure N^k or constants
    f = base.as_field()
    if list(f.blocks.keys()) == [1] and f.blocks[1] == {0: (Fraction(1), Fraction(0))}:
        return PiField.from_field(ScalarField.n_power(exp))
    raise ParseError("negative powers are only supported for N", pos)


def parse_expression(text):
    return Parser(text).parse()


def parse_field(text) -> ScalarField:
    v = parse_expression(text)
    if isinstance(v, PiMatrix):
        raise ValueError("expected a scalar expression")
    return v.as_field()


# -- formatting ---------------------------------------------------------------


def _format_coeff(c) -> str:
    from quatlab.scalars import qi_str

    s = qi_str(c)
    if "+" in s[1:] or "*" in s or "/" in s or s.startswith("-"):
        return f"({s})"
    return s


def format_field(f: ScalarField) -> str:
    terms = []
    for k in sorted(f.blocks):
        p = f.blocks[k]
        for key in sorted(p):
            e = _unpack(key)
            factors = []
            c = p[key]
            if not (c == (Fraction(1), Fraction(0)) and (any(e) or k)):
                factors.append(_format_coeff(c))
            for name, ee in zip(("z11", "z12", "z21", "z22"), e):
                if ee == 1:
                    factors.append(name)
                elif ee > 1:
                    factors.append(f"{name}^{ee}")
            if k:
                factors.append(f"N^{k}" if k != 1 else "N")
            terms.append("*".join(factors) if factors else "1")
    return " + ".join(terms) if terms else "0"


def format_pifield(v: PiField) -> str:
    terms = []
    for k in sorted(v.parts):
        body = format_field(v.parts[k])
        if k == 0:
            terms.append(body)
        else:
            ppow = "pi" if k == 1 else f"pi^{k}"
            if " + " in body or body.startswith("-"):
                body = f"({body})"
            terms.append(f"{ppow}*{body}")
    return " + ".join(terms) if terms else "0"
