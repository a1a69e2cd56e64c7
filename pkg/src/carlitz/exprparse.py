"""Parser for rational-function expressions.

Grammar (whitespace is ignored)::

    expr   := term (("+" | "-") term)*
    term   := unary (("*" | "/") unary)*
    unary  := ("+" | "-") unary | power
    power  := atom ("^" ["-"] INT)?
    atom   := INT | "x" | "t" | "g" | "(" expr ")"

``x`` is the function-field variable, ``t`` the motive variable and ``g``
the fixed generator of F_{q^m}.  Integer literals are reduced modulo p.  The
divisor of ``/`` must not involve ``t``.
"""

from __future__ import annotations

import re

from .ffcore import FieldSpec, FPoly, RatFunc
from .tpoly import TPoly

_TOKEN = re.compile(r"\s*(?:(\d+)|([xtg])|(.))")


class ParseError(ValueError):
    def __init__(self, message: str, offset: int, text: str = ""):
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset
        self.text = text


class _Parser:
    def __init__(self, spec: FieldSpec, text: str):
        self.spec = spec
        self.text = text
        self.toks = []
        pos = 0
        while pos < len(text):
            m = _TOKEN.match(text, pos)
            if m.group(0).strip() == "":
                break
            start = m.start(m.lastindex)
            if m.group(1) is not None:
                self.toks.append(("int", int(m.group(1)), start))
            elif m.group(2) is not None:
                self.toks.append(("var", m.group(2), start))
            else:
                ch = m.group(3)
                if ch not in "+-*/^()":
                    raise ParseError(f"unexpected character {ch!r}", start, text)
                self.toks.append(("op", ch, start))
            pos = m.end()
        self.i = 0
        self.t_offset = next((off for kind, val, off in self.toks if kind == "var" and val == "t"), None)

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else ("end", None, len(self.text))

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def expect(self, ch):
        kind, val, off = self.take()
        if kind != "op" or val != ch:
            raise ParseError(f"expected {ch!r}", off, self.text)

    # values are TPoly throughout
    def const(self, c: int) -> TPoly:
        return TPoly(self.spec, (RatFunc.const(self.spec.big, c),))

    def parse(self) -> TPoly:
        if not self.toks:
            raise ParseError("empty expression", 0, self.text)
        v = self.expr()
        kind, val, off = self.peek()
        if kind != "end":
            raise ParseError(f"unexpected token {val!r}", off, self.text)
        return v

    def expr(self):
        v = self.term()
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val in "+-":
                self.take()
                rhs = self.term()
                v = v + rhs if val == "+" else v - rhs
            else:
                return v

    def term(self):
        v = self.unary()
        while True:
            kind, val, off = self.peek()
            if kind == "op" and val in "*/":
                self.take()
                rhs_off = self.peek()[2]
                rhs = self.unary()
                if val == "*":
                    v = v * rhs
                else:
                    v = self._divide(v, rhs, rhs_off)
            else:
                return v

    def _divide(self, a: TPoly, b: TPoly, off: int) -> TPoly:
        if b.deg != 0:
            if b.is_zero():
                raise ParseError("division by zero", off, self.text)
            raise ParseError("the divisor must not involve t", off, self.text)
        inv = b.coeffs[0].inverse()
        return TPoly(self.spec, [c * inv for c in a.coeffs])

    def unary(self):
        kind, val, _ = self.peek()
        if kind == "op" and val in "+-":
            self.take()
            v = self.unary()
            return -v if val == "-" else v
        return self.power()

    def power(self):
        base_off = self.peek()[2]
        v = self.atom()
        kind, val, _ = self.peek()
        if kind == "op" and val == "^":
            self.take()
            neg = False
            kind, val, off = self.peek()
            if kind == "op" and val == "-":
                self.take()
                neg = True
            kind, val, off = self.take()
            if kind != "int":
                raise ParseError("exponent must be an integer", off, self.text)
            if neg:
                if v.deg != 0:
                    raise ParseError("negative power of an expression involving t or zero", base_off, self.text)
                return TPoly(self.spec, (v.coeffs[0].inverse() ** val,))
            if val > 4096 and v.deg != 0:
                raise ParseError("exponent too large", off, self.text)
            if v.deg == 0:
                return TPoly(self.spec, (v.coeffs[0] ** val,))
            return v**val
        return v

    def atom(self):
        kind, val, off = self.take()
        F = self.spec.big
        if kind == "int":
            return self.const(F.from_int(val))
        if kind == "var":
            if val == "x":
                return TPoly(self.spec, (self.spec.theta(),))
            if val == "t":
                return TPoly.t(self.spec)
            return self.const(self.spec.gen)
        if kind == "op" and val == "(":
            v = self.expr()
            self.expect(")")
            return v
        if kind == "end":
            raise ParseError("unexpected end of input", off, self.text)
        raise ParseError(f"unexpected token {val!r}", off, self.text)


def parse_expr(spec: FieldSpec, text: str):
    """A :class:`RatFunc` when ``t`` does not occur, otherwise a :class:`TPoly`."""
    parser = _Parser(spec, text)
    v = parser.parse()
    if parser.t_offset is None:
        return _scalar(spec, v)
    return v


def _scalar(spec, v: TPoly) -> RatFunc:
    return v.coeffs[0] if v.coeffs else RatFunc.zero(spec.big)


def parse_ratfunc(spec: FieldSpec, text: str) -> RatFunc:
    """Parse an expression in which ``t`` must not occur."""
    parser = _Parser(spec, text)
    if parser.t_offset is not None:
        raise ParseError("t is not allowed here", parser.t_offset, text)
    return _scalar(spec, parser.parse())


def parse_tpoly(spec: FieldSpec, text: str) -> TPoly:
    return _Parser(spec, text).parse()


def format_value(v) -> str:
    """Printer whose output :func:`parse_expr` reads back to an equal value."""
    if isinstance(v, FPoly):
        v = RatFunc.from_poly(v)
    return v.to_str()
