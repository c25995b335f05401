"""Text <-> ring value conversion.

Grammar::

    expr   := ('+'|'-')? term (('+'|'-') term)*
    term   := factor ('*' factor)*
    factor := ('+'|'-') factor | base ('^' uint)?
    base   := int ('/' uint)? | 'i' | 't'
            | ('cos'|'sin') '(' uint? '*'? 't' ')' | '(' expr ')'

``t`` and ``i`` belong to the polynomial rings (``i`` only to
``poly-gaussian``); ``cos``/``sin`` only to ``trig``.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import ParseError, RingMismatchError
from .poly import Poly
from .scalars import GAUSSIAN, RATIONAL, Gauss, QuadraticSurd, format_scalar, sign
from .trig import TrigPoly

POLY_RATIONAL = "poly-rational"
POLY_GAUSSIAN = "poly-gaussian"
TRIG = "trig"
RINGS = (POLY_RATIONAL, POLY_GAUSSIAN, TRIG)

_TOKEN = re.compile(r"\s*(?:(\d+\.\d*|\d*\.\d+)|(\d+)|([A-Za-z]+)|(\S))")


def ring_field(ring: str) -> str:
    return GAUSSIAN if ring == POLY_GAUSSIAN else RATIONAL


def ring_of(x) -> str:
    if isinstance(x, TrigPoly):
        return TRIG
    return POLY_GAUSSIAN if x.field == GAUSSIAN else POLY_RATIONAL


def ring_const(c, ring: str):
    if ring == TRIG:
        return TrigPoly(c)
    return Poly.const(c, ring_field(ring))


def _tokenize(text):
    pos, out = 0, []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            break
        dec, num, word, sym = m.groups()
        start = m.start(m.lastindex)
        if dec is not None:
            out.append(("dec", dec, start))
        elif num is not None:
            out.append(("num", int(num), start))
        elif word is not None:
            out.append(("word", word, start))
        else:
            out.append(("sym", sym, start))
        pos = m.end()
    out.append(("end", None, len(text)))
    return out


class _Parser:
    def __init__(self, text, ring):
        if ring not in RINGS:
            raise ValueError(f"unknown ring {ring!r}")
        self.text = text
        self.ring = ring
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def error(self, msg, tok=None, cls=ParseError):
        tok = tok or self.peek()
        return cls(msg, tok[2], self.text)

    def expect_sym(self, sym):
        tok = self.take()
        if tok[0] != "sym" or tok[1] != sym:
            raise self.error(f"expected {sym!r}", tok)

    def parse(self):
        if self.peek()[0] == "end":
            raise self.error("empty expression")
        value = self.expr()
        if self.peek()[0] != "end":
            raise self.error(f"unexpected {self.peek()[1]!r}")
        return value

    def expr(self):
        value = None
        negate = False
        if self.peek()[:2] in (("sym", "+"), ("sym", "-")):
            negate = self.take()[1] == "-"
        value = self.term()
        if negate:
            value = -value
        while self.peek()[:2] in (("sym", "+"), ("sym", "-")):
            op = self.take()[1]
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self):
        value = self.factor()
        while self.peek()[:2] == ("sym", "*"):
            self.take()
            value = value * self.factor()
        return value

    def factor(self):
        if self.peek()[:2] in (("sym", "+"), ("sym", "-")):
            neg = self.take()[1] == "-"
            value = self.factor()
            return -value if neg else value
        value = self.base()
        if self.peek()[:2] == ("sym", "^"):
            self.take()
            tok = self.take()
            if tok[0] != "num":
                raise self.error("exponent must be a non-negative integer", tok)
            value = value ** tok[1]
        return value

    def base(self):
        tok = self.take()
        kind, val, _ = tok
        if kind == "dec":
            raise self.error(f"non-integer literal {val!r}; use a fraction", tok)
        if kind == "num":
            c = Fraction(val)
            if self.peek()[:2] == ("sym", "/"):
                self.take()
                den = self.take()
                if den[0] != "num":
                    raise self.error("denominator must be a positive integer", den)
                if den[1] == 0:
                    raise self.error("zero denominator", den)
                c = Fraction(val, den[1])
            return ring_const(c, self.ring)
        if kind == "sym" and val == "(":
            value = self.expr()
            self.expect_sym(")")
            return value
        if kind == "word":
            if val == "t":
                if self.ring == TRIG:
                    raise self.error("bare 't' is not a trigonometric polynomial", tok, RingMismatchError)
                return Poly.t(ring_field(self.ring))
            if val == "i":
                if self.ring != POLY_GAUSSIAN:
                    raise self.error("'i' is only allowed in the poly-gaussian ring", tok, RingMismatchError)
                return Poly.const(Gauss(0, 1), GAUSSIAN)
            if val in ("cos", "sin"):
                if self.ring != TRIG:
                    raise self.error(f"{val} is not allowed in a polynomial ring", tok, RingMismatchError)
                n = self.harmonic()
                return TrigPoly.cos(n) if val == "cos" else TrigPoly.sin(n)
            raise self.error(f"unknown name {val!r}", tok)
        if kind == "end":
            raise self.error("unexpected end of expression", tok)
        raise self.error(f"unexpected {val!r}", tok)

    def harmonic(self):
        self.expect_sym("(")
        n = 1
        tok = self.peek()
        if tok[0] == "dec":
            raise self.error("non-integer harmonic index", tok)
        if tok[0] == "num":
            n = self.take()[1]
            if self.peek()[:2] == ("sym", "/"):
                raise self.error("non-integer harmonic index", self.peek())
            if self.peek()[:2] == ("sym", "*"):
                self.take()
        tok = self.take()
        if tok[:2] != ("word", "t"):
            raise self.error("expected 't' inside cos/sin", tok)
        self.expect_sym(")")
        return n


def parse_expression(text: str, ring: str):
    """Parse ``text`` into a :class:`Poly` or :class:`TrigPoly` of ``ring``."""
    return _Parser(text, ring).parse()


# rendering -----------------------------------------------------------------

def _is_negative_real(c):
    if isinstance(c, Gauss):
        return c.im == 0 and c.re < 0
    if isinstance(c, QuadraticSurd):
        return False
    return sign(c) < 0


def _coef_text(c):
    if isinstance(c, Gauss) and c.im != 0 or isinstance(c, QuadraticSurd):
        return f"({format_scalar(c)})"
    return format_scalar(c)


def _join(terms):
    """``terms`` is a list of (coefficient, monomial-text or '')."""
    parts = []
    for c, mono in terms:
        neg = _is_negative_real(c)
        mag = -c if neg else c
        if mono and mag == 1:
            body = mono
        elif mono:
            body = f"{_coef_text(mag)}*{mono}"
        else:
            body = _coef_text(mag)
        if not parts:
            parts.append(f"-{body}" if neg else body)
        else:
            parts.append(f"- {body}" if neg else f"+ {body}")
    return " ".join(parts) if parts else "0"


def render(x) -> str:
    """Text form of a ring value that :func:`parse_expression` reads back exactly."""
    if isinstance(x, TrigPoly):
        terms = []
        if x.a0 != 0:
            terms.append((x.a0, ""))
        for k, (ak, bk) in enumerate(zip(x.a, x.b), start=1):
            h = "t" if k == 1 else f"{k}t"
            if ak != 0:
                terms.append((ak, f"cos({h})"))
            if bk != 0:
                terms.append((bk, f"sin({h})"))
        return _join(terms)
    if isinstance(x, Poly):
        terms = []
        for k in range(len(x.coeffs) - 1, -1, -1):
            c = x.coeffs[k]
            if c == 0:
                continue
            mono = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
            terms.append((c, mono))
        return _join(terms)
    return format_scalar(x)
