"""Expression parser and canonical printer for polynomials.

Grammar (EBNF):

    expr    = term { ("+" | "-") term } ;
    term    = factor { "*" factor } ;
    factor  = "-" factor | atom [ "^" integer ] ;
    atom    = integer [ "/" integer ] | variable | "(" expr ")" ;

Multiplication is always explicit, "^" denotes powers, and "/" appears only
inside rational literals.  The canonical printer emits terms in descending
degrevlex order with coefficients as ``a/b``; parse and print are mutually
inverse on canonical forms.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import ParseError, UnknownVariableError
from .orders import OrderSpec, degrevlex
from .poly import Poly
from .rings import RingCtx

_SYMBOLS = ("+", "-", "*", "^", "/", "(", ")")


class _Token:
    __slots__ = ("kind", "text", "line", "col")

    def __init__(self, kind, text, line, col):
        self.kind = kind
        self.text = text
        self.line = line
        self.col = col


def _tokenize(text: str) -> list[_Token]:
    tokens = []
    line, col = 1, 1
    i = 0
    while i < len(text):
        ch = text[i]
        if ch == "\n":
            line += 1
            col = 1
            i += 1
            continue
        if ch.isspace():
            col += 1
            i += 1
            continue
        if ch in _SYMBOLS:
            tokens.append(_Token(ch, ch, line, col))
            col += 1
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            tokens.append(_Token("int", text[i:j], line, col))
            col += j - i
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < len(text) and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(_Token("name", text[i:j], line, col))
            col += j - i
            i = j
            continue
        raise ParseError(f"unexpected character {ch!r}", line, col)
    tokens.append(_Token("end", "", line, col))
    return tokens


class _Parser:
    def __init__(self, tokens: list[_Token], ring: RingCtx):
        self.tokens = tokens
        self.pos = 0
        self.ring = ring

    def peek(self) -> _Token:
        return self.tokens[self.pos]

    def next(self) -> _Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind: str) -> _Token:
        tok = self.peek()
        if tok.kind != kind:
            raise ParseError(f"expected {kind!r}, found {tok.text or 'end of input'!r}",
                             tok.line, tok.col)
        return self.next()

    def parse(self) -> Poly:
        p = self.expr()
        tok = self.peek()
        if tok.kind != "end":
            raise ParseError(f"unexpected {tok.text!r}", tok.line, tok.col)
        return p

    def expr(self) -> Poly:
        p = self.term()
        while self.peek().kind in ("+", "-"):
            op = self.next().kind
            q = self.term()
            p = p + q if op == "+" else p - q
        return p

    def term(self) -> Poly:
        p = self.factor()
        while self.peek().kind == "*":
            self.next()
            p = p * self.factor()
        return p

    def factor(self) -> Poly:
        if self.peek().kind == "-":
            self.next()
            return -self.factor()
        p = self.atom()
        if self.peek().kind == "^":
            self.next()
            tok = self.expect("int")
            p = p ** int(tok.text)
        return p

    def atom(self) -> Poly:
        tok = self.peek()
        if tok.kind == "int":
            self.next()
            value = Fraction(int(tok.text))
            if self.peek().kind == "/":
                self.next()
                den = self.expect("int")
                if int(den.text) == 0:
                    raise ParseError("zero denominator in rational literal", den.line, den.col)
                value /= int(den.text)
            return Poly.const(self.ring, value)
        if tok.kind == "name":
            self.next()
            if tok.text not in self.ring.names:
                raise UnknownVariableError(
                    f"unknown variable {tok.text!r} (ring has {', '.join(self.ring.names)})")
            return Poly.var(self.ring, self.ring.index(tok.text))
        if tok.kind == "(":
            self.next()
            p = self.expr()
            self.expect(")")
            return p
        raise ParseError(f"unexpected {tok.text or 'end of input'!r}", tok.line, tok.col)


def parse_poly(text: str, ring: RingCtx) -> Poly:
    """Parse an expression into canonical expanded form."""
    return _Parser(_tokenize(text), ring).parse()


def _mono_text(ring: RingCtx, mono) -> str:
    parts = []
    for name, e in zip(ring.names, mono):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def _coeff_text(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def poly_to_text(f: Poly, order: OrderSpec | None = None) -> str:
    """Canonical text: terms descending in the given (default degrevlex) order."""
    if f.is_zero():
        return "0"
    order = order or degrevlex(f.ring)
    monos = sorted(f.terms, key=order.sort_key(), reverse=True)
    chunks: list[str] = []
    for k, m in enumerate(monos):
        c = f.terms[m]
        mono_txt = _mono_text(f.ring, m)
        mag = abs(c)
        if not mono_txt:
            body = _coeff_text(mag)
        elif mag == 1:
            body = mono_txt
        else:
            body = f"{_coeff_text(mag)}*{mono_txt}"
        if k == 0:
            chunks.append(body if c > 0 else f"-{body}")
        else:
            chunks.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(chunks)
