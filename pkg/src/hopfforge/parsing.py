"""Element expressions: recursive-descent parser and canonical printer.

Grammar (``*`` is mandatory between factors)::

    expr   := ('+'|'-')? term (('+'|'-') term)*
    term   := factor ('*' factor)*
    factor := int ('/' int)? | ident ('^' int)? | 'sqrt' '(' int ')'
            | '(' expr ')' ('^' int)?

``sqrt(d)`` is only accepted when the algebra's scalar field is Q(sqrt d).
"""
from __future__ import annotations

import re
from fractions import Fraction

from .errors import NegativePower, ParseError, UnknownGenerator
from .freealg import NcPoly, runs
from .scalars import QuadExt, format_scalar, quad, squarefree_decompose

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(.))")


def tokenize(src: str) -> list[tuple[str, str, int]]:
    toks = []
    pos = 0
    src = src.rstrip()
    while pos < len(src):
        m = _TOKEN.match(src, pos)
        if m is None:  # pragma: no cover - the last alternative matches anything
            raise ParseError("unexpected input", pos)
        start = m.start(m.lastindex)
        if m.group(1):
            toks.append(("int", m.group(1), start))
        elif m.group(2):
            toks.append(("ident", m.group(2), start))
        else:
            ch = m.group(3)
            if ch not in "+-*/^()":
                raise ParseError(f"unexpected character {ch!r}", start)
            toks.append((ch, ch, start))
        pos = m.end()
    toks.append(("end", "", len(src)))
    return toks


class _Parser:
    def __init__(self, src: str, H=None, field: int | None = None):
        self.toks = tokenize(src)
        self.i = 0
        self.H = H
        self.field = field if field is not None else getattr(H, "field", None)

    def peek(self):
        return self.toks[self.i]

    def take(self, kind=None):
        tok = self.toks[self.i]
        if kind is not None and tok[0] != kind:
            expected = "integer" if kind == "int" else repr(kind)
            raise ParseError(f"expected {expected}, found {tok[1] or 'end of input'!r}", tok[2])
        self.i += 1
        return tok

    # values are NcPoly when H is given, scalars otherwise
    def unit(self, c):
        return NcPoly.scalar(c) if self.H is not None else c

    def add(self, a, b):
        return a + b

    def mul(self, a, b):
        if self.H is None:
            return a * b
        return self.H.mul(a, b)

    def expr(self):
        sign = 1
        if self.peek()[0] in ("+", "-"):
            sign = -1 if self.take()[0] == "-" else 1
        value = self.term()
        if sign < 0:
            value = -value
        while self.peek()[0] in ("+", "-"):
            op = self.take()[0]
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self):
        value = self.factor()
        while self.peek()[0] == "*":
            self.take()
            value = self.mul(value, self.factor())
        return value

    def exponent(self) -> int:
        sign = 1
        if self.peek()[0] == "-":
            self.take()
            sign = -1
        return sign * int(self.take("int")[1])

    def factor(self):
        kind, text, pos = self.peek()
        if kind == "int":
            self.take()
            num = int(text)
            if self.peek()[0] == "/":
                self.take()
                den = int(self.take("int")[1])
                if den == 0:
                    raise ParseError("zero denominator", pos)
                return self.unit(Fraction(num, den))
            return self.unit(Fraction(num))
        if kind == "ident" and text == "sqrt" and self.toks[self.i + 1][0] == "(":
            self.take()
            self.take("(")
            neg = self.peek()[0] == "-"
            if neg:
                self.take()
            d = int(self.take("int")[1]) * (-1 if neg else 1)
            self.take(")")
            k, e = squarefree_decompose(d)
            if e == 1:
                return self.unit(Fraction(k))
            if self.field != e:
                raise ParseError(f"sqrt({d}) is not in the session field", pos)
            return self.unit(quad(e, 0, k))
        if kind == "ident":
            self.take()
            e = 1
            if self.peek()[0] == "^":
                self.take()
                e = self.exponent()
            return self.generator_power(text, e, pos)
        if kind == "(":
            self.take()
            value = self.expr()
            self.take(")")
            if self.peek()[0] == "^":
                self.take()
                e = self.exponent()
                if e < 0:
                    raise ParseError("negative power of a parenthesised expression", pos)
                out = self.unit(Fraction(1))
                for _ in range(e):
                    out = self.mul(out, value)
                value = out
            return value
        raise ParseError(f"unexpected {text or 'end of input'!r}", pos)

    def generator_power(self, name: str, e: int, pos: int):
        H = self.H
        if H is None:
            raise ParseError(f"generator {name!r} in a scalar expression", pos)
        if name not in H.index:
            raise UnknownGenerator(f"unknown generator {name!r} at position {pos}")
        g = H.index[name]
        if e < 0 and not H.generators[g].invertible:
            raise NegativePower(f"negative power of non-invertible generator {name!r} at position {pos}")
        letter = g + 1 if e >= 0 else -(g + 1)
        return H.normal_form(NcPoly.word((letter,) * abs(e)))


def parse_element(src: str, H) -> NcPoly:
    """Parse an element of H and return its normal form."""
    if not src.strip():
        raise ParseError("empty expression", 0)
    p = _Parser(src, H)
    value = p.expr()
    p.take("end")
    return H.normal_form(value)


def parse_word(src: str, H):
    """Parse a monomial string such as ``x^-1*y`` into an (unnormalized) word."""
    from .freealg import ONE, word_mul

    if src.strip() in ("", "1"):
        return ONE
    w = ONE
    for part in src.split("*"):
        name, _, exp = part.strip().partition("^")
        if name not in H.index:
            raise UnknownGenerator(f"unknown generator {name!r}")
        e = int(exp) if exp else 1
        g = H.index[name]
        if e < 0 and not H.generators[g].invertible:
            raise NegativePower(f"negative power of non-invertible generator {name!r}")
        w = word_mul(w, ((g + 1) if e > 0 else -(g + 1),) * abs(e))
    return w


def parse_scalar_text(src: str, field: int | None = None):
    p = _Parser(src, None, field)
    if field is None:
        # a scalar literal declares its own field
        m = re.search(r"sqrt\(\s*(-?\d+)\s*\)", src)
        if m:
            p.field = squarefree_decompose(int(m.group(1)))[1]
    value = p.expr()
    p.take("end")
    return value


def _coef_prefix(c) -> str:
    text = format_scalar(c)
    if isinstance(c, QuadExt) and (c.a != 0 or c.b != 1):
        return f"({text})"
    return text


def format_poly(p: NcPoly, H) -> str:
    if not p.terms:
        return "0"
    words = sorted(p.terms, key=H.key, reverse=True)
    pieces = []
    for w in words:
        c = p.terms[w]
        neg = not isinstance(c, QuadExt) and c < 0
        mag = -c if neg else c
        wtxt = H.format_word(w)
        if not w:
            body = _coef_prefix(mag) if isinstance(mag, QuadExt) else format_scalar(mag)
        elif mag == 1:
            body = wtxt
        else:
            body = f"{_coef_prefix(mag)}*{wtxt}"
        pieces.append(("-" if neg else "+", body))
    out = ("-" if pieces[0][0] == "-" else "") + pieces[0][1]
    for sign, body in pieces[1:]:
        out += f" {sign} {body}"
    return out


def format_tensor(T, H) -> str:
    if not T.terms:
        return "0"
    keys = sorted(T.terms, key=lambda k: tuple(H.key(w) for w in k), reverse=True)
    pieces = []
    for k in keys:
        c = T.terms[k]
        neg = not isinstance(c, QuadExt) and c < 0
        mag = -c if neg else c
        body = " (x) ".join(H.format_word(w) for w in k)
        if mag != 1:
            body = f"{_coef_prefix(mag)} * {body}"
        pieces.append(("-" if neg else "+", body))
    out = ("-" if pieces[0][0] == "-" else "") + pieces[0][1]
    for sign, body in pieces[1:]:
        out += f" {sign} {body}"
    return out


def tensor_json(T, H) -> list:
    keys = sorted(T.terms, key=lambda k: tuple(H.key(w) for w in k), reverse=True)
    return [[format_scalar(T.terms[k])] + [H.format_word(w) for w in k] for k in keys]


def word_runs_text(w, H) -> list:
    return [(H.generators[g].name, e) for g, e in runs(w)]
