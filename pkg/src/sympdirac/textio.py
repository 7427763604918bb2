"""Text and JSON formats for :class:`~sympdirac.poly.SPoly`.

Grammar (whitespace between tokens is ignored)::

    poly     := ['+'|'-'] term (('+'|'-') term)*
    term     := [coeff] factor*          # at least one of the two
    coeff    := rational ['*'] ['i'] | 'i'
    rational := integer ['/' positive-integer]
    factor   := ('x'|'q') index ['^' natural]

Juxtaposition multiplies; a ``*`` may also separate factors.
"""
from __future__ import annotations

import json
from fractions import Fraction

from .poly import Monomial, SPoly
from .scalar import GAUSSIAN, RATIONAL, Scalar, check_mode


class ParseError(ValueError):
    def __init__(self, msg: str, line: int, col: int):
        super().__init__(f"{line}:{col}: {msg}")
        self.msg = msg
        self.line = line
        self.col = col


class IndexRangeError(ParseError):
    pass


def _tokenize(src: str):
    toks = []
    line, col = 1, 1
    i = 0
    while i < len(src):
        ch = src[i]
        if ch == "\n":
            line += 1
            col = 1
            i += 1
            continue
        if ch.isspace():
            i += 1
            col += 1
            continue
        if ch.isdigit() and ch.isascii():
            j = i
            while j < len(src) and src[j].isdigit() and src[j].isascii():
                j += 1
            toks.append(("int", int(src[i:j]), line, col))
            col += j - i
            i = j
            continue
        if ch in "+-*/^xqi":
            toks.append((ch, ch, line, col))
            i += 1
            col += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", line, col)
    toks.append(("end", None, line, col))
    return toks


class _Parser:
    def __init__(self, src: str, n: int, scalar: str):
        self.toks = _tokenize(src)
        self.pos = 0
        self.n = n
        self.scalar = scalar

    def peek(self):
        return self.toks[self.pos]

    def take(self):
        t = self.toks[self.pos]
        self.pos += 1
        return t

    def fail(self, msg, tok=None, cls=ParseError):
        tok = tok or self.peek()
        raise cls(msg, tok[2], tok[3])

    def parse(self) -> SPoly:
        terms: dict = {}
        if self.peek()[0] == "end":
            self.fail("empty input")
        sign = 1
        if self.peek()[0] in "+-":
            sign = -1 if self.take()[0] == "-" else 1
        while True:
            key, c = self.term()
            terms[key] = terms.get(key, Scalar(0)) + c * sign
            t = self.peek()
            if t[0] == "end":
                break
            if t[0] not in "+-":
                self.fail(f"expected '+', '-' or end of input, got {t[1]!r}")
            sign = -1 if self.take()[0] == "-" else 1
        return SPoly(self.n, terms)

    def term(self):
        start = self.peek()
        coeff = Scalar(1)
        have = False
        t = self.peek()
        if t[0] == "int":
            coeff = Scalar(self.rational())
            have = True
            if self.peek()[0] == "*" and self.toks[self.pos + 1][0] == "i":
                self.take()
            if self.peek()[0] == "i":
                coeff = coeff * self.imag()
        elif t[0] == "i":
            coeff = self.imag()
            have = True
        x = [0] * (2 * self.n)
        q = [0] * self.n
        while True:
            t = self.peek()
            if t[0] == "*" and have:
                self.take()
                t = self.peek()
                if t[0] not in "xq":
                    self.fail("expected a variable after '*'")
            if t[0] not in "xq":
                break
            self.factor(x, q)
            have = True
        if not have:
            self.fail(f"expected a term, got {start[1]!r}" if start[0] != "end" else "expected a term, got end of input", start)
        return tuple(x) + tuple(q), coeff

    def imag(self) -> Scalar:
        tok = self.take()
        if self.scalar == RATIONAL:
            self.fail("imaginary unit not allowed in rational scalar mode", tok)
        return Scalar(0, 1)

    def rational(self) -> Fraction:
        num = self.take()[1]
        if self.peek()[0] == "/":
            self.take()
            t = self.peek()
            if t[0] != "int":
                self.fail("expected denominator after '/'")
            self.take()
            if t[1] == 0:
                self.fail("zero denominator", t)
            return Fraction(num, t[1])
        return Fraction(num)

    def factor(self, x, q):
        var = self.take()
        t = self.peek()
        if t[0] != "int":
            self.fail(f"expected index after {var[0]!r}")
        self.take()
        idx = t[1]
        limit = 2 * self.n if var[0] == "x" else self.n
        if not 1 <= idx <= limit:
            self.fail(f"index {var[0]}{idx} out of range 1..{limit} for n={self.n}", var, IndexRangeError)
        e = 1
        if self.peek()[0] == "^":
            self.take()
            t = self.peek()
            if t[0] != "int":
                self.fail("expected exponent after '^'")
            self.take()
            e = t[1]
        if var[0] == "x":
            x[idx - 1] += e
        else:
            q[idx - 1] += e


def parse(src: str, n: int, scalar: str = GAUSSIAN) -> SPoly:
    check_mode(scalar)
    return _Parser(src, n, scalar).parse()


def _factors(m: Monomial) -> str:
    out = []
    for bank, exps in (("x", m.xexp), ("q", m.qexp)):
        for i, e in enumerate(exps, 1):
            if e == 1:
                out.append(f"{bank}{i}")
            elif e:
                out.append(f"{bank}{i}^{e}")
    return " ".join(out)


def _term(mag: Fraction, imag: bool, facs: str) -> str:
    whole = mag.denominator == 1
    if imag:
        c = "i" if mag == 1 else (f"{mag}i" if whole else f"{mag} i")
        return f"{c} {facs}" if facs else c
    if not facs:
        return str(mag)
    if mag == 1:
        return facs
    return f"{mag}{facs}" if whole else f"{mag} {facs}"


def serialize(p: SPoly) -> str:
    pieces = []
    for m, c in p.terms():
        facs = _factors(m)
        for part, imag in ((c.re, False), (c.im, True)):
            if part:
                pieces.append((part < 0, _term(abs(part), imag, facs)))
    if not pieces:
        return "0"
    neg, body = pieces[0]
    out = ["-" + body if neg else body]
    for neg, body in pieces[1:]:
        out.append(("- " if neg else "+ ") + body)
    return " ".join(out)


def to_json(p: SPoly) -> list:
    return [
        {"xexp": list(m.xexp), "qexp": list(m.qexp), "re": str(c.re), "im": str(c.im)}
        for m, c in p.terms()
    ]


def from_json(data, n: int) -> SPoly:
    if isinstance(data, str):
        data = json.loads(data)
    terms = {}
    for t in data:
        key = Monomial(tuple(t["xexp"]), tuple(t["qexp"]))
        terms[key] = terms.get(key, Scalar(0)) + Scalar(Fraction(t["re"]), Fraction(t["im"]))
    return SPoly(n, terms)


def dumps(p: SPoly) -> str:
    return json.dumps(to_json(p), separators=(",", ":"))


__all__ = ["GAUSSIAN", "IndexRangeError", "ParseError", "RATIONAL", "dumps", "from_json", "parse", "serialize", "to_json"]
