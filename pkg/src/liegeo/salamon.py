"""Parser and printer for the compact notation (de^1, ..., de^n) of a Lie algebra.

A string such as ``(-l*e23, l*e13, 0, 0)`` lists the differentials of the
dual basis. ``e23`` is e^2 ^ e^3, indices are single digits, and
de^k(e_i, e_j) = -c^k_ij links the notation to the structure constants.

Grammar (whitespace ignored)::

    algebra := '(' expr (',' expr)* ')'
    expr    := ['+' | '-'] term (('+' | '-') term)*
    term    := factor (['*' | '/'] factor)*      # juxtaposition multiplies
    factor  := number | ident | 'e' digit digit | '(' expr ')' | '-' factor

Every coordinate must come out linear in the monomials e^{ij}.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from .lie import JacobiError, LieAlgebra
from .linalg import ZERO, frac


class SalamonError(ValueError):
    pass


class SalamonSyntaxError(SalamonError):
    def __init__(self, message: str, position: int, text: str = ""):
        self.position = position
        self.text = text
        super().__init__(f"{message} at position {position}")


class UnboundParameterError(SalamonError):
    def __init__(self, name: str, position: int):
        self.name = name
        self.position = position
        super().__init__(f"unbound parameter {name!r} at position {position}")


class SalamonSemanticError(SalamonError):
    """The string parses but does not describe a Lie algebra."""


_TOKEN = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<mono>e\d+)
  | (?P<num>\d+)
  | (?P<ident>[^\W\d]\w*)
  | (?P<op>[-+*/(),])
    """,
    re.VERBOSE | re.UNICODE,
)


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    pos: int


def tokenize(text: str) -> list[Token]:
    text = text.replace("−", "-")
    out = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise SalamonSyntaxError(f"unexpected character {text[pos]!r}", pos, text)
        kind = m.lastgroup
        if kind != "ws":
            out.append(Token(kind, m.group(), pos))
        pos = m.end()
    out.append(Token("end", "", pos))
    return out


class _Lin:
    """Scalar part plus a linear combination of monomials {(i, j): coeff}."""

    __slots__ = ("scalar", "terms")

    def __init__(self, scalar=ZERO, terms=None):
        self.scalar = Fraction(scalar)
        self.terms = {k: v for k, v in (terms or {}).items() if v}

    @property
    def is_scalar(self) -> bool:
        return not self.terms

    def add(self, other: "_Lin", sign: int = 1) -> "_Lin":
        t = dict(self.terms)
        for k, v in other.terms.items():
            t[k] = t.get(k, ZERO) + sign * v
        return _Lin(self.scalar + sign * other.scalar, t)

    def scale(self, c: Fraction) -> "_Lin":
        return _Lin(self.scalar * c, {k: v * c for k, v in self.terms.items()})


class _Parser:
    def __init__(self, text: str, params: Mapping[str, object]):
        self.text = text
        self.toks = tokenize(text)
        self.i = 0
        self.params = {k: frac(v) for k, v in params.items()}

    @property
    def tok(self) -> Token:
        return self.toks[self.i]

    def error(self, msg: str, tok: Token | None = None):
        tok = tok or self.tok
        raise SalamonSyntaxError(msg, tok.pos, self.text)

    def expect(self, text: str) -> Token:
        if self.tok.text != text:
            found = self.tok.text or "end of input"
            self.error(f"expected {text!r}, found {found!r}")
        t = self.tok
        self.i += 1
        return t

    def algebra(self) -> list[tuple[_Lin, int]]:
        self.expect("(")
        coords = [self.coordinate()]
        while self.tok.text == ",":
            self.i += 1
            coords.append(self.coordinate())
        self.expect(")")
        if self.tok.kind != "end":
            self.error("trailing input")
        return coords

    def coordinate(self) -> tuple[_Lin, int]:
        start = self.tok.pos
        v = self.expr()
        if not v.is_scalar and v.scalar:
            raise SalamonSyntaxError("constant term mixed with 2-forms", start, self.text)
        if v.is_scalar and v.scalar:
            raise SalamonSyntaxError("a coordinate must be a 2-form or 0", start, self.text)
        return v, start

    def expr(self) -> _Lin:
        sign = 1
        if self.tok.text in "+-" and self.tok.kind == "op":
            sign = -1 if self.tok.text == "-" else 1
            self.i += 1
        acc = self.term().scale(Fraction(sign))
        while self.tok.kind == "op" and self.tok.text in ("+", "-"):
            s = -1 if self.tok.text == "-" else 1
            self.i += 1
            acc = acc.add(self.term(), s)
        return acc

    def _starts_factor(self) -> bool:
        t = self.tok
        return t.kind in ("num", "ident", "mono") or t.text == "("

    def term(self) -> _Lin:
        acc = self.factor()
        while True:
            t = self.tok
            if t.text == "*":
                self.i += 1
                acc = self._mul(acc, self.factor(), t)
            elif t.text == "/":
                self.i += 1
                rhs = self.factor()
                if not rhs.is_scalar:
                    self.error("cannot divide by a 2-form", t)
                if not rhs.scalar:
                    self.error("division by zero", t)
                acc = acc.scale(1 / rhs.scalar)
            elif self._starts_factor():
                acc = self._mul(acc, self.factor(), t)
            else:
                return acc

    def _mul(self, a: _Lin, b: _Lin, at: Token) -> _Lin:
        if a.is_scalar:
            return b.scale(a.scalar)
        if b.is_scalar:
            return a.scale(b.scalar)
        self.error("product of two 2-forms", at)

    def factor(self) -> _Lin:
        t = self.tok
        if t.kind == "num":
            self.i += 1
            return _Lin(int(t.text))
        if t.kind == "ident":
            self.i += 1
            if t.text not in self.params:
                raise UnboundParameterError(t.text, t.pos)
            return _Lin(self.params[t.text])
        if t.kind == "mono":
            self.i += 1
            digits = t.text[1:]
            if len(digits) != 2:
                self.error(f"monomial {t.text!r} needs exactly two single-digit indices", t)
            i, j = int(digits[0]), int(digits[1])
            if i == 0 or j == 0:
                self.error("indices start at 1", t)
            if i == j:
                self.error(f"repeated index in {t.text!r}", t)
            return _Lin(0, {(i, j): Fraction(1)} if i < j else {(j, i): Fraction(-1)})
        if t.text == "(":
            self.i += 1
            v = self.expr()
            self.expect(")")
            return v
        if t.text == "-":
            self.i += 1
            return self.factor().scale(Fraction(-1))
        found = t.text or "end of input"
        self.error(f"unexpected {found!r}")


def parse_forms(text: str, params: Mapping[str, object] | None = None) -> list[dict[tuple[int, int], Fraction]]:
    """Coordinates of the tuple as {(i, j): coeff} with 1-based i < j."""
    p = _Parser(text, params or {})
    coords = p.algebra()
    n = len(coords)
    out = []
    for v, start in coords:
        for i, j in v.terms:
            if j > n:
                raise SalamonSyntaxError(f"index {j} exceeds the dimension {n}", start, text)
        out.append(dict(sorted(v.terms.items())))
    return out


def parse_linear_forms(text: str, params: Mapping[str, object] | None = None) -> dict[tuple[int, int], Fraction]:
    """A single sum of monomials such as ``e12-e34+e56``."""
    p = _Parser(text, params or {})
    v, _ = p.coordinate()
    if p.tok.kind != "end":
        p.error("trailing input")
    return dict(sorted(v.terms.items()))


def parse_salamon(text: str, params: Mapping[str, object] | None = None, name: str = "") -> LieAlgebra:
    forms = parse_forms(text, params)
    n = len(forms)
    br: dict = {}
    for k, form in enumerate(forms):
        for (i, j), coeff in form.items():
            br.setdefault((i - 1, j - 1), {})[k] = -coeff
    try:
        return LieAlgebra(n, br, name=name)
    except JacobiError as exc:
        raise SalamonSemanticError(str(exc)) from exc


def _fmt_term(coeff: Fraction, mono: str, first: bool) -> str:
    if coeff == 1:
        body = mono
        sign = "" if first else "+"
    elif coeff == -1:
        body = mono
        sign = "-"
    else:
        sign = "-" if coeff < 0 else ("" if first else "+")
        body = f"{abs(coeff)}*{mono}"
    return sign + body


def emit_salamon(alg: LieAlgebra) -> str:
    """Canonical string: terms of each coordinate in increasing (i, j) order."""
    n = alg.dim
    if n > 9:
        raise SalamonError("the compact notation only covers dimension <= 9")
    coords = []
    for k in range(n):
        parts = []
        for i in range(n):
            for j in range(i + 1, n):
                c = alg.structure_constant(i, j, k)
                if c:
                    parts.append(_fmt_term(-c, f"e{i + 1}{j + 1}", not parts))
        coords.append("".join(parts) if parts else "0")
    return "(" + ", ".join(coords) + ")"
