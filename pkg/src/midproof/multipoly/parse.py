"""Recursive-descent parser for polynomial expressions.

Grammar (no implicit multiplication)::

    expr   := ['+'|'-'] term (('+'|'-') term)*
    term   := power (('*'|'/') power)*        # '/' only by a nonzero constant
    power  := atom ['^' INT]
    atom   := INT | NAME | '(' expr ')' | '-' atom
"""

from __future__ import annotations

import re
from typing import Iterator, NamedTuple, Sequence

from .poly import Poly


class PolySyntaxError(ValueError):
    def __init__(self, message: str, position: int):
        self.position = position
        self.message = message
        super().__init__(f"{message} at position {position}")


class UnknownVariableError(PolySyntaxError):
    pass


class _Tok(NamedTuple):
    kind: str
    text: str
    pos: int


_TOKEN_RE = re.compile(r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*/^()]))")


def _tokenize(src: str) -> Iterator[_Tok]:
    pos = 0
    while True:
        m = _TOKEN_RE.match(src, pos)
        if m is None or m.end() == pos:
            rest = len(src[pos:]) - len(src[pos:].lstrip())
            if pos + rest >= len(src):
                yield _Tok("end", "", len(src))
                return
            raise PolySyntaxError(f"unexpected character {src[pos + rest]!r}", pos + rest)
        kind = m.lastgroup
        yield _Tok(kind, m.group(kind), m.start(kind))
        pos = m.end()


class _Parser:
    def __init__(self, src: str, vars: Sequence[str]):
        self.vars = tuple(vars)
        self.toks = list(_tokenize(src))
        self.i = 0

    @property
    def tok(self) -> _Tok:
        return self.toks[self.i]

    def take(self) -> _Tok:
        t = self.toks[self.i]
        self.i += 1
        return t

    def expect_op(self, text: str) -> None:
        t = self.tok
        if t.kind != "op" or t.text != text:
            found = "end of input" if t.kind == "end" else repr(t.text)
            raise PolySyntaxError(f"expected {text!r}, found {found}", t.pos)
        self.i += 1

    def parse(self) -> Poly:
        p = self.expr()
        if self.tok.kind != "end":
            raise PolySyntaxError(f"unexpected {self.tok.text!r}", self.tok.pos)
        return p

    def expr(self) -> Poly:
        neg = False
        if self.tok.kind == "op" and self.tok.text in "+-":
            neg = self.take().text == "-"
        acc = self.term()
        if neg:
            acc = -acc
        while self.tok.kind == "op" and self.tok.text in "+-":
            op = self.take().text
            rhs = self.term()
            acc = acc + rhs if op == "+" else acc - rhs
        return acc

    def term(self) -> Poly:
        acc = self.power()
        while self.tok.kind == "op" and self.tok.text in "*/":
            op = self.take()
            rhs = self.power()
            if op.text == "*":
                acc = acc * rhs
            else:
                if not rhs.is_constant() or rhs.is_zero():
                    raise PolySyntaxError("division only by a nonzero constant", op.pos)
                acc = acc / rhs
        return acc

    def power(self) -> Poly:
        base = self.atom()
        if self.tok.kind == "op" and self.tok.text == "^":
            self.take()
            t = self.tok
            if t.kind != "int":
                raise PolySyntaxError("exponent must be a nonnegative integer", t.pos)
            self.take()
            base = base ** int(t.text)
        return base

    def atom(self) -> Poly:
        t = self.tok
        if t.kind == "int":
            self.take()
            return Poly.const(int(t.text), self.vars)
        if t.kind == "name":
            self.take()
            if t.text not in self.vars:
                raise UnknownVariableError(f"unknown variable {t.text!r}", t.pos)
            return Poly.var(t.text, self.vars)
        if t.kind == "op" and t.text == "(":
            self.take()
            inner = self.expr()
            self.expect_op(")")
            return inner
        if t.kind == "op" and t.text == "-":
            self.take()
            return -self.atom()
        found = "end of input" if t.kind == "end" else repr(t.text)
        raise PolySyntaxError(f"unexpected {found}", t.pos)


def parse_poly(src: str, vars: Sequence[str]) -> Poly:
    """Parse ``src`` into a canonical sparse polynomial over ``vars``."""
    return _Parser(src, vars).parse()


def parse_poly_lines(text: str, vars: Sequence[str]) -> list[Poly]:
    """One polynomial per line; ``#`` starts a comment, blank lines are skipped."""
    out = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        try:
            out.append(parse_poly(line, vars))
        except PolySyntaxError as exc:
            raise type(exc)(f"line {lineno}: {exc.message}", exc.position) from None
    return out
