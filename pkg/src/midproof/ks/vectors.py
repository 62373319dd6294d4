"""Vectors in R^3 with Z[sqrt(2)] entries, Peres shorthand, and rays."""

from __future__ import annotations

import re
from dataclasses import dataclass
from math import gcd
from typing import Iterable, Optional

from ..exact_arith import QuadInt, format_quadint, parse_quadint


class VectorParseError(ValueError):
    def __init__(self, message: str, position: int | None = None, line: int | None = None):
        self.position = position
        self.line = line
        where = []
        if line is not None:
            where.append(f"line {line}")
        if position is not None:
            where.append(f"position {position}")
        super().__init__(f"{message} ({', '.join(where)})" if where else message)


Vec3 = tuple[QuadInt, QuadInt, QuadInt]

_SHORTHAND_VALUE = {
    "0": QuadInt(0, 0),
    "1": QuadInt(1, 0),
    "2": QuadInt(0, 1),
}

# Display order of the 33 witness vectors; "!" stands for an overline.
PERES33_SHORTHAND = (
    "!1!12", "!102", "!112", "!12!1", "!120", "!121", "0!12", "002", "012",
    "02!2", "02!1", "020", "021", "022", "1!12", "102", "112", "12!1", "120",
    "121", "2!20", "2!1!1", "2!10", "2!11", "20!2", "20!1", "200", "201", "202",
    "21!1", "210", "211", "220",
)

# Peres' symmetry reductions, as (shorthand, colour) pairs.
PERES_WLOG = (
    ("001", "green"),
    ("100", "red"),
    ("010", "red"),
    ("101", "green"),
    ("!101", "red"),
    ("011", "green"),
    ("0!11", "red"),
    ("1!12", "green"),
    ("!112", "red"),
)


def parse_peres(shorthand: str) -> Vec3:
    """Decode three Peres symbols, e.g. ``"!1!12"`` -> (-1, -1, sqrt 2).

    Overlined digits are written with a ``!`` or ``-`` prefix.
    """
    out: list[QuadInt] = []
    i = 0
    s = shorthand.strip()
    while i < len(s):
        start = i
        neg = False
        if s[i] in "!-":
            neg = True
            i += 1
        if i >= len(s) or s[i] not in _SHORTHAND_VALUE:
            raise VectorParseError(f"bad Peres symbol in {shorthand!r}", position=start)
        if neg and s[i] == "0":
            raise VectorParseError(f"overlined 0 in {shorthand!r}", position=start)
        v = _SHORTHAND_VALUE[s[i]]
        out.append(-v if neg else v)
        i += 1
    if len(out) != 3:
        raise VectorParseError(f"expected 3 symbols in {shorthand!r}, got {len(out)}")
    return (out[0], out[1], out[2])


def peres33() -> list[Vec3]:
    return [parse_peres(s) for s in PERES33_SHORTHAND]


def to_shorthand(v: Vec3) -> Optional[str]:
    """Inverse of :func:`parse_peres`, or None if an entry is not 0, ±1, ±√2."""
    parts = []
    for c in v:
        for sym, val in _SHORTHAND_VALUE.items():
            if c == val:
                parts.append(sym)
                break
            if sym != "0" and c == -val:
                parts.append("!" + sym)
                break
        else:
            return None
    return "".join(parts)


def dot(u: Vec3, v: Vec3) -> QuadInt:
    return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]


def cross(u: Vec3, v: Vec3) -> Vec3:
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


def is_zero_vec(v: Vec3) -> bool:
    return all(c.is_zero() for c in v)


def same_ray(u: Vec3, v: Vec3) -> bool:
    return is_zero_vec(cross(u, v))


def canonical(v: Vec3) -> Vec3:
    """Canonical representative of the ray through ``v``.

    Multiplying by the conjugate of the first nonzero entry makes that entry
    the rational integer ``a² - 2b²``; any two proportional vectors then differ
    by a rational factor, which dividing out the integer content and fixing
    the sign removes.  Units such as ``1+√2`` are handled for free.
    """
    if is_zero_vec(v):
        raise ValueError("zero vector has no ray")
    lead = next(c for c in v if not c.is_zero())
    w = [c * lead.conj() for c in v]
    g = 0
    for c in w:
        g = gcd(g, c.a, c.b)
    first = next(c for c in w if not c.is_zero())
    if first.a < 0:
        g = -g
    return tuple(QuadInt(c.a // g, c.b // g) for c in w)  # type: ignore[return-value]


@dataclass(frozen=True)
class Ray:
    representative: Vec3
    label: Optional[str] = None

    @classmethod
    def of(cls, v: Vec3, label: Optional[str] = None) -> "Ray":
        return cls(canonical(v), label)

    @property
    def name(self) -> str:
        return self.label or format_vector(self.representative)


def format_vector(v: Vec3) -> str:
    short = to_shorthand(v)
    if short is not None:
        return short
    return " ".join(format_quadint(c) for c in v)


_TOKEN = re.compile(r"\S+")


def parse_token(tok: str) -> QuadInt:
    """A vector-file token: a Peres symbol (``!1``, ``2``) or ``a+b*s2``."""
    if re.fullmatch(r"[!]?[012]", tok):
        return parse_peres(tok + "00")[0]
    return parse_quadint(tok)


def parse_vector_line(line: str) -> Vec3:
    toks = _TOKEN.findall(line)
    if len(toks) == 1 and not re.search(r"[*s√+]", toks[0]) and len(toks[0]) > 1:
        return parse_peres(toks[0])
    if len(toks) != 3:
        raise VectorParseError(f"expected 3 tokens, got {len(toks)}")
    vals = []
    for t in toks:
        try:
            vals.append(parse_token(t))
        except ValueError as exc:
            raise VectorParseError(f"bad token {t!r}: {exc}") from None
    return (vals[0], vals[1], vals[2])


def parse_vector_file(text: str) -> list[tuple[Vec3, str]]:
    """Parse a vector file into ``(vector, label)`` pairs.

    One vector per line as three whitespace-separated tokens; a single
    compact Peres word such as ``!1!12`` is also accepted.  ``#`` starts a
    comment.
    """
    out = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            v = parse_vector_line(line)
        except VectorParseError as exc:
            raise VectorParseError(str(exc), line=lineno) from None
        label = to_shorthand(v) or " ".join(line.split())
        out.append((v, label))
    return out


def vectors_from_strings(items: Iterable[str]) -> list[Vec3]:
    return [parse_vector_line(s) for s in items]
