"""Exact scalars: rationals and the ring Z[sqrt(2)].

Rationals are :class:`fractions.Fraction`, which already keeps the reduced,
positive-denominator canonical form.  ``QuadInt`` is a small immutable value
type for ``a + b*sqrt(2)`` with integer ``a`` and ``b``.
"""

from __future__ import annotations

import operator
import re
from fractions import Fraction
from typing import Union

Rational = Fraction

_RAT_OPS = {
    "add": operator.add,
    "sub": operator.sub,
    "mul": operator.mul,
    "div": operator.truediv,
}


def rat_arith(x: Fraction, y: Fraction, op: str) -> Union[Fraction, int]:
    """Apply ``op`` to two rationals.

    ``op`` is one of ``add``, ``sub``, ``mul``, ``div`` or ``cmp``; ``cmp``
    returns -1, 0 or 1.  Division by zero raises :class:`ZeroDivisionError`.
    """
    x, y = Fraction(x), Fraction(y)
    if op == "cmp":
        return (x > y) - (x < y)
    try:
        fn = _RAT_OPS[op]
    except KeyError:
        raise ValueError(f"unknown rational operation {op!r}") from None
    if op == "div" and y == 0:
        raise ZeroDivisionError("rational division by zero")
    return fn(x, y)


def parse_rational(text: str) -> Fraction:
    """Parse ``"3"``, ``"-2/4"`` and similar into a reduced Fraction."""
    text = text.strip()
    if not re.fullmatch(r"[+-]?\d+(/\d+)?", text):
        raise ValueError(f"not a rational literal: {text!r}")
    return Fraction(text)


class QuadInt:
    """An element ``a + b*sqrt(2)`` of Z[sqrt(2)]."""

    __slots__ = ("_a", "_b")

    def __init__(self, a: int = 0, b: int = 0) -> None:
        if not isinstance(a, int) or not isinstance(b, int):
            raise TypeError("QuadInt components must be integers")
        object.__setattr__(self, "_a", int(a))
        object.__setattr__(self, "_b", int(b))

    def __setattr__(self, name, value):
        raise AttributeError("QuadInt is immutable")

    @property
    def a(self) -> int:
        return self._a

    @property
    def b(self) -> int:
        return self._b

    @classmethod
    def coerce(cls, value: Union[int, "QuadInt"]) -> "QuadInt":
        if isinstance(value, QuadInt):
            return value
        if isinstance(value, int):
            return cls(value, 0)
        raise TypeError(f"cannot convert {type(value).__name__} to QuadInt")

    def is_zero(self) -> bool:
        return self._a == 0 and self._b == 0

    def conj(self) -> "QuadInt":
        """The Galois conjugate ``a - b*sqrt(2)``."""
        return QuadInt(self._a, -self._b)

    def norm(self) -> int:
        """``(a + b√2)(a - b√2) = a² - 2b²``."""
        return self._a * self._a - 2 * self._b * self._b

    def sign(self) -> int:
        return qint_sign(self)

    def __float__(self) -> float:
        return self._a + self._b * 2.0**0.5

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = QuadInt(other)
        if not isinstance(other, QuadInt):
            return NotImplemented
        return self._a == other._a and self._b == other._b

    def __hash__(self) -> int:
        return hash((self._a, self._b))

    def __add__(self, other):
        try:
            other = QuadInt.coerce(other)
        except TypeError:
            return NotImplemented
        return QuadInt(self._a + other._a, self._b + other._b)

    __radd__ = __add__

    def __neg__(self) -> "QuadInt":
        return QuadInt(-self._a, -self._b)

    def __sub__(self, other):
        try:
            other = QuadInt.coerce(other)
        except TypeError:
            return NotImplemented
        return QuadInt(self._a - other._a, self._b - other._b)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        try:
            other = QuadInt.coerce(other)
        except TypeError:
            return NotImplemented
        a1, b1, a2, b2 = self._a, self._b, other._a, other._b
        return QuadInt(a1 * a2 + 2 * b1 * b2, a1 * b2 + a2 * b1)

    __rmul__ = __mul__

    def __repr__(self) -> str:
        return f"QuadInt({self._a}, {self._b})"

    def __str__(self) -> str:
        return format_quadint(self)


def qint_arith(x: QuadInt, y: QuadInt | None, op: str) -> QuadInt:
    """Ring operation by name: ``add``, ``sub``, ``mul`` or ``neg`` (unary)."""
    if op == "neg":
        return -x
    if y is None:
        raise ValueError(f"{op} needs two operands")
    if op == "add":
        return x + y
    if op == "sub":
        return x - y
    if op == "mul":
        return x * y
    raise ValueError(f"unknown QuadInt operation {op!r}")


def qint_sign(x: QuadInt) -> int:
    """Exact sign of ``a + b*sqrt(2)`` as -1, 0 or 1."""
    a, b = x.a, x.b
    sa = (a > 0) - (a < 0)
    sb = (b > 0) - (b < 0)
    if sa == sb:
        return sa
    if sa == 0:
        return sb
    if sb == 0:
        return sa
    # opposite signs: whichever of |a| and |b|√2 is larger wins
    return sa if a * a > 2 * b * b else sb


def format_quadint(x: QuadInt) -> str:
    """Normal form ``a+b*s2`` (e.g. ``2-1*s2``, ``0+1*s2``)."""
    return f"{x.a}{x.b:+d}*s2"


_QI_TERM = re.compile(
    r"""\s*(?P<sign>[+-])?\s*
        (?:
            (?P<coef>\d+)?\s*(?:\*\s*)?(?P<root>s2|√2|sqrt\(?2\)?)
          | (?P<int>\d+)
        )\s*""",
    re.VERBOSE,
)


def parse_quadint(text: str) -> QuadInt:
    """Parse textual Z[sqrt(2)] values.

    Accepts integers (``-1``), radical terms (``s2``, ``3*s2``, ``-2√2``) and
    sums of the two (``2-1*s2``, ``1+s2``).
    """
    src = text.strip()
    if not src:
        raise ValueError("empty QuadInt literal")
    a = b = 0
    pos = 0
    first = True
    while pos < len(src):
        m = _QI_TERM.match(src, pos)
        if m is None or m.end() == pos:
            raise ValueError(f"malformed QuadInt {text!r} at position {pos}")
        if not first and m.group("sign") is None:
            raise ValueError(f"malformed QuadInt {text!r} at position {pos}")
        sign = -1 if m.group("sign") == "-" else 1
        if m.group("root"):
            b += sign * int(m.group("coef") or 1)
        else:
            a += sign * int(m.group("int"))
        pos = m.end()
        first = False
    return QuadInt(a, b)


__all__ = [
    "Rational",
    "QuadInt",
    "rat_arith",
    "parse_rational",
    "qint_arith",
    "qint_sign",
    "format_quadint",
    "parse_quadint",
]
