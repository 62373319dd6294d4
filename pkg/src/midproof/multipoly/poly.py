"""Sparse multivariate polynomials over Q and monomial orders."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Optional, Sequence, Union

Monomial = tuple[int, ...]
Scalar = Union[int, Fraction]


class VarTableMismatch(ValueError):
    pass


def var_table(names: Union[str, Iterable[str]]) -> tuple[str, ...]:
    """Normalise ``"x,y"`` or ``["x", "y"]`` to a tuple of distinct names."""
    if isinstance(names, str):
        names = [n.strip() for n in names.split(",")]
    table = tuple(names)
    if not table or any(not n for n in table):
        raise ValueError("variable table must be a nonempty list of names")
    if len(set(table)) != len(table):
        raise ValueError(f"duplicate variable names in {table}")
    return table


class MonomialOrder:
    """Admissible term order selected by name: ``lex``, ``grlex`` or ``grevlex``.

    Variable precedence follows the variable table: the first variable is
    the largest.
    """

    KINDS = ("lex", "grlex", "grevlex")

    def __init__(self, kind: str = "grevlex"):
        if kind not in self.KINDS:
            raise ValueError(f"unknown monomial order {kind!r}")
        self.kind = kind

    def key(self, m: Monomial):
        if self.kind == "lex":
            return m
        if self.kind == "grlex":
            return (sum(m), m)
        return (sum(m), tuple(-e for e in reversed(m)))

    def __eq__(self, other):
        return isinstance(other, MonomialOrder) and other.kind == self.kind

    def __hash__(self):
        return hash(self.kind)

    def __repr__(self):
        return f"MonomialOrder({self.kind!r})"


LEX = MonomialOrder("lex")
GRLEX = MonomialOrder("grlex")
GREVLEX = MonomialOrder("grevlex")
DEFAULT_ORDER = GREVLEX


def get_order(order: Union[str, MonomialOrder, None]) -> MonomialOrder:
    if order is None:
        return DEFAULT_ORDER
    if isinstance(order, MonomialOrder):
        return order
    return MonomialOrder(order)


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a: Monomial, b: Monomial) -> bool:
    """True when ``a`` divides ``b``."""
    return all(x <= y for x, y in zip(a, b))


def mono_div(b: Monomial, a: Monomial) -> Monomial:
    return tuple(y - x for x, y in zip(a, b))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_coprime(a: Monomial, b: Monomial) -> bool:
    return all(x == 0 or y == 0 for x, y in zip(a, b))


class Poly:
    """Polynomial as a ``{exponent tuple: nonzero Fraction}`` map over a name table.

    Instances are treated as immutable; arithmetic returns new objects.
    """

    __slots__ = ("terms", "vars")

    def __init__(self, terms: Optional[Mapping[Monomial, Scalar]], vars: Sequence[str]):
        self.vars = tuple(vars)
        n = len(self.vars)
        clean: dict[Monomial, Fraction] = {}
        for m, c in (terms or {}).items():
            m = tuple(m)
            if len(m) != n:
                raise ValueError(f"monomial {m} does not match {n} variables")
            if any(e < 0 for e in m):
                raise ValueError(f"negative exponent in {m}")
            c = Fraction(c)
            if c:
                clean[m] = clean.get(m, Fraction(0)) + c
                if not clean[m]:
                    del clean[m]
        self.terms = clean

    @classmethod
    def _raw(cls, terms: dict, vars: tuple[str, ...]) -> "Poly":
        p = cls.__new__(cls)
        p.terms = terms
        p.vars = vars
        return p

    @classmethod
    def zero(cls, vars) -> "Poly":
        return cls._raw({}, tuple(vars))

    @classmethod
    def const(cls, c: Scalar, vars) -> "Poly":
        vars = tuple(vars)
        return cls({(0,) * len(vars): c}, vars)

    @classmethod
    def var(cls, name: str, vars) -> "Poly":
        vars = tuple(vars)
        if name not in vars:
            raise KeyError(f"unknown variable {name!r}")
        m = tuple(1 if v == name else 0 for v in vars)
        return cls._raw({m: Fraction(1)}, vars)

    @classmethod
    def monomial(cls, m: Monomial, c: Scalar, vars) -> "Poly":
        return cls({m: c}, vars)

    def gens(self) -> list["Poly"]:
        return [Poly.var(v, self.vars) for v in self.vars]

    # -- queries -------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def total_degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(m) for m in self.terms)

    def degree(self, name: str) -> int:
        i = self.vars.index(name)
        return max((m[i] for m in self.terms), default=-1)

    def used_vars(self) -> set[str]:
        return {v for i, v in enumerate(self.vars) if any(m[i] for m in self.terms)}

    def is_constant(self) -> bool:
        return all(not any(m) for m in self.terms)

    def constant_value(self) -> Fraction:
        return self.terms.get((0,) * len(self.vars), Fraction(0))

    def leading_term(self, order: MonomialOrder = DEFAULT_ORDER) -> tuple[Monomial, Fraction]:
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        m = max(self.terms, key=order.key)
        return m, self.terms[m]

    def leading_monomial(self, order: MonomialOrder = DEFAULT_ORDER) -> Monomial:
        return self.leading_term(order)[0]

    def leading_coefficient(self, order: MonomialOrder = DEFAULT_ORDER) -> Fraction:
        return self.leading_term(order)[1]

    def sorted_terms(self, order: MonomialOrder = DEFAULT_ORDER) -> list[tuple[Monomial, Fraction]]:
        return sorted(self.terms.items(), key=lambda t: order.key(t[0]), reverse=True)

    # -- arithmetic ----------------------------------------------------

    def _check(self, other: "Poly") -> None:
        if self.vars != other.vars:
            raise VarTableMismatch(f"variable tables differ: {self.vars} vs {other.vars}")

    def _lift(self, other) -> "Poly":
        if isinstance(other, Poly):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return Poly.const(other, self.vars)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return Poly._raw(out, self.vars)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly._raw({m: -c for m, c in self.terms.items()}, self.vars)

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        out: dict[Monomial, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mono_mul(m1, m2)
                s = out.get(m, 0) + c1 * c2
                if s:
                    out[m] = s
                else:
                    out.pop(m, None)
        return Poly._raw(out, self.vars)

    __rmul__ = __mul__

    def __truediv__(self, c):
        if isinstance(c, Poly):
            if not c.is_constant() or c.is_zero():
                raise ZeroDivisionError("can only divide by a nonzero constant")
            c = c.constant_value()
        c = Fraction(c)
        if not c:
            raise ZeroDivisionError("polynomial division by zero")
        return self.scale(1 / c)

    def __pow__(self, n: int) -> "Poly":
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = Poly.const(1, self.vars)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scale(self, c: Scalar) -> "Poly":
        c = Fraction(c)
        if not c:
            return Poly.zero(self.vars)
        return Poly._raw({m: v * c for m, v in self.terms.items()}, self.vars)

    def mul_term(self, m: Monomial, c: Scalar) -> "Poly":
        c = Fraction(c)
        if not c:
            return Poly.zero(self.vars)
        return Poly._raw({mono_mul(k, m): v * c for k, v in self.terms.items()}, self.vars)

    def monic(self, order: MonomialOrder = DEFAULT_ORDER) -> "Poly":
        return self.scale(1 / self.leading_coefficient(order))

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Poly.const(other, self.vars)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.vars == other.vars and self.terms == other.terms

    def __hash__(self):
        return hash((self.vars, frozenset(self.terms.items())))

    # -- evaluation ----------------------------------------------------

    def substitute(self, values: Mapping[str, "Poly"], target_vars: Sequence[str]) -> "Poly":
        """Ring homomorphism sending each variable to a polynomial over ``target_vars``.

        Variables missing from ``values`` must also exist in ``target_vars``;
        they are mapped to themselves.
        """
        target_vars = tuple(target_vars)
        images = []
        for v in self.vars:
            if v in values:
                img = values[v]
                if img.vars != target_vars:
                    raise VarTableMismatch(f"image of {v} is over {img.vars}, not {target_vars}")
            else:
                img = Poly.var(v, target_vars)
            images.append(img)
        cache: dict[tuple[int, int], Poly] = {}

        def power(i: int, e: int) -> Poly:
            if (i, e) not in cache:
                cache[(i, e)] = images[i] ** e
            return cache[(i, e)]

        out = Poly.zero(target_vars)
        for m, c in self.terms.items():
            t = Poly.const(c, target_vars)
            for i, e in enumerate(m):
                if e:
                    t = t * power(i, e)
            out = out + t
        return out

    def evaluate(self, point: Mapping[str, Scalar]) -> Fraction:
        total = Fraction(0)
        for m, c in self.terms.items():
            t = Fraction(c)
            for v, e in zip(self.vars, m):
                if e:
                    t *= Fraction(point[v]) ** e
            total += t
        return total

    def with_vars(self, vars: Sequence[str]) -> "Poly":
        """Re-embed into a larger (or permuted) table containing every used variable."""
        vars = tuple(vars)
        idx = []
        for v in vars:
            idx.append(self.vars.index(v) if v in self.vars else None)
        for i, v in enumerate(self.vars):
            if v not in vars and any(m[i] for m in self.terms):
                raise VarTableMismatch(f"variable {v} is not in {vars}")
        out = {}
        for m, c in self.terms.items():
            out[tuple(m[i] if i is not None else 0 for i in idx)] = c
        return Poly._raw(out, vars)

    # -- printing ------------------------------------------------------

    def to_str(self, order: MonomialOrder = DEFAULT_ORDER) -> str:
        """Render in the same grammar :func:`parse_poly` reads."""
        if not self.terms:
            return "0"
        parts = []
        for i, (m, c) in enumerate(self.sorted_terms(order)):
            neg = c < 0
            a = -c if neg else c
            factors = []
            for v, e in zip(self.vars, m):
                if e == 1:
                    factors.append(v)
                elif e:
                    factors.append(f"{v}^{e}")
            if a != 1 or not factors:
                factors.insert(0, str(a))
            body = "*".join(factors)
            if i == 0:
                parts.append("-" + body if neg else body)
            else:
                parts.append(("- " if neg else "+ ") + body)
        return " ".join(parts)

    def __str__(self) -> str:
        return self.to_str()

    def __repr__(self) -> str:
        return f"Poly({self.to_str()!r}, vars={self.vars})"
