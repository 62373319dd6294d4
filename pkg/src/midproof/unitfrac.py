"""Nondecreasing tuples of unit fractions with a prescribed sum.

The recursion splits on the admissible values of each term in turn; the last
term is fixed by exact division.  With ``k=3``, ``target=1`` and
``min_value=2`` the result is the classification ``(2,3,6), (2,4,4), (3,3,3)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import ceil, floor


@dataclass(frozen=True)
class UnitFractionProblem:
    k: int
    target: Fraction
    min_value: int = 1

    def __post_init__(self) -> None:
        object.__setattr__(self, "target", Fraction(self.target))
        if self.k < 1:
            raise ValueError("k must be at least 1")
        if self.target <= 0:
            raise ValueError("target must be positive")
        if self.min_value < 1:
            raise ValueError("min_value must be at least 1")


SolutionSet = list  # list[tuple[int, ...]], lexicographically sorted


def next_range(remaining: Fraction, terms_left: int, lower: int) -> range:
    """Admissible values for the next term.

    ``x`` must be at least ``lower``, leave room for the other terms
    (``1/x < remaining`` unless this is the last term, where ``1/x`` must
    equal ``remaining``) and be small enough that ``terms_left`` copies of
    ``1/x`` reach ``remaining``.
    """
    remaining = Fraction(remaining)
    if remaining <= 0:
        raise ValueError("remaining target must be positive")
    if terms_left == 1:
        if remaining.numerator == 1 and remaining.denominator >= lower:
            x = remaining.denominator
            return range(x, x + 1)
        return range(0)
    inv = 1 / remaining
    # strict 1/x < remaining   <=>   x > 1/remaining
    lo = max(lower, floor(inv) + 1)
    hi = floor(terms_left * inv)
    return range(lo, max(lo, hi + 1))


def enumerate_solutions(problem: UnitFractionProblem) -> SolutionSet:
    out: list[tuple[int, ...]] = []

    def rec(prefix: tuple[int, ...], remaining: Fraction, lower: int) -> None:
        terms_left = problem.k - len(prefix)
        for x in next_range(remaining, terms_left, lower):
            if terms_left == 1:
                out.append(prefix + (x,))
            else:
                rec(prefix + (x,), remaining - Fraction(1, x), x)

    rec((), problem.target, problem.min_value)
    return out


def sufficient_cap(k: int, target: Fraction) -> int:
    """An upper bound on every term of every solution.

    With remaining target ``p/q`` and ``j`` terms left the next term is at
    most ``j*q/p <= j*q``, and the new remaining target has denominator at
    most ``q*x``.  Iterating gives a crude but provable bound.
    """
    target = Fraction(target)
    q = target.denominator
    bound = 0
    for j in range(k, 0, -1):
        x_max = j * q
        bound = max(bound, x_max)
        q = q * x_max
    return bound


def brute_force(problem: UnitFractionProblem, cap: int) -> SolutionSet:
    """All nondecreasing tuples with entries in ``[min_value, cap]``.

    Sums are kept as integer fractions ``num/den``.  A branch is abandoned
    only when the partial sum already overshoots, or when even repeating the
    current (smallest remaining) fraction cannot reach the target; both are
    sound because every later term is positive and at most the current one.
    """
    if cap < problem.min_value:
        raise ValueError("cap must be at least min_value")
    tn, td = problem.target.numerator, problem.target.denominator
    k = problem.k
    out: list[tuple[int, ...]] = []

    def rec(prefix: list[int], num: int, den: int, start: int) -> None:
        depth = len(prefix)
        left = k - depth
        for x in range(start, cap + 1):
            # partial + left/x < target: this x and every larger one fall short
            if (num * x + left * den) * td < tn * den * x:
                break
            n2, d2 = num * x + den, den * x
            cmp = n2 * td - tn * d2
            if left == 1:
                if cmp == 0:
                    out.append(tuple(prefix) + (x,))
                continue
            if cmp >= 0:
                continue
            prefix.append(x)
            rec(prefix, n2, d2, x)
            prefix.pop()

    rec([], 0, 1, problem.min_value)
    return out


def verify_tuple(t: tuple[int, ...], target: Fraction) -> bool:
    return sum((Fraction(1, x) for x in t), Fraction(0)) == target


__all__ = [
    "UnitFractionProblem",
    "next_range",
    "enumerate_solutions",
    "brute_force",
    "sufficient_cap",
    "verify_tuple",
]
