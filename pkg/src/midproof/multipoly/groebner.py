"""Multivariate division, Buchberger's algorithm and ideal membership.

Every basis element carries its expression in terms of the original
generators, so a membership verdict comes with explicit cofactors.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .poly import (
    DEFAULT_ORDER,
    Monomial,
    MonomialOrder,
    Poly,
    get_order,
    mono_coprime,
    mono_div,
    mono_divides,
    mono_lcm,
)


@dataclass(frozen=True)
class DivisionResult:
    quotients: list[Poly]
    remainder: Poly


@dataclass(frozen=True)
class MembershipWitness:
    """``goal == sum(c * g for c, g in zip(cofactors, generators))``."""

    generators: list[Poly]
    cofactors: list[Poly]

    def combination(self) -> Poly:
        return combine(self.cofactors, self.generators)

    def verifies(self, goal: Poly) -> bool:
        return self.combination() == goal


@dataclass(frozen=True)
class MembershipResult:
    member: bool
    remainder: Poly
    basis: list[Poly]
    witness: Optional[MembershipWitness] = None

    def __bool__(self) -> bool:
        return self.member


def combine(cofactors: Sequence[Poly], generators: Sequence[Poly]) -> Poly:
    if len(cofactors) != len(generators):
        raise ValueError("need one cofactor per generator")
    if not generators:
        raise ValueError("empty generator list")
    total = Poly.zero(generators[0].vars)
    for c, g in zip(cofactors, generators):
        total = total + c * g
    return total


def _reduce(
    f: Poly,
    divisors: Sequence[Poly],
    order: MonomialOrder,
    track: bool = True,
) -> tuple[list[dict], dict]:
    """Textbook division; quotients and remainder as raw term dicts."""
    leads = [d.leading_term(order) for d in divisors]
    key = order.key
    p = dict(f.terms)
    rem: dict[Monomial, Fraction] = {}
    quots: list[dict] = [{} for _ in divisors]
    while p:
        m = max(p, key=key)
        c = p[m]
        for i, (lm, lc) in enumerate(leads):
            if mono_divides(lm, m):
                qm = mono_div(m, lm)
                qc = c / lc
                if track:
                    qi = quots[i]
                    s = qi.get(qm, 0) + qc
                    if s:
                        qi[qm] = s
                    else:
                        qi.pop(qm, None)
                for dm, dc in divisors[i].terms.items():
                    t = tuple(a + b for a, b in zip(dm, qm))
                    s = p.get(t, 0) - qc * dc
                    if s:
                        p[t] = s
                    else:
                        p.pop(t, None)
                break
        else:
            rem[m] = c
            del p[m]
    return quots, rem


def divide(f: Poly, divisors: Sequence[Poly], order: MonomialOrder | str = DEFAULT_ORDER) -> DivisionResult:
    """Divide ``f`` by ``divisors`` in list order.

    The current leading term is cancelled by the first divisor whose leading
    monomial divides it, otherwise it moves to the remainder.
    """
    order = get_order(order)
    if any(d.is_zero() for d in divisors):
        raise ValueError("cannot divide by the zero polynomial")
    for d in divisors:
        f._check(d)
    quots, rem = _reduce(f, divisors, order)
    return DivisionResult([Poly._raw(q, f.vars) for q in quots], Poly._raw(rem, f.vars))


def s_polynomial(f: Poly, g: Poly, order: MonomialOrder | str = DEFAULT_ORDER) -> Poly:
    order = get_order(order)
    if f.is_zero() or g.is_zero():
        raise ValueError("S-polynomial of a zero polynomial")
    (fm, fc), (gm, gc) = f.leading_term(order), g.leading_term(order)
    lcm = mono_lcm(fm, gm)
    return f.mul_term(mono_div(lcm, fm), 1 / fc) - g.mul_term(mono_div(lcm, gm), 1 / gc)


class _Tracked:
    """A polynomial with its representation over the original generators."""

    __slots__ = ("poly", "rep", "lm", "lc")

    def __init__(self, poly: Poly, rep: list[Poly], order: MonomialOrder):
        self.poly = poly
        self.rep = rep
        self.lm, self.lc = poly.leading_term(order)


def _reduce_tracked(p: Poly, rep: list[Poly], basis: Sequence[_Tracked], order: MonomialOrder, track: bool):
    quots, rem = _reduce(p, [b.poly for b in basis], order, track)
    if track:
        rep = list(rep)
        for q, b in zip(quots, basis):
            if q:
                qp = Poly._raw(q, p.vars)
                rep = [r - qp * br for r, br in zip(rep, b.rep)]
    return Poly._raw(rem, p.vars), rep


def _groebner_tracked(
    generators: Sequence[Poly],
    order: MonomialOrder,
    track: bool = True,
) -> list[_Tracked]:
    gens = list(generators)
    if not gens or all(g.is_zero() for g in gens):
        raise ValueError("need at least one nonzero generator")
    vars = gens[0].vars
    for g in gens:
        if g.vars != vars:
            raise ValueError("generators use different variable tables")
    zero = Poly.zero(vars)
    one = Poly.const(1, vars)
    m = len(gens)

    basis: list[_Tracked] = []
    for i, g in enumerate(gens):
        if g.is_zero():
            continue
        rep = [one if j == i else zero for j in range(m)] if track else []
        basis.append(_Tracked(g, rep, order))

    # normal selection strategy; coprime leading monomials are skipped
    # (Buchberger's first criterion)
    pairs: set[tuple[int, int]] = {(i, j) for j in range(len(basis)) for i in range(j)}

    def pair_key(p):
        i, j = p
        lcm = mono_lcm(basis[i].lm, basis[j].lm)
        return (sum(lcm), order.key(lcm), j, i)

    while pairs:
        i, j = min(pairs, key=pair_key)
        pairs.discard((i, j))
        a, b = basis[i], basis[j]
        if mono_coprime(a.lm, b.lm):
            continue
        lcm = mono_lcm(a.lm, b.lm)
        ma, mb = mono_div(lcm, a.lm), mono_div(lcm, b.lm)
        s = a.poly.mul_term(ma, 1 / a.lc) - b.poly.mul_term(mb, 1 / b.lc)
        if track:
            pa = Poly.monomial(ma, 1 / a.lc, vars)
            pb = Poly.monomial(mb, 1 / b.lc, vars)
            srep = [pa * ra - pb * rb for ra, rb in zip(a.rep, b.rep)]
        else:
            srep = []
        r, rrep = _reduce_tracked(s, srep, basis, order, track)
        if r:
            basis.append(_Tracked(r, rrep, order))
            n = len(basis) - 1
            pairs.update((k, n) for k in range(n))

    # minimal basis: drop elements whose leading monomial another one divides
    keep: list[_Tracked] = []
    for idx, t in enumerate(basis):
        redundant = False
        for jdx, u in enumerate(basis):
            if jdx == idx or not mono_divides(u.lm, t.lm):
                continue
            if u.lm != t.lm or jdx < idx:
                redundant = True
                break
        if not redundant:
            keep.append(t)

    # interreduce, normalise to monic
    reduced: list[_Tracked] = []
    for idx, t in enumerate(keep):
        others = [u for k, u in enumerate(keep) if k != idx]
        head = Poly._raw({t.lm: t.lc}, vars)
        tail = t.poly - head
        rtail, rep = _reduce_tracked(tail, t.rep, others, order, track)
        # head is not divisible by any other leading monomial (minimality)
        poly = head + rtail
        inv = 1 / t.lc
        reduced.append(_Tracked(poly.scale(inv), [r.scale(inv) for r in rep] if track else [], order))
    reduced.sort(key=lambda t: order.key(t.lm), reverse=True)
    return reduced


def buchberger(generators: Sequence[Poly], order: MonomialOrder | str = DEFAULT_ORDER) -> list[Poly]:
    """Reduced Groebner basis, sorted by decreasing leading monomial."""
    order = get_order(order)
    return [t.poly for t in _groebner_tracked(generators, order, track=False)]


def groebner_with_reps(generators: Sequence[Poly], order: MonomialOrder | str = DEFAULT_ORDER):
    """``(basis, reps)`` where ``basis[i] == combine(reps[i], generators)``."""
    order = get_order(order)
    tracked = _groebner_tracked(generators, order, track=True)
    return [t.poly for t in tracked], [t.rep for t in tracked]


def is_groebner(basis: Sequence[Poly], order: MonomialOrder | str = DEFAULT_ORDER) -> bool:
    """Buchberger's criterion: every S-polynomial reduces to zero."""
    order = get_order(order)
    basis = [b for b in basis if b]
    for j in range(len(basis)):
        for i in range(j):
            s = s_polynomial(basis[i], basis[j], order)
            if divide(s, basis, order).remainder:
                return False
    return True


def is_reduced(basis: Sequence[Poly], order: MonomialOrder | str = DEFAULT_ORDER) -> bool:
    order = get_order(order)
    for i, b in enumerate(basis):
        if b.leading_coefficient(order) != 1:
            return False
        for j, other in enumerate(basis):
            if i != j:
                lm = other.leading_monomial(order)
                if any(mono_divides(lm, m) for m in b.terms):
                    return False
    return True


def ideal_member(
    goal: Poly,
    generators: Sequence[Poly],
    order: MonomialOrder | str = DEFAULT_ORDER,
    want_witness: bool = True,
) -> MembershipResult:
    """Decide ``goal in <generators>``, with cofactors over the original generators."""
    order = get_order(order)
    gens = list(generators)
    for g in gens:
        goal._check(g)
    if want_witness:
        basis, reps = groebner_with_reps(gens, order)
    else:
        basis, reps = buchberger(gens, order), []
    div = divide(goal, basis, order)
    member = div.remainder.is_zero()
    witness = None
    if member and want_witness:
        zero = Poly.zero(goal.vars)
        cof = [zero] * len(gens)
        for q, rep in zip(div.quotients, reps):
            if q:
                cof = [c + q * r for c, r in zip(cof, rep)]
        witness = MembershipWitness(gens, cof)
    return MembershipResult(member, div.remainder, basis, witness)
