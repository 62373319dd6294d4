"""Chebyshev polynomials of the first kind and the multiplication-formula instance.

``cheb`` iterates ``T(n+2) = 2x T(n+1) - T(n)`` from ``T0 = 1``, ``T1 = x``.
The abstract instance treats the eleven relevant values of ``T`` as separate
variables; the second inductive step of ``2 Tm T(m+k) = T(2m+k) + Tk`` is then
an ideal-membership question.
"""

from __future__ import annotations

from dataclasses import dataclass

from .multipoly import DEFAULT_ORDER, MembershipWitness, Poly, ideal_member, parse_poly

X_VARS = ("x",)

# Name -> (coefficient of m, coefficient of k, constant) for the T-index.
INSTANCE_INDICES = {
    "Tm2": (1, 0, 2),
    "Tk2": (0, 1, 2),
    "Tmk2": (1, 1, 2),
    "T2mk4": (2, 1, 4),
    "Tm1": (1, 0, 1),
    "Tk1": (0, 1, 1),
    "T2mk3": (2, 1, 3),
    "Tm": (1, 0, 0),
    "Tk": (0, 1, 0),
    "T2mk2": (2, 1, 2),
}

INSTANCE_VARS = ("Tm2", "Tk2", "Tmk2", "T2mk4", "x", "Tm1", "Tk1", "T2mk3", "Tm", "Tk", "T2mk2")

GENERATOR_SOURCES = (
    "2*Tm1*Tmk2 - T2mk3 - Tk1",  # hypothesis for m+1 at k+1
    "2*Tm*Tmk2 - T2mk2 - Tk2",  # hypothesis for m at k+2
    "Tm2 - 2*x*Tm1 + Tm",  # recurrence at m
    "T2mk4 - 2*x*T2mk3 + T2mk2",  # recurrence at 2m+k+2
    "Tk2 - 2*x*Tk1 + Tk",  # recurrence at k
)
GOAL_SOURCE = "2*Tm2*Tmk2 - T2mk4 - Tk"


def cheb(n: int) -> Poly:
    if n < 0:
        raise ValueError("n must be nonnegative")
    prev = Poly.const(1, X_VARS)
    if n == 0:
        return prev
    x = Poly.var("x", X_VARS)
    cur = x
    two_x = x.scale(2)
    for _ in range(n - 1):
        prev, cur = cur, two_x * cur - prev
    return cur


def verify_mult(m: int, k: int) -> bool:
    """Check ``2 Tm T(m+k) == T(2m+k) + Tk`` by exact expansion."""
    lhs = cheb(m) * cheb(m + k)
    return lhs.scale(2) == cheb(2 * m + k) + cheb(k)


@dataclass(frozen=True)
class ChebInstance:
    vars: tuple[str, ...]
    generators: list[Poly]
    goal: Poly


def build_instance(goal_source: str = GOAL_SOURCE) -> ChebInstance:
    gens = [parse_poly(s, INSTANCE_VARS) for s in GENERATOR_SOURCES]
    return ChebInstance(INSTANCE_VARS, gens, parse_poly(goal_source, INSTANCE_VARS))


def specialise(p: Poly, m: int, k: int) -> Poly:
    """Substitute the concrete Chebyshev polynomials for the T-variables."""
    images = {}
    for name, (cm, ck, c0) in INSTANCE_INDICES.items():
        images[name] = cheb(cm * m + ck * k + c0)
    images["x"] = Poly.var("x", X_VARS)
    return p.substitute(images, X_VARS)


def prove_mult_formula(order=DEFAULT_ORDER) -> tuple[bool, MembershipWitness]:
    inst = build_instance()
    res = ideal_member(inst.goal, inst.generators, order, want_witness=True)
    if res.member and not res.witness.verifies(inst.goal):
        raise AssertionError("membership witness does not expand to the goal")
    return res.member, res.witness


def known_witness() -> list[Poly]:
    """A hand-derived combination: 2x*g1 - g2 + 2*Tmk2*g3 - g4 - g5."""
    v = INSTANCE_VARS
    return [
        parse_poly("2*x", v),
        parse_poly("-1", v),
        parse_poly("2*Tmk2", v),
        parse_poly("-1", v),
        parse_poly("-1", v),
    ]
