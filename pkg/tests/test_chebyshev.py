import math
import random

import pytest

from midproof.chebyshev import (
    INSTANCE_INDICES,
    INSTANCE_VARS,
    build_instance,
    cheb,
    known_witness,
    prove_mult_formula,
    specialise,
    verify_mult,
)
from midproof.multipoly import GRLEX, LEX, Poly, combine, ideal_member, parse_poly

X = ("x",)


def test_base_cases():
    assert cheb(0) == Poly.const(1, X)
    assert cheb(1) == Poly.var("x", X)
    assert cheb(2) == parse_poly("2*x^2 - 1", X)
    assert cheb(6) == parse_poly("32*x^6 - 48*x^4 + 18*x^2 - 1", X)


def test_cheb6_trig_cross_check():
    rng = random.Random(6)
    p = cheb(6)
    for _ in range(10):
        t = rng.uniform(0, math.pi)
        val = sum(float(c) * math.cos(t) ** m[0] for m, c in p.terms.items())
        assert abs(val - math.cos(6 * t)) < 1e-9


@pytest.mark.parametrize("n", [1, 2, 7, 31, 64])
def test_degree_and_leading_coefficient(n):
    p = cheb(n)
    assert p.total_degree() == n
    assert p.leading_coefficient() == 2 ** (n - 1)


def test_large_n_is_iterative():
    assert cheb(2000).total_degree() == 2000


def test_cheb_rejects_negative():
    with pytest.raises(ValueError):
        cheb(-1)


def test_verify_mult_examples():
    assert verify_mult(0, 0)
    assert verify_mult(1, 0)


def test_instance_shape():
    inst = build_instance()
    assert len(inst.vars) == 11 and len(set(inst.vars)) == 11
    assert len(inst.generators) == 5
    assert set(INSTANCE_INDICES) | {"x"} == set(INSTANCE_VARS)
    used = set()
    for g in inst.generators + [inst.goal]:
        used |= g.used_vars()
    assert used == set(INSTANCE_VARS)


def test_instance_index_triples():
    # T-indices fall into m+{0,1,2}, k+{0,1,2}, m+k+{2}, 2m+k+{2,3,4}
    groups = {}
    for name, (cm, ck, c0) in INSTANCE_INDICES.items():
        groups.setdefault((cm, ck), set()).add(c0)
    assert groups == {(1, 0): {0, 1, 2}, (0, 1): {0, 1, 2}, (1, 1): {2}, (2, 1): {2, 3, 4}}


@pytest.mark.parametrize("m, k", [(m, k) for m in range(7) for k in range(7)])
def test_substitution_soundness(m, k):
    inst = build_instance()
    for p in inst.generators + [inst.goal]:
        assert specialise(p, m, k).is_zero()


def test_known_witness_expands_to_goal():
    inst = build_instance()
    assert combine(known_witness(), inst.generators) == inst.goal


def test_prove_mult_formula():
    ok, witness = prove_mult_formula()
    inst = build_instance()
    assert ok
    assert combine(witness.cofactors, inst.generators) == inst.goal


@pytest.mark.parametrize("order", [LEX, GRLEX])
def test_membership_other_orders(order):
    inst = build_instance()
    res = ideal_member(inst.goal, inst.generators, order)
    assert res.member and res.witness.verifies(inst.goal)


def test_corrupted_goal_rejected():
    bad = build_instance("2*Tm2*Tmk2 - T2mk4 + Tk")
    # the corrupted identity fails for concrete polynomials at (m, k) = (1, 1)
    assert not specialise(bad.goal, 1, 1).is_zero()
    assert not ideal_member(bad.goal, bad.generators).member
