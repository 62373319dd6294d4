import random

import pytest

from _oracles import backtrack_colourable, exhaustive_colourable
from midproof.exact_arith import QuadInt as Q
from midproof.ks import (
    Colour,
    Rule,
    build_graph,
    check_certificate,
    greedy,
    parse_peres,
    peres33,
    preset_assignment,
    propagate,
    search,
)

G, R = Colour.GREEN, Colour.RED
BASIS = [(Q(1), Q(0), Q(0)), (Q(0), Q(1), Q(0)), (Q(0), Q(0), Q(1))]

# naive DFS oracle: peres33 with any single vector removed is colourable
PERES_MINUS_ONE_COLOURABLE = [True] * 33


@pytest.fixture
def basis():
    return build_graph(BASIS, ["100", "010", "001"])


def test_ortho_to_green(basis):
    p = propagate(basis, {2: G})
    assert p.consistent
    assert p.assignment == {0: R, 1: R, 2: G}
    assert [(s.ray, s.rule, s.antecedents) for s in p.steps[1:]] == [
        (0, Rule.ORTHO_TO_GREEN, (2,)),
        (1, Rule.ORTHO_TO_GREEN, (2,)),
    ]


def test_complete_triple(basis):
    p = propagate(basis, {0: R, 1: R})
    assert p.assignment[2] is G
    last = p.steps[-1]
    assert last.rule is Rule.COMPLETE_TRIPLE and set(last.antecedents) == {0, 1}


def test_contradictions_detected_immediately(basis):
    p = propagate(basis, {0: G, 1: G})
    assert p.contradiction.kind == "green-edge"
    assert len(p.steps) == 2
    p = propagate(basis, {0: R, 1: R, 2: R})
    assert p.contradiction.kind == "red-triple"


def test_peres_preset_contradiction(peres):
    pre = preset_assignment(peres, "peres-wlog")
    assert len(pre) == 9
    p = propagate(peres, pre)
    assert p.contradiction is not None
    assert p.contradiction.kind == "green-edge"


def test_search_basis(basis):
    cert = search(basis)
    assert cert.verdict == "colourable"
    assert cert.assignment == (G, R, R)
    assert check_certificate(basis, cert)


def test_search_peres(peres):
    cert = search(peres)
    assert cert.verdict == "uncolourable"
    assert cert.stats["splits"] == cert.splits() == 41
    assert len(cert.leaves()) == 42
    assert all(leaf.contradiction is not None for leaf in cert.leaves())
    assert check_certificate(peres, cert)


def test_search_is_deterministic(peres):
    assert search(peres).dumps() == search(peres).dumps()


def test_greedy_preset_no_branching(peres):
    pre = preset_assignment(peres, "peres-wlog")
    cert = greedy(peres, pre)
    assert cert.verdict == "uncolourable"
    assert cert.splits() == 0
    report = check_certificate(peres, cert, pre)
    assert report.ok and len(report.assumptions) == 9


def test_greedy_inconclusive(peres):
    cert = greedy(peres, {})
    assert cert.verdict == "inconclusive"
    assert check_certificate(peres, cert).ok


def test_search_respects_initial(peres):
    # fixing 002 green still leaves the set uncolourable
    cert = search(peres, {7: G})
    assert cert.verdict == "uncolourable"
    assert check_certificate(peres, cert, {7: G})


def test_peres_minus_one():
    vs = peres33()
    got = []
    for drop in range(33):
        g = build_graph([v for i, v in enumerate(vs) if i != drop])
        cert = search(g)
        assert check_certificate(g, cert)
        got.append(cert.colourable)
    assert got == PERES_MINUS_ONE_COLOURABLE


def test_peres_minus_one_oracle_spot_checks(peres):
    for drop in (0, 7, 16, 32):
        keep = [i for i in range(33) if i != drop]
        sub = peres.subgraph(keep)
        assert backtrack_colourable(len(sub), sub.edges, sub.triples) == PERES_MINUS_ONE_COLOURABLE[drop]


def test_full_peres_backtrack_oracle(peres):
    assert backtrack_colourable(33, peres.edges, peres.triples) is False


@pytest.mark.parametrize("seed", range(40))
def test_soundness_on_random_subsets(peres, seed):
    rng = random.Random(seed)
    idx = sorted(rng.sample(range(33), rng.randint(5, 20)))
    sub = peres.subgraph(idx)
    cert = search(sub)
    assert check_certificate(sub, cert)


@pytest.mark.parametrize("seed", range(40))
def test_small_instances_match_exhaustive(peres, seed):
    rng = random.Random(1000 + seed)
    idx = sorted(rng.sample(range(33), rng.randint(3, 12)))
    sub = peres.subgraph(idx)
    assert search(sub).colourable == exhaustive_colourable(len(sub), sub.edges, sub.triples)


@pytest.mark.parametrize("seed", range(30))
def test_propagation_confluent(peres, seed):
    rng = random.Random(seed)
    # random consistent seeds: take a colouring of a random colourable subset
    seeds = {}
    for i in rng.sample(range(33), 3):
        seeds[i] = rng.choice([G, R])
    base = propagate(peres, seeds)
    for s in range(5):
        shuffled = propagate(peres, seeds, rng=random.Random(s))
        assert (base.contradiction is None) == (shuffled.contradiction is None)
        if base.contradiction is None:
            assert shuffled.assignment == base.assignment


def test_unknown_preset(peres):
    with pytest.raises(KeyError):
        preset_assignment(peres, "nope")


def test_preset_needs_rays():
    g = build_graph([parse_peres("001"), parse_peres("100")])
    with pytest.raises(ValueError):
        preset_assignment(g, "peres-wlog")
