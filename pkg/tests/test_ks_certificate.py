import dataclasses
import json
import re

import pytest

from midproof.exact_arith import QuadInt as Q
from midproof.ks import (
    Certificate,
    Colour,
    Contradiction,
    DeductionStep,
    Rule,
    SearchNode,
    build_graph,
    check_certificate,
    emit,
    greedy,
    preset_assignment,
    search,
)

G, R = Colour.GREEN, Colour.RED
BASIS = [(Q(1), Q(0), Q(0)), (Q(0), Q(1), Q(0)), (Q(0), Q(0), Q(1))]


@pytest.fixture
def basis():
    return build_graph(BASIS, ["100", "010", "001"])


@pytest.fixture
def peres_greedy(peres):
    return greedy(peres, preset_assignment(peres, "peres-wlog"))


def test_colourable_checks(basis):
    cert = search(basis)
    assert check_certificate(basis, cert)
    flipped = dataclasses.replace(cert, assignment=(R, R, R))
    report = check_certificate(basis, flipped)
    assert not report.ok
    assert "0 green" in report.message


def test_two_greens_rejected(basis):
    cert = Certificate("colourable", basis.rays, assignment=(G, G, R))
    assert not check_certificate(basis, cert)


def _replace_step(cert, pos, step):
    steps = list(cert.tree.steps)
    steps[pos] = step
    tree = dataclasses.replace(cert.tree, steps=tuple(steps))
    return dataclasses.replace(cert, tree=tree)


def test_tampered_rule_rejected(peres, peres_greedy):
    steps = peres_greedy.tree.steps
    pos = next(i for i, s in enumerate(steps) if s.rule is Rule.ORTHO_TO_GREEN)
    s = steps[pos]
    # cite a red ray as the green antecedent
    red = next(t.ray for t in steps[:pos] if t.colour is R)
    bad = _replace_step(peres_greedy, pos, dataclasses.replace(s, antecedents=(red,)))
    report = check_certificate(peres, bad)
    assert not report.ok
    assert f"step {pos}" in report.message


def test_tampered_triple_rejected(peres, peres_greedy):
    steps = peres_greedy.tree.steps
    pos = next(i for i, s in enumerate(steps) if s.rule is Rule.COMPLETE_TRIPLE)
    s = steps[pos]
    bad = _replace_step(peres_greedy, pos, dataclasses.replace(s, antecedents=(s.antecedents[0], s.antecedents[0])))
    assert not check_certificate(peres, bad)


def test_fake_contradiction_rejected(peres, peres_greedy):
    tree = dataclasses.replace(peres_greedy.tree, contradiction=Contradiction("green-edge", (0, 1)))
    assert not check_certificate(peres, dataclasses.replace(peres_greedy, tree=tree))


def test_missing_branch_rejected(peres):
    cert = search(peres)
    tree = cert.tree
    # chop the red subtree of the root
    bad_tree = dataclasses.replace(tree, red=SearchNode(()))
    report = check_certificate(peres, dataclasses.replace(cert, tree=bad_tree))
    assert not report.ok and "red" in report.message


def test_wrong_assumptions(peres, peres_greedy):
    assert not check_certificate(peres, peres_greedy, initial={})


def test_graph_mismatch(basis, peres_greedy):
    assert not check_certificate(basis, peres_greedy)


def test_json_basis(basis):
    cert = search(basis)
    d = json.loads(emit(cert, "json"))
    assert d["verdict"] == "colourable"
    assert d["assignment"] == ["green", "red", "red"]
    assert len(d["rays"]) == 3


def test_json_schema_steps(peres_greedy):
    d = json.loads(emit(peres_greedy, "json"))
    assert d["verdict"] == "uncolourable"
    step = d["tree"]["steps"][-1]
    assert set(step) == {"ray", "colour", "rule", "antecedents"}
    assert d["tree"]["contradiction"]["kind"] == "green-edge"


@pytest.mark.parametrize("kind", ["search", "greedy"])
def test_json_round_trip(peres, peres_greedy, kind):
    cert = search(peres) if kind == "search" else peres_greedy
    text = emit(cert, "json")
    again = Certificate.loads(text)
    assert emit(again, "json") == text
    assert check_certificate(peres, again)


def test_dot_greedy_has_one_dotted_edge(peres_greedy):
    dot = emit(peres_greedy, "dot")
    assert dot.startswith("digraph certificate {") and dot.rstrip().endswith("}")
    assert dot.count("style=dotted") == 1
    assert "shape=box" in dot and "shape=ellipse" in dot


def test_dot_is_balanced(peres):
    for cert in (search(peres), search(build_graph(BASIS))):
        dot = emit(cert, "dot")
        assert dot.count("{") == dot.count("}")
        for line in dot.splitlines()[1:-1]:
            assert re.match(r'^  (\w+ -> \w+ \[.*\];|\w+ \[.*\];|label=".*";)$', line), line


def test_text_output(peres_greedy):
    text = emit(peres_greedy, "text")
    assert text.startswith("verdict: uncolourable")
    assert "CONTRADICTION: orthogonal rays" in text
    assert "[ortho-to-green: 002]" in text


def test_unknown_format(peres_greedy):
    with pytest.raises(ValueError):
        emit(peres_greedy, "svg")
