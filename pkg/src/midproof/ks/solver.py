"""Greedy colour propagation and binary search over ray colourings.

Two forcing rules drive everything: a ray orthogonal to a green ray is red,
and the third ray of a triple whose other two rays are red is green.  Both
kinds of contradiction are checked after every single assignment.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Mapping, Optional

from .certificate import Certificate, Colour, Contradiction, DeductionStep, Rule, SearchNode
from .graph import OrthGraph

PartialColoring = dict  # dict[int, Colour]


@dataclass
class Propagation:
    assignment: dict[int, Colour]
    steps: list[DeductionStep]
    contradiction: Optional[Contradiction] = None

    @property
    def consistent(self) -> bool:
        return self.contradiction is None


class _Propagator:
    def __init__(self, graph: OrthGraph, assignment: dict, steps: list, rng: Optional[random.Random]):
        self.g = graph
        self.assignment = assignment
        self.steps = steps
        self.rng = rng
        self.queue: list[int] = []

    def _clash(self, ray: int) -> Optional[Contradiction]:
        col = self.assignment[ray]
        if col is Colour.GREEN:
            for n in self._order(self.g.adjacency[ray]):
                if self.assignment.get(n) is Colour.GREEN:
                    return Contradiction("green-edge", tuple(sorted((ray, n))))
        else:
            for t in self._order(self.g.triples_of[ray]):
                if all(self.assignment.get(r) is Colour.RED for r in t):
                    return Contradiction("red-triple", t)
        return None

    def _order(self, items):
        if self.rng is None:
            return items
        items = list(items)
        self.rng.shuffle(items)
        return items

    def assign(self, ray: int, colour: Colour, rule: Rule, antecedents=()) -> Optional[Contradiction]:
        self.assignment[ray] = colour
        self.steps.append(DeductionStep(ray, colour, rule, tuple(antecedents)))
        self.queue.append(ray)
        return self._clash(ray)

    def _next_index(self) -> int:
        # red rays first: completing triples before spreading red from greens
        for i, r in enumerate(self.queue):
            if self.assignment[r] is Colour.RED:
                return i
        return 0

    def run(self) -> Optional[Contradiction]:
        g, asg = self.g, self.assignment
        while self.queue:
            if self.rng is None:
                ray = self.queue.pop(self._next_index())
            else:
                ray = self.queue.pop(self.rng.randrange(len(self.queue)))
            if asg[ray] is Colour.GREEN:
                for n in self._order(g.adjacency[ray]):
                    if n not in asg:
                        bad = self.assign(n, Colour.RED, Rule.ORTHO_TO_GREEN, (ray,))
                        if bad:
                            return bad
            else:
                for t in self._order(g.triples_of[ray]):
                    a, b = (r for r in t if r != ray)
                    for other, third in ((a, b), (b, a)):
                        if asg.get(other) is Colour.RED and third not in asg:
                            bad = self.assign(third, Colour.GREEN, Rule.COMPLETE_TRIPLE, (ray, other))
                            if bad:
                                return bad
        return None


def _normalise(partial: Optional[Mapping]) -> dict[int, Colour]:
    return {int(k): Colour(v) for k, v in sorted((partial or {}).items())}


def propagate(
    graph: OrthGraph,
    partial: Optional[Mapping[int, Colour]] = None,
    rng: Optional[random.Random] = None,
) -> Propagation:
    """Close ``partial`` under the forcing rules.

    Each entry of ``partial`` is logged as an ``Assumed`` step (in index
    order) before propagation starts.  Passing ``rng`` randomises the
    processing order; the resulting assignment is the same either way.
    """
    assignment: dict[int, Colour] = {}
    steps: list[DeductionStep] = []
    prop = _Propagator(graph, assignment, steps, rng)
    for ray, colour in _normalise(partial).items():
        bad = prop.assign(ray, colour, Rule.ASSUMED)
        if bad:
            return Propagation(assignment, steps, bad)
    bad = prop.run()
    return Propagation(assignment, steps, bad)


def _extend(graph: OrthGraph, assignment: dict, ray: int, colour: Colour) -> Propagation:
    asg = dict(assignment)
    steps: list[DeductionStep] = []
    prop = _Propagator(graph, asg, steps, None)
    bad = prop.assign(ray, colour, Rule.BRANCH)
    if bad is None:
        bad = prop.run()
    return Propagation(asg, steps, bad)


class _Found(Exception):
    def __init__(self, assignment):
        self.assignment = assignment


def _total(graph: OrthGraph, asg: dict) -> tuple[Colour, ...]:
    return tuple(asg[i] for i in range(len(graph)))


def search(graph: OrthGraph, initial: Optional[Mapping[int, Colour]] = None) -> Certificate:
    """Decide colourability by splitting on the lowest uncoloured ray.

    Green is tried before red; each branch is propagated to a fixed point and
    closed as soon as a contradiction appears.
    """
    n = len(graph)
    counter = {"splits": 0, "leaves": 0, "steps": 0}

    def explore(prop: Propagation) -> SearchNode:
        counter["steps"] += len(prop.steps)
        if prop.contradiction is not None:
            counter["leaves"] += 1
            return SearchNode(tuple(prop.steps), contradiction=prop.contradiction)
        free = next((i for i in range(n) if i not in prop.assignment), None)
        if free is None:
            raise _Found(prop.assignment)
        counter["splits"] += 1
        green = explore(_extend(graph, prop.assignment, free, Colour.GREEN))
        red = explore(_extend(graph, prop.assignment, free, Colour.RED))
        return SearchNode(tuple(prop.steps), split=free, green=green, red=red)

    root = propagate(graph, initial)
    try:
        tree = explore(root)
    except _Found as found:
        return Certificate("colourable", graph.rays, assignment=_total(graph, found.assignment), stats=dict(counter))
    return Certificate("uncolourable", graph.rays, tree=tree, stats=dict(counter))


def greedy(graph: OrthGraph, initial: Optional[Mapping[int, Colour]] = None) -> Certificate:
    """Propagate from ``initial`` without branching."""
    prop = propagate(graph, initial)
    stats = {"splits": 0, "leaves": 1 if prop.contradiction else 0, "steps": len(prop.steps)}
    if prop.contradiction is not None:
        return Certificate("uncolourable", graph.rays, tree=SearchNode(tuple(prop.steps), prop.contradiction), stats=stats)
    if len(prop.assignment) == len(graph):
        return Certificate("colourable", graph.rays, assignment=_total(graph, prop.assignment), stats=stats)
    return Certificate("inconclusive", graph.rays, tree=SearchNode(tuple(prop.steps)), stats=stats)


WLOG_PRESETS = ("peres-wlog",)


def preset_assignment(graph: OrthGraph, name: str) -> dict[int, Colour]:
    """Named initial colourings, mapped onto ``graph``'s ray indices."""
    from .vectors import PERES_WLOG, parse_peres

    if name != "peres-wlog":
        raise KeyError(f"unknown preset {name!r}; known: {', '.join(WLOG_PRESETS)}")
    out = {}
    for short, col in PERES_WLOG:
        idx = graph.index_of(parse_peres(short))
        if idx is None:
            raise ValueError(f"preset ray {short} is not in the graph")
        out[idx] = Colour(col)
    return out
