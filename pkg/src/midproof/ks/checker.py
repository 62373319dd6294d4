"""Independent replay of colouring certificates.

Nothing here reuses the solver: orthogonality is recomputed from the ray
vectors and every recorded step is re-justified from the colours known at
that point of its branch.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Mapping, Optional

from .certificate import Certificate, Colour, Rule, SearchNode
from .graph import OrthGraph


@dataclass(frozen=True)
class CheckReport:
    ok: bool
    message: str
    assumptions: tuple[tuple[int, str], ...] = ()

    def __bool__(self) -> bool:
        return self.ok


class _Invalid(Exception):
    pass


def _orthogonal(u, v) -> bool:
    a = b = 0
    for x, y in zip(u, v):
        a += x.a * y.a + 2 * x.b * y.b
        b += x.a * y.b + x.b * y.a
    return a == 0 and b == 0


def check_certificate(
    graph: OrthGraph,
    cert: Certificate,
    initial: Optional[Mapping[int, Colour]] = None,
) -> CheckReport:
    """Validate ``cert`` against ``graph``.

    If ``initial`` is given, the certificate's ``Assumed`` steps must be
    exactly that colouring; otherwise the assumptions are reported back so
    the caller can see what the verdict is conditional on.
    """
    try:
        return _check(graph, cert, initial)
    except _Invalid as exc:
        return CheckReport(False, str(exc))


def _check(graph, cert, initial) -> CheckReport:
    vecs = [r.representative for r in graph.rays]
    if len(cert.rays) != len(vecs) or any(r.representative != v for r, v in zip(cert.rays, vecs)):
        raise _Invalid("certificate rays do not match the graph")
    n = len(vecs)
    orth = {(i, j) for i, j in combinations(range(n), 2) if _orthogonal(vecs[i], vecs[j])}
    triples = [t for t in combinations(range(n), 3) if {(t[0], t[1]), (t[0], t[2]), (t[1], t[2])} <= orth]

    def adjacent(i, j):
        return (min(i, j), max(i, j)) in orth

    if cert.verdict == "colourable":
        asg = cert.assignment
        if asg is None or len(asg) != n:
            raise _Invalid("colourable certificate needs a total assignment")
        for i, j in sorted(orth):
            if asg[i] is Colour.GREEN and asg[j] is Colour.GREEN:
                raise _Invalid(f"rays {i} and {j} are orthogonal and both green")
        for t in triples:
            greens = sum(asg[r] is Colour.GREEN for r in t)
            if greens != 1:
                raise _Invalid(f"triple {t} has {greens} green rays")
        return CheckReport(True, "valid colouring")

    if cert.verdict not in ("uncolourable", "inconclusive") or cert.tree is None:
        raise _Invalid(f"unsupported verdict {cert.verdict!r} or missing tree")

    assumed: dict[int, Colour] = {}
    for s in cert.tree.steps:
        if s.rule is Rule.ASSUMED:
            assumed[s.ray] = s.colour
    if initial is not None:
        want = {int(k): Colour(v) for k, v in initial.items()}
        if want != assumed:
            raise _Invalid("assumed colours differ from the supplied initial colouring")
    triple_set = set(triples)

    def replay(node: SearchNode, state: dict, path: str, root: bool) -> None:
        state = dict(state)
        for pos, s in enumerate(node.steps):
            where = f"{path} step {pos}"
            if not 0 <= s.ray < n:
                raise _Invalid(f"{where}: ray {s.ray} out of range")
            if s.ray in state:
                raise _Invalid(f"{where}: ray {s.ray} already coloured")
            if s.rule is Rule.ASSUMED:
                if not root or any(p.rule is not Rule.ASSUMED for p in node.steps[:pos]):
                    raise _Invalid(f"{where}: assumption after deductions began")
            elif s.rule is Rule.BRANCH:
                if root or pos != 0:
                    raise _Invalid(f"{where}: branch step outside a child's first position")
            elif s.rule is Rule.ORTHO_TO_GREEN:
                if s.colour is not Colour.RED or len(s.antecedents) != 1:
                    raise _Invalid(f"{where}: malformed ortho-to-green step")
                (a,) = s.antecedents
                if state.get(a) is not Colour.GREEN or not adjacent(a, s.ray):
                    raise _Invalid(f"{where}: ray {a} is not a green neighbour of {s.ray}")
            elif s.rule is Rule.COMPLETE_TRIPLE:
                if s.colour is not Colour.GREEN or len(s.antecedents) != 2:
                    raise _Invalid(f"{where}: malformed complete-triple step")
                a, b = s.antecedents
                if state.get(a) is not Colour.RED or state.get(b) is not Colour.RED:
                    raise _Invalid(f"{where}: antecedents {a}, {b} are not both red")
                if tuple(sorted((a, b, s.ray))) not in triple_set:
                    raise _Invalid(f"{where}: {{{s.ray}, {a}, {b}}} is not a triple")
            state[s.ray] = s.colour

        if node.split is not None:
            if node.contradiction is not None:
                raise _Invalid(f"{path}: node has both a split and a contradiction")
            if node.split in state or not 0 <= node.split < n:
                raise _Invalid(f"{path}: split ray {node.split} is invalid or already coloured")
            for colour, child in ((Colour.GREEN, node.green), (Colour.RED, node.red)):
                if child is None or not child.steps:
                    raise _Invalid(f"{path}: missing {colour.value} branch")
                first = child.steps[0]
                if first.rule is not Rule.BRANCH or first.ray != node.split or first.colour is not colour:
                    raise _Invalid(f"{path}/{colour.value}: branch does not start by colouring ray {node.split} {colour.value}")
                replay(child, state, f"{path}/{colour.value}", False)
            return

        c = node.contradiction
        if c is None:
            if cert.verdict == "uncolourable":
                raise _Invalid(f"{path}: leaf without a contradiction")
            return
        if c.kind == "green-edge":
            if len(c.rays) != 2 or not adjacent(*c.rays):
                raise _Invalid(f"{path}: witness {c.rays} is not an orthogonal pair")
            if any(state.get(r) is not Colour.GREEN for r in c.rays):
                raise _Invalid(f"{path}: witness {c.rays} not both green")
        elif c.kind == "red-triple":
            if tuple(sorted(c.rays)) not in triple_set:
                raise _Invalid(f"{path}: witness {c.rays} is not a triple")
            if any(state.get(r) is not Colour.RED for r in c.rays):
                raise _Invalid(f"{path}: witness {c.rays} not all red")
        else:
            raise _Invalid(f"{path}: unknown contradiction kind {c.kind!r}")

    replay(cert.tree, {}, "root", True)
    assumptions = tuple(sorted((k, v.value) for k, v in assumed.items()))
    if cert.verdict == "inconclusive":
        return CheckReport(True, "steps valid; no verdict claimed", assumptions)
    msg = "every branch ends in a contradiction"
    if assumptions:
        msg += f" (given {len(assumptions)} assumed colours)"
    return CheckReport(True, msg, assumptions)
