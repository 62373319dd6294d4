"""Render certificates as text, JSON or Graphviz DOT."""

from __future__ import annotations

from itertools import combinations

from .certificate import Certificate, Colour, Rule, SearchNode


def emit(cert: Certificate, fmt: str = "text") -> str:
    if fmt == "json":
        return cert.dumps()
    if fmt == "text":
        return to_text(cert)
    if fmt == "dot":
        return to_dot(cert)
    raise ValueError(f"unknown format {fmt!r}")


def _name(cert: Certificate, i: int) -> str:
    return cert.rays[i].name


def _step_line(cert: Certificate, s) -> str:
    line = f"{_name(cert, s.ray)} := {s.colour.value} [{s.rule.value}"
    if s.antecedents:
        line += ": " + ", ".join(_name(cert, a) for a in s.antecedents)
    return line + "]"


def _witness_line(cert: Certificate, c) -> str:
    names = ", ".join(_name(cert, r) for r in c.rays)
    if c.kind == "green-edge":
        return f"CONTRADICTION: orthogonal rays {names} are both green"
    return f"CONTRADICTION: triple {names} is all red"


def to_text(cert: Certificate) -> str:
    out = [
        f"verdict: {cert.verdict}",
        f"rays: {len(cert.rays)}",
    ]
    for k, v in sorted(cert.stats.items()):
        out.append(f"{k}: {v}")
    if cert.assignment is not None:
        out.append("assignment:")
        for i, c in enumerate(cert.assignment):
            out.append(f"  {_name(cert, i)}: {c.value}")
    if cert.tree is not None:
        out.append("trace:")

        def walk(node: SearchNode, depth: int) -> None:
            pad = "  " * (depth + 1)
            for s in node.steps:
                out.append(pad + _step_line(cert, s))
            if node.contradiction is not None:
                out.append(pad + _witness_line(cert, node.contradiction))
            if node.split is not None:
                out.append(pad + f"split on {_name(cert, node.split)}")
                walk(node.green, depth + 1)
                walk(node.red, depth + 1)

        walk(cert.tree, 0)
    return "\n".join(out) + "\n"


def _q(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def _orth(u, v) -> bool:
    s = u[0] * v[0] + u[1] * v[1] + u[2] * v[2]
    return s.is_zero()


def _deduction_dot(cert: Certificate, node: SearchNode) -> list[str]:
    # boxes are green, ovals red; assumed colours light fill, forced ones dark
    lines = []
    used = {}
    for s in node.steps:
        used[s.ray] = s
    for r, s in used.items():
        shape = "box" if s.colour is Colour.GREEN else "ellipse"
        fill = {"green": "#b8e6b8", "red": "#f2b8b8"}[s.colour.value]
        if s.rule not in (Rule.ASSUMED, Rule.BRANCH):
            fill = {"green": "#3c9a3c", "red": "#c04848"}[s.colour.value]
        lines.append(f"  r{r} [label={_q(_name(cert, r))}, shape={shape}, style=filled, fillcolor={_q(fill)}];")
    witness = set()
    if node.contradiction is not None and node.contradiction.kind == "green-edge":
        witness.add(tuple(sorted(node.contradiction.rays)))
    elif node.contradiction is not None:
        witness.update(combinations(sorted(node.contradiction.rays), 2))
    vecs = {r: cert.rays[r].representative for r in used}
    for a, b in combinations(sorted(used), 2):
        if (a, b) in witness:
            lines.append(f"  r{a} -> r{b} [dir=none, style=dotted, penwidth=2, color=black];")
        elif _orth(vecs[a], vecs[b]):
            lines.append(f"  r{a} -> r{b} [dir=none, color=gray70];")
    for order, s in enumerate(node.steps):
        for a in s.antecedents:
            lines.append(f"  r{a} -> r{s.ray} [label={_q(str(order))}, color=blue];")
    return lines


def to_dot(cert: Certificate) -> str:
    out = ["digraph certificate {", f"  label={_q('verdict: ' + cert.verdict)};"]
    if cert.assignment is not None:
        for i, c in enumerate(cert.assignment):
            shape = "box" if c is Colour.GREEN else "ellipse"
            out.append(f"  r{i} [label={_q(_name(cert, i))}, shape={shape}];")
        for a, b in combinations(range(len(cert.rays)), 2):
            if _orth(cert.rays[a].representative, cert.rays[b].representative):
                out.append(f"  r{a} -> r{b} [dir=none];")
    elif cert.tree is not None and cert.tree.split is None:
        out.extend(_deduction_dot(cert, cert.tree))
    elif cert.tree is not None:
        # search tree: inner nodes are splits, leaves are contradictions
        counter = [0]

        def walk(node: SearchNode) -> str:
            nid = f"n{counter[0]}"
            counter[0] += 1
            if node.split is None:
                c = node.contradiction
                kind = "green pair" if c.kind == "green-edge" else "red triple"
                label = f"{kind}: " + " ".join(_name(cert, r) for r in c.rays)
                out.append(f"  {nid} [label={_q(label)}, shape=plaintext];")
                return nid
            out.append(f"  {nid} [label={_q('split ' + _name(cert, node.split))}, shape=diamond];")
            g = walk(node.green)
            r = walk(node.red)
            out.append(f"  {nid} -> {g} [label=\"green\"];")
            out.append(f"  {nid} -> {r} [label=\"red\"];")
            return nid

        walk(cert.tree)
    out.append("}")
    return "\n".join(out) + "\n"
