"""Certificate data model for colouring searches, with a lossless JSON form."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Optional

from ..exact_arith import format_quadint, parse_quadint
from .vectors import Ray

SCHEMA_VERSION = 1


class Colour(str, Enum):
    GREEN = "green"
    RED = "red"

    @property
    def other(self) -> "Colour":
        return Colour.RED if self is Colour.GREEN else Colour.GREEN


class Rule(str, Enum):
    ASSUMED = "assumed"
    BRANCH = "branch"
    ORTHO_TO_GREEN = "ortho-to-green"
    COMPLETE_TRIPLE = "complete-triple"


@dataclass(frozen=True)
class DeductionStep:
    ray: int
    colour: Colour
    rule: Rule
    antecedents: tuple[int, ...] = ()

    def to_json(self) -> dict:
        return {
            "ray": self.ray,
            "colour": self.colour.value,
            "rule": self.rule.value,
            "antecedents": list(self.antecedents),
        }

    @classmethod
    def from_json(cls, d: dict) -> "DeductionStep":
        return cls(int(d["ray"]), Colour(d["colour"]), Rule(d["rule"]), tuple(int(a) for a in d["antecedents"]))


@dataclass(frozen=True)
class Contradiction:
    """A doubly-green edge (``kind='green-edge'``) or an all-red triple."""

    kind: str
    rays: tuple[int, ...]

    def to_json(self) -> dict:
        return {"kind": self.kind, "rays": list(self.rays)}

    @classmethod
    def from_json(cls, d: dict) -> "Contradiction":
        return cls(d["kind"], tuple(int(r) for r in d["rays"]))


@dataclass(frozen=True)
class SearchNode:
    """One node of the branch tree.

    ``steps`` are the deductions made on entering the node (a child starts
    with its ``Branch`` step).  A leaf carries a contradiction; an inner node
    names the ray it splits on and has a subtree for each colour.
    """

    steps: tuple[DeductionStep, ...]
    contradiction: Optional[Contradiction] = None
    split: Optional[int] = None
    green: Optional["SearchNode"] = None
    red: Optional["SearchNode"] = None

    @property
    def is_leaf(self) -> bool:
        return self.split is None

    def to_json(self) -> dict:
        d: dict[str, Any] = {"steps": [s.to_json() for s in self.steps]}
        if self.contradiction is not None:
            d["contradiction"] = self.contradiction.to_json()
        if self.split is not None:
            d["split"] = self.split
            d["green"] = self.green.to_json()
            d["red"] = self.red.to_json()
        return d

    @classmethod
    def from_json(cls, d: dict) -> "SearchNode":
        return cls(
            steps=tuple(DeductionStep.from_json(s) for s in d["steps"]),
            contradiction=Contradiction.from_json(d["contradiction"]) if "contradiction" in d else None,
            split=d.get("split"),
            green=cls.from_json(d["green"]) if "green" in d else None,
            red=cls.from_json(d["red"]) if "red" in d else None,
        )

    def iter_nodes(self):
        stack = [self]
        while stack:
            node = stack.pop()
            yield node
            if node.split is not None:
                stack.append(node.red)
                stack.append(node.green)


@dataclass(frozen=True)
class Certificate:
    """``verdict`` is ``colourable``, ``uncolourable`` or ``inconclusive``.

    Colourable certificates carry a total ``assignment``; the other two carry
    a ``tree`` (an inconclusive one is a single node whose propagation stopped
    without a contradiction, only produced by greedy mode).
    """

    verdict: str
    rays: tuple[Ray, ...]
    assignment: Optional[tuple[Colour, ...]] = None
    tree: Optional[SearchNode] = None
    stats: dict = field(default_factory=dict, compare=False)

    @property
    def colourable(self) -> bool:
        return self.verdict == "colourable"

    def splits(self) -> int:
        if self.tree is None:
            return 0
        return sum(1 for n in self.tree.iter_nodes() if n.split is not None)

    def leaves(self) -> list[SearchNode]:
        if self.tree is None:
            return []
        return [n for n in self.tree.iter_nodes() if n.split is None]

    def to_json(self) -> dict:
        d: dict[str, Any] = {
            "schema": SCHEMA_VERSION,
            "verdict": self.verdict,
            "rays": [
                {
                    "index": i,
                    "label": r.label,
                    "vector": [format_quadint(c) for c in r.representative],
                }
                for i, r in enumerate(self.rays)
            ],
        }
        if self.assignment is not None:
            d["assignment"] = [c.value for c in self.assignment]
        if self.tree is not None:
            d["tree"] = self.tree.to_json()
        d["stats"] = dict(sorted(self.stats.items()))
        return d

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=1, sort_keys=False) + "\n"

    @classmethod
    def from_json(cls, d: dict) -> "Certificate":
        rays = tuple(
            Ray(tuple(parse_quadint(c) for c in r["vector"]), r.get("label"))  # type: ignore[arg-type]
            for r in d["rays"]
        )
        return cls(
            verdict=d["verdict"],
            rays=rays,
            assignment=tuple(Colour(c) for c in d["assignment"]) if "assignment" in d else None,
            tree=SearchNode.from_json(d["tree"]) if "tree" in d else None,
            stats=dict(d.get("stats", {})),
        )

    @classmethod
    def loads(cls, text: str) -> "Certificate":
        return cls.from_json(json.loads(text))
