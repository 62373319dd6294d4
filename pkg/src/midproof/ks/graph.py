"""Orthogonality graph of a finite ray set."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Optional, Sequence

from .vectors import Ray, Vec3, canonical, dot, is_zero_vec, same_ray


class GraphInputError(ValueError):
    pass


@dataclass(frozen=True)
class OrthGraph:
    rays: tuple[Ray, ...]
    edges: frozenset[tuple[int, int]]
    triples: frozenset[tuple[int, int, int]]
    adjacency: tuple[tuple[int, ...], ...] = field(repr=False, compare=False)
    triples_of: tuple[tuple[tuple[int, int, int], ...], ...] = field(repr=False, compare=False)

    def __len__(self) -> int:
        return len(self.rays)

    def index_of(self, v: Vec3) -> Optional[int]:
        c = canonical(v)
        for i, r in enumerate(self.rays):
            if r.representative == c:
                return i
        return None

    def is_edge(self, i: int, j: int) -> bool:
        return (min(i, j), max(i, j)) in self.edges

    def subgraph(self, indices: Sequence[int]) -> "OrthGraph":
        rays = [self.rays[i] for i in indices]
        return build_graph([r.representative for r in rays], [r.label for r in rays])


def build_graph(vectors: Sequence[Vec3], labels: Optional[Sequence[Optional[str]]] = None) -> OrthGraph:
    """Canonicalise rays, reject zero and proportional inputs, find edges and triples."""
    if labels is None:
        labels = [None] * len(vectors)
    rays: list[Ray] = []
    for i, v in enumerate(vectors):
        if is_zero_vec(v):
            raise GraphInputError(f"input {i} ({labels[i] or v}) is the zero vector")
        for j in range(i):
            if same_ray(vectors[j], v):
                raise GraphInputError(
                    f"inputs {j} ({labels[j] or vectors[j]}) and {i} ({labels[i] or v}) "
                    "span the same ray"
                )
        rays.append(Ray.of(v, labels[i]))

    n = len(rays)
    adj: list[list[int]] = [[] for _ in range(n)]
    edges = set()
    for i, j in combinations(range(n), 2):
        if dot(rays[i].representative, rays[j].representative).is_zero():
            edges.add((i, j))
            adj[i].append(j)
            adj[j].append(i)
    triples = set()
    for i, j in sorted(edges):
        for k in adj[j]:
            if k > j and (i, k) in edges:
                triples.add((i, j, k))
    per_ray: list[list[tuple[int, int, int]]] = [[] for _ in range(n)]
    for t in sorted(triples):
        for r in t:
            per_ray[r].append(t)
    return OrthGraph(
        rays=tuple(rays),
        edges=frozenset(edges),
        triples=frozenset(triples),
        adjacency=tuple(tuple(a) for a in adj),
        triples_of=tuple(tuple(t) for t in per_ray),
    )
