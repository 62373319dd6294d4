"""Reference procedures used only by the tests.

They are deliberately naive and share no code with the engines they check.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

import sympy as sp


def sympy_vector(shorthand: str) -> sp.Matrix:
    out = []
    i = 0
    while i < len(shorthand):
        neg = shorthand[i] == "!"
        i += neg
        v = {"0": 0, "1": 1, "2": sp.sqrt(2)}[shorthand[i]]
        i += 1
        out.append(-v if neg else v)
    return sp.Matrix(out)


def sympy_orthogonality(shorthands):
    vs = [sympy_vector(s) for s in shorthands]
    n = len(vs)
    edges = {(i, j) for i, j in itertools.combinations(range(n), 2) if sp.simplify(vs[i].dot(vs[j])) == 0}
    triples = {t for t in itertools.combinations(range(n), 3) if all(p in edges for p in itertools.combinations(t, 2))}
    return edges, triples


def exhaustive_colourable(n, edges, triples) -> bool:
    """Try all 2^n colourings; bit i set means ray i is green."""
    edges = list(edges)
    triples = list(triples)
    for mask in range(1 << n):
        if any(mask >> i & 1 and mask >> j & 1 for i, j in edges):
            continue
        if all(mask >> i & 1 or mask >> j & 1 or mask >> k & 1 for i, j, k in triples):
            return True
    return False


def backtrack_colourable(n, edges, triples) -> bool:
    """Plain DFS in index order, checking a constraint once its last ray is coloured."""
    by_last_edge = {k: [] for k in range(n)}
    for a, b in edges:
        by_last_edge[max(a, b)].append((a, b))
    by_last_triple = {k: [] for k in range(n)}
    for t in triples:
        by_last_triple[max(t)].append(t)
    col = [False] * n

    def ok(k):
        if any(col[a] and col[b] for a, b in by_last_edge[k]):
            return False
        return all(any(col[r] for r in t) for t in by_last_triple[k])

    def dfs(k):
        if k == n:
            return True
        for c in (True, False):
            col[k] = c
            if ok(k) and dfs(k + 1):
                return True
        return False

    return dfs(0)


def unit_fraction_triples(target: Fraction, lo: int, cap: int):
    return sorted(
        (a, b, c)
        for a in range(lo, cap + 1)
        for b in range(a, cap + 1)
        for c in range(b, cap + 1)
        if Fraction(1, a) + Fraction(1, b) + Fraction(1, c) == target
    )
