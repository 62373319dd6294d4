"""Flagship computations with golden outcomes."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .chebyshev import prove_mult_formula
from .ks import PERES33_SHORTHAND, build_graph, check_certificate, peres33, search
from .ks.vectors import Vec3
from .unitfrac import UnitFractionProblem, enumerate_solutions

GOLDEN = {
    "unitfrac": [(2, 3, 6), (2, 4, 4), (3, 3, 3)],
    "ks": {"verdict": "uncolourable", "rays": 33, "edges": 72, "triples": 16},
    "chebyshev": {"member": True},
}


@dataclass
class LegResult:
    name: str
    passed: bool
    outcome: dict
    deviations: list[str] = field(default_factory=list)
    seconds: float = 0.0

    def to_json(self, timings: bool = False) -> dict:
        d = {"name": self.name, "passed": self.passed, "outcome": self.outcome, "deviations": self.deviations}
        if timings:
            d["seconds"] = round(self.seconds, 4)
        return d


def _unitfrac_leg() -> LegResult:
    sols = enumerate_solutions(UnitFractionProblem(3, Fraction(1), 2))
    dev = [] if sols == GOLDEN["unitfrac"] else [f"expected {GOLDEN['unitfrac']}, got {sols}"]
    return LegResult("unitfrac", not dev, {"solutions": [list(t) for t in sols]}, dev)


def _ks_leg(vectors: Optional[Sequence[Vec3]], labels) -> LegResult:
    if vectors is None:
        vectors, labels = peres33(), list(PERES33_SHORTHAND)
    g = build_graph(vectors, labels)
    cert = search(g)
    report = check_certificate(g, cert)
    outcome = {
        "verdict": cert.verdict,
        "rays": len(g),
        "edges": len(g.edges),
        "triples": len(g.triples),
        "splits": cert.splits(),
        "certificate_valid": report.ok,
    }
    dev = [f"{k}: expected {v}, got {outcome[k]}" for k, v in GOLDEN["ks"].items() if outcome[k] != v]
    if not report.ok:
        dev.append(f"certificate rejected: {report.message}")
    return LegResult("ks", not dev, outcome, dev)


def _chebyshev_leg() -> LegResult:
    member, witness = prove_mult_formula()
    outcome = {"member": member, "witness": [c.to_str() for c in witness.cofactors] if witness else None}
    dev = [] if member else ["goal not in the ideal"]
    return LegResult("chebyshev", member, outcome, dev)


def self_test(ks_vectors: Optional[Sequence[Vec3]] = None, ks_labels=None) -> list[LegResult]:
    legs = [
        ("unitfrac", _unitfrac_leg),
        ("ks", lambda: _ks_leg(ks_vectors, ks_labels)),
        ("chebyshev", _chebyshev_leg),
    ]
    results = []
    for name, fn in legs:
        t0 = time.perf_counter()
        try:
            r = fn()
        except Exception as exc:  # a crashing leg is reported, not raised
            r = LegResult(name, False, {}, [f"error: {exc}"])
        r.seconds = time.perf_counter() - t0
        results.append(r)
    return results
