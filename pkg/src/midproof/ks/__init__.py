"""Kochen-Specker colouring search over rays with Z[sqrt(2)] entries."""

from .certificate import Certificate, Colour, Contradiction, DeductionStep, Rule, SearchNode
from .checker import CheckReport, check_certificate
from .emit import emit
from .graph import GraphInputError, OrthGraph, build_graph
from .solver import PartialColoring, Propagation, greedy, preset_assignment, propagate, search
from .vectors import (
    PERES33_SHORTHAND,
    PERES_WLOG,
    Ray,
    Vec3,
    VectorParseError,
    canonical,
    parse_peres,
    parse_vector_file,
    peres33,
)


def peres_graph() -> OrthGraph:
    return build_graph(peres33(), list(PERES33_SHORTHAND))


__all__ = [
    "Certificate", "Colour", "Contradiction", "DeductionStep", "Rule", "SearchNode",
    "CheckReport", "check_certificate", "emit", "GraphInputError", "OrthGraph",
    "build_graph", "PartialColoring", "Propagation", "greedy", "preset_assignment",
    "propagate", "search", "PERES33_SHORTHAND", "PERES_WLOG", "Ray", "Vec3",
    "VectorParseError", "canonical", "parse_peres", "parse_vector_file", "peres33",
    "peres_graph",
]
