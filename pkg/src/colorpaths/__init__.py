"""Colored transitive tournaments, triple sequences and separated matchings.

Exact small-instance solvers, certificate-producing verifiers and the
standard constructions, with a compiled kernel for the hot loops.
"""

from .core import (
    LabeledBipartiteGraph,
    MajorityTournamentSpec,
    ParseError,
    SearchResult,
    Tournament,
    TournamentColoring,
    TripleSequence,
    Violation,
    ViolationError,
    parse,
    serialize,
)
from .kernels import BACKEND

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "LabeledBipartiteGraph",
    "MajorityTournamentSpec",
    "ParseError",
    "SearchResult",
    "Tournament",
    "TournamentColoring",
    "TripleSequence",
    "Violation",
    "ViolationError",
    "parse",
    "serialize",
]
