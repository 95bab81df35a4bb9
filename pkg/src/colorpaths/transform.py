"""Conversions between 3-colorings, triple sequences and labeled bipartite
graphs."""

from __future__ import annotations

from .core import LabeledBipartiteGraph, TournamentColoring, TripleSequence, ViolationError
from .paths import avoidance_records
from .verify import check_triple_sequence


def coloring_to_triples(coloring: TournamentColoring) -> TripleSequence:
    """Label each vertex with its avoidance record.

    The result is always a valid sequence; its alphabet is the largest record
    entry, i.e. the longest 1-color-avoiding path.
    """
    if coloring.num_colors != 3:
        raise ValueError("only 3-colorings correspond to triple sequences")
    recs = avoidance_records(coloring)
    return TripleSequence(max(max(t) for t in recs), recs)


def _require_valid(seq: TripleSequence) -> None:
    bad = check_triple_sequence(seq)
    if bad is not None:
        raise ViolationError(bad, f"not a valid triple sequence: pair ({bad.details['i']}, {bad.details['j']})")


def edge_color(p, q) -> int:
    """Color of ``p -> q``: the coordinate in which ``p`` is not strictly
    below ``q``, or 1 when all three increase."""
    for c in range(3):
        if not p[c] < q[c]:
            return c + 1
    return 1


def triples_to_coloring(seq: TripleSequence) -> TournamentColoring:
    """Color edge ``(i, j)`` by the coordinate that fails to increase.

    Raises :class:`ViolationError` carrying a ``pair`` certificate when the
    sequence is invalid.
    """
    _require_valid(seq)
    ts = seq.triples
    return TournamentColoring.from_function(len(ts), lambda i, j: edge_color(ts[i - 1], ts[j - 1]), 3)


def triples_to_bipartite(seq: TripleSequence) -> LabeledBipartiteGraph:
    """Edge ``a_x b_y`` labeled ``z`` for every triple ``(x, y, z)``."""
    _require_valid(seq)
    seen = set()
    for x, y, _ in seq.triples:
        if (x, y) in seen:
            raise AssertionError(f"valid sequence repeats projection ({x}, {y})")
        seen.add((x, y))
    return LabeledBipartiteGraph(seq.n, seq.n, seq.n, seq.triples)
