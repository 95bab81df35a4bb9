"""Explicit constructions: lexicographic cube colorings, the biclique union
of separated matchings, and k-majority tournaments from permutation families.
"""

from __future__ import annotations

import itertools
import math
import os

import numpy as np

from .core import LabeledBipartiteGraph, MajorityTournamentSpec, Tournament, TournamentColoring, TripleSequence
from .transform import coloring_to_triples

MAX_CUBE_VERTICES = 20_000
DEFAULT_MAX_PAIRS = 10**6
MAX_PAIRS_ENV = "COLORPATHS_MAX_PAIRS"


class SizeLimitError(ValueError):
    pass


def cube_coloring(m: int, r: int = 3) -> TournamentColoring:
    """Vertices are the r-tuples over ``1..m`` in lexicographic order; edge
    color is the leftmost coordinate where the endpoints differ."""
    if m < 1 or r < 2:
        raise ValueError("need m >= 1 and r >= 2")
    N = m ** r
    if N > MAX_CUBE_VERTICES:
        raise SizeLimitError(f"m^r = {N} exceeds {MAX_CUBE_VERTICES} vertices")
    tuples = list(itertools.product(range(m), repeat=r))

    def color(i: int, j: int) -> int:
        p, q = tuples[i - 1], tuples[j - 1]
        return next(c for c in range(r) if p[c] != q[c]) + 1

    return TournamentColoring.from_function(N, color, r)


def cube_triple_sequence(m: int) -> TripleSequence:
    """Avoidance records of the 3-dimensional cube coloring: m^3 triples over
    an alphabet of size m^2."""
    return coloring_to_triples(cube_coloring(m, 3))


def biclique_union(n: int) -> LabeledBipartiteGraph:
    """``sqrt(n)`` disjoint copies of ``K_{s,s}`` (``s = sqrt(n)``), each
    carrying all n labels once.

    Component c occupies ``a_{cs+1..cs+s}`` and ``b_{cs+1..cs+s}``; its edges
    are labeled 1..n in row-major order.
    """
    s = math.isqrt(n) if n >= 0 else -1
    if n < 1 or s * s != n:
        raise ValueError(f"n must be a positive perfect square, got {n}")
    edges = []
    for c in range(s):
        label = 1
        for x in range(s):
            for y in range(s):
                edges.append((c * s + x + 1, c * s + y + 1, label))
                label += 1
    return LabeledBipartiteGraph(n, n, n, edges)


def max_pairs() -> int:
    raw = os.environ.get(MAX_PAIRS_ENV)
    return int(raw) if raw else DEFAULT_MAX_PAIRS


def majority_vertices(spec: MajorityTournamentSpec) -> list[tuple[int, ...]]:
    """Vertex i (1-based) is the i-th k-tuple over ``1..n`` in lex order."""
    return list(itertools.product(range(1, spec.n + 1), repeat=spec.k))


def majority_tournament(spec: MajorityTournamentSpec, limit: int | None = None) -> Tournament:
    """x -> y iff a strict majority of the k lexicographic orders (order i
    reads coordinates in the sequence ``perms[i]``) put x before y."""
    N = spec.n ** spec.k
    limit = max_pairs() if limit is None else limit
    if N * (N - 1) // 2 > limit:
        raise SizeLimitError(f"{N} vertices need {N * (N - 1) // 2} comparisons, cap is {limit}")
    verts = np.array(majority_vertices(spec), dtype=np.int64).reshape(N, spec.k)
    votes = np.zeros((N, N), dtype=np.int64)
    for perm in spec.perms:
        keys = verts[:, [p - 1 for p in perm]]
        # rank under this order; tuples are distinct so ranks are a permutation
        order = np.lexsort(keys.T[::-1])
        rank = np.empty(N, dtype=np.int64)
        rank[order] = np.arange(N)
        votes += rank[:, None] < rank[None, :]
    beats = votes * 2 > spec.k
    return Tournament(N, beats.tolist())
