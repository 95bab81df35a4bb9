"""Decision procedures that return ``None`` for valid input or a
:class:`~colorpaths.core.Violation` certificate.

Scans run in a fixed order (labels ascending, edges in sorted order) so the
reported certificate is reproducible.  :func:`recheck` validates any
certificate against its input without reusing the scanning code.

Vertex names inside certificates are strings ``"a<i>"`` / ``"b<j>"``; edges
are ``[a, b, label]`` lists.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from typing import Any, Sequence

from .core import (
    LabeledBipartiteGraph,
    Tournament,
    TripleSequence,
    Violation,
    ViolationError,
)


def increases(p: Sequence[int], q: Sequence[int]) -> int:
    """Number of coordinates in which ``p`` is strictly below ``q``."""
    return sum(1 for a, b in zip(p, q) if a < b)


def precedes(p: Sequence[int], q: Sequence[int]) -> bool:
    """True iff ``p`` is strictly below ``q`` in at least two coordinates."""
    return increases(p, q) >= 2


# ---------------------------------------------------------------------------
# Triple sequences
# ---------------------------------------------------------------------------

def check_triple_sequence(seq: TripleSequence) -> Violation | None:
    """First pair ``i < j`` (lexicographically) with fewer than two strict
    increases from ``L_i`` to ``L_j``."""
    ts = seq.triples
    for i in range(len(ts)):
        a = ts[i]
        for j in range(i + 1, len(ts)):
            if not precedes(a, ts[j]):
                return Violation("pair", {"i": i + 1, "j": j + 1,
                                          "first": list(a), "second": list(ts[j])})
    return None


# ---------------------------------------------------------------------------
# Labeled bipartite graphs
# ---------------------------------------------------------------------------

def _edge(g: LabeledBipartiteGraph, a: int, b: int) -> list[int]:
    return [a, b, g.label_of[(a, b)]]


def _matching_violation(g: LabeledBipartiteGraph) -> Violation | None:
    for z in sorted(g.classes):
        seen_a: dict[int, tuple[int, int]] = {}
        seen_b: dict[int, tuple[int, int]] = {}
        for a, b in sorted(g.classes[z]):
            for side, v, seen in (("a", a, seen_a), ("b", b, seen_b)):
                if v in seen:
                    other = seen[v]
                    return Violation("matching", {
                        "label": z, "vertex": f"{side}{v}",
                        "edges": [[*other, z], [a, b, z]],
                    })
                seen[v] = (a, b)
    return None


def check_induced_matchings(g: LabeledBipartiteGraph) -> Violation | None:
    """Every label class must be a matching whose spanned vertices induce no
    other edge of the graph."""
    bad = _matching_violation(g)
    if bad is not None:
        return bad
    for z in sorted(g.classes):
        mate_a = {a: b for a, b in g.classes[z]}
        mate_b = {b: a for a, b in g.classes[z]}
        for a in sorted(mate_a):
            for b in sorted(g.left_adj[a]):
                if b in mate_b and mate_a[a] != b:
                    return Violation("induced", {
                        "label": z,
                        "edges": [[a, mate_a[a], z], [mate_b[b], b, z]],
                        "cross": _edge(g, a, b),
                    })
    return None


def check_ordered_matchings(g: LabeledBipartiteGraph) -> Violation | None:
    """Within each label, sorting edges by left endpoint must sort them
    strictly by right endpoint too."""
    for z in sorted(g.classes):
        es = sorted(g.classes[z])
        for (a1, b1), (a2, b2) in zip(es, es[1:]):
            if not (a1 < a2 and b1 < b2):
                return Violation("ordered", {"label": z, "edges": [[a1, b1, z], [a2, b2, z]]})
    return None


def check_sigma_free(g: LabeledBipartiteGraph) -> Violation | None:
    """Ordered matchings with no ``b_h, a_i, b_j, a_k, b_l`` pattern.

    The pattern: ``i < k``, ``h <= j <= l``, edges ``a_i b_h`` and ``a_k b_l``
    share a label, and ``a_i b_j``, ``a_k b_j`` are both edges.  Label classes
    are first required to be ordered matchings, since the pattern alone
    cannot see crossing pairs.
    """
    bad = check_ordered_matchings(g)
    if bad is not None:
        return bad
    adj = g.left_adj
    for z in sorted(g.classes):
        es = sorted(g.classes[z])
        for x in range(len(es)):
            i, h = es[x]
            for y in range(x + 1, len(es)):
                k, l = es[y]
                for j in sorted(adj[i] & adj[k]):
                    if h <= j <= l:
                        return Violation("sigma", {
                            "label": z,
                            "vertices": {"h": h, "i": i, "j": j, "k": k, "l": l},
                            "edges": [[i, h, z], [k, l, z], _edge(g, i, j), _edge(g, k, j)],
                        })
    return None


def _neighbors(g: LabeledBipartiteGraph, v: tuple[str, int]) -> list[tuple[str, int]]:
    side, idx = v
    if side == "a":
        return [("b", b) for b in sorted(g.left_adj.get(idx, ()))]
    return [("a", a) for a in sorted(g.right_adj.get(idx, ()))]


def check_l_separated(g: LabeledBipartiteGraph, l: int) -> Violation | None:
    """No walk of length at most ``l`` joins endpoints of two distinct edges
    carrying the same label.

    Label classes must be matchings; otherwise a ``matching`` certificate is
    returned.  For each labeled edge a breadth-first search from both of its
    endpoints, cut off at depth ``l``, looks for an endpoint of another edge
    of the same label.
    """
    if l < 1:
        raise ValueError("l must be a positive integer")
    bad = _matching_violation(g)
    if bad is not None:
        return bad
    for z in sorted(g.classes):
        es = sorted(g.classes[z])
        owner: dict[tuple[str, int], tuple[int, int]] = {}
        for a, b in es:
            owner[("a", a)] = (a, b)
            owner[("b", b)] = (a, b)
        for e in es:
            starts = [("a", e[0]), ("b", e[1])]
            parent: dict[tuple[str, int], tuple[str, int] | None] = {s: None for s in starts}
            queue = deque((s, 0) for s in starts)
            while queue:
                v, d = queue.popleft()
                f = owner.get(v)
                if f is not None and f != e:
                    path = []
                    u: tuple[str, int] | None = v
                    while u is not None:
                        path.append(f"{u[0]}{u[1]}")
                        u = parent[u]
                    path.reverse()
                    return Violation("separation", {
                        "label": z, "l": l, "t": len(path) - 1, "path": path,
                        "edges": [[e[0], e[1], z], [f[0], f[1], z]],
                    })
                if d == l:
                    continue
                for w in _neighbors(g, v):
                    if w not in parent:
                        parent[w] = v
                        queue.append((w, d + 1))
    return None


@dataclass(frozen=True)
class DegreeDiagnostic:
    """Counting check for 2-separated graphs: the sum of squared degrees is at
    most (number of vertices) x (number of labels)."""

    sum_sq: int
    bound: int
    passed: bool
    num_edges: int
    edge_bound: float

    @property
    def tight(self) -> bool:
        return self.sum_sq == self.bound


def degree_square_diagnostic(g: LabeledBipartiteGraph) -> DegreeDiagnostic:
    """Raises :class:`ViolationError` if ``g`` is not 2-separated."""
    bad = check_l_separated(g, 2)
    if bad is not None:
        raise ViolationError(bad, "degree diagnostic needs a 2-separated graph: " + bad.summary())
    dl, dr = g.degrees()
    sum_sq = sum(d * d for d in dl) + sum(d * d for d in dr)
    nv = g.left + g.right
    bound = nv * g.num_labels
    # Cauchy-Schwarz: (2E)^2 <= nv * sum_sq <= nv^2 * k
    edge_bound = nv * math.sqrt(g.num_labels) / 2
    return DegreeDiagnostic(sum_sq, bound, sum_sq <= bound, len(g.edges), edge_bound)


# ---------------------------------------------------------------------------
# Tournaments
# ---------------------------------------------------------------------------

def check_tournament(t: Tournament) -> Violation | None:
    N = t.num_vertices
    for i in range(N):
        if t.beats[i][i]:
            return Violation("tournament", {"pair": [i + 1, i + 1], "reason": "loop"})
        for j in range(i + 1, N):
            if t.beats[i][j] == t.beats[j][i]:
                reason = "both" if t.beats[i][j] else "neither"
                return Violation("tournament", {"pair": [i + 1, j + 1], "reason": reason})
    return None


# ---------------------------------------------------------------------------
# Certificate re-checking
# ---------------------------------------------------------------------------

def _has(g: LabeledBipartiteGraph, e: Sequence[int]) -> bool:
    return g.label_of.get((e[0], e[1])) == e[2]


def _vertex(name: str) -> tuple[str, int]:
    return name[0], int(name[1:])


def _recheck_graph(cert: Violation, g: LabeledBipartiteGraph) -> bool:
    d = cert.details
    kind = cert.kind
    z = d.get("label")
    edges = [list(e) for e in d.get("edges", [])]
    if not all(_has(g, e) for e in edges):
        return False
    if kind in ("matching", "induced", "ordered", "separation"):
        e, f = edges[0], edges[1]
        if e[2] != z or f[2] != z or (e[0], e[1]) == (f[0], f[1]):
            return False
    if kind == "matching":
        return e[0] == f[0] or e[1] == f[1]
    if kind == "induced":
        c = d["cross"]
        if not _has(g, c) or c[2] == z:
            return False
        ends_a = {e[0], f[0]}
        ends_b = {e[1], f[1]}
        return c[0] in ends_a and c[1] in ends_b
    if kind == "ordered":
        return not ((e[0] < f[0] and e[1] < f[1]) or (f[0] < e[0] and f[1] < e[1]))
    if kind == "sigma":
        v = d["vertices"]
        h, i, j, k, l = v["h"], v["i"], v["j"], v["k"], v["l"]
        return (i < k and h <= j <= l
                and edges[0][:2] == [i, h] and edges[1][:2] == [k, l]
                and edges[0][2] == edges[1][2] == z
                and edges[2][:2] == [i, j] and edges[3][:2] == [k, j])
    if kind == "separation":
        path = [_vertex(p) for p in d["path"]]
        if not path or len(path) - 1 != d["t"] or d["t"] > d["l"]:
            return False
        for (s1, x), (s2, y) in zip(path, path[1:]):
            if s1 == s2:
                return False
            a, b = (x, y) if s1 == "a" else (y, x)
            if (a, b) not in g.label_of:
                return False
        ends_e = {("a", e[0]), ("b", e[1])}
        ends_f = {("a", f[0]), ("b", f[1])}
        return path[0] in ends_e and path[-1] in ends_f
    return False


def recheck(cert: Violation, obj: Any) -> bool:
    """True iff ``cert`` genuinely demonstrates a violation in ``obj``."""
    d = cert.details
    try:
        if cert.kind == "pair" and isinstance(obj, TripleSequence):
            i, j = d["i"], d["j"]
            if not 1 <= i < j <= len(obj):
                return False
            p, q = obj.triples[i - 1], obj.triples[j - 1]
            return list(p) == list(d["first"]) and list(q) == list(d["second"]) and increases(p, q) < 2
        if cert.kind == "tournament" and isinstance(obj, Tournament):
            i, j = d["pair"]
            if not (1 <= i <= obj.num_vertices and 1 <= j <= obj.num_vertices):
                return False
            if i == j:
                return obj.edge(i, i)
            return obj.edge(i, j) == obj.edge(j, i)
        if isinstance(obj, LabeledBipartiteGraph):
            return _recheck_graph(cert, obj)
    except (KeyError, TypeError, ValueError, IndexError):
        return False
    return False
