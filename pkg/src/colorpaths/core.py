"""Domain types and canonical text serialization.

All indices and colors are 1-based, both in memory and on disk.  Values are
frozen dataclasses holding tuples, so they can be shared freely.
"""

from __future__ import annotations

import json
from array import array
from dataclasses import dataclass, field
from functools import cached_property
from typing import Any, Iterator, Sequence


class ParseError(ValueError):
    """Raised when text cannot be parsed into a well-formed object."""


class ViolationError(ValueError):
    """An operation needed a property its input lacks; ``certificate`` says why."""

    def __init__(self, certificate: "Violation", message: str = ""):
        super().__init__(message or certificate.summary())
        self.certificate = certificate


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise ParseError(msg)


def _is_int(v: Any) -> bool:
    return isinstance(v, int) and not isinstance(v, bool)


# ---------------------------------------------------------------------------
# Types
# ---------------------------------------------------------------------------

Triple = tuple[int, int, int]


@dataclass(frozen=True)
class TripleSequence:
    """An ordered list of integer triples over the alphabet ``1..n``.

    Only well-formedness is enforced here.  Whether every earlier triple is
    below every later one in two coordinates is a question for
    :func:`colorpaths.verify.check_triple_sequence`.
    """

    n: int
    triples: tuple[Triple, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "triples", tuple(tuple(t) for t in self.triples))
        _require(_is_int(self.n) and self.n >= 1, f"alphabet size must be a positive integer, got {self.n!r}")
        for idx, t in enumerate(self.triples, 1):
            _require(len(t) == 3, f"triple {idx} does not have three coordinates")
            for v in t:
                _require(_is_int(v) and 1 <= v <= self.n, f"triple {idx} coordinate {v!r} outside [1, {self.n}]")

    def __len__(self) -> int:
        return len(self.triples)

    def __iter__(self) -> Iterator[Triple]:
        return iter(self.triples)

    @property
    def max_entry(self) -> int:
        return max((max(t) for t in self.triples), default=0)


@dataclass(frozen=True)
class TournamentColoring:
    """An r-coloring of the transitive tournament on ``1..N``.

    ``rows[i-1]`` lists the colors of edges ``(i, i+1), ..., (i, N)``.
    """

    num_vertices: int
    rows: tuple[tuple[int, ...], ...]
    num_colors: int = 3

    def __post_init__(self) -> None:
        object.__setattr__(self, "rows", tuple(tuple(r) for r in self.rows))
        N, r = self.num_vertices, self.num_colors
        _require(_is_int(N) and N >= 1, f"num_vertices must be a positive integer, got {N!r}")
        _require(_is_int(r) and r >= 1, f"num_colors must be a positive integer, got {r!r}")
        _require(len(self.rows) == N - 1, f"expected {N - 1} color rows, got {len(self.rows)}")
        for i, row in enumerate(self.rows, 1):
            _require(len(row) == N - i, f"row {i} must have {N - i} entries, got {len(row)}")
            for c in row:
                _require(_is_int(c) and 1 <= c <= r, f"row {i} color {c!r} outside [1, {r}]")

    @classmethod
    def from_function(cls, N: int, color, num_colors: int = 3) -> "TournamentColoring":
        """Build from ``color(i, j)`` evaluated on every pair ``i < j``."""
        rows = [[color(i, j) for j in range(i + 1, N + 1)] for i in range(1, N)]
        return cls(N, rows, num_colors)

    @classmethod
    def from_flat(cls, N: int, flat: Sequence[int], num_colors: int = 3) -> "TournamentColoring":
        rows, pos = [], 0
        for i in range(1, N):
            rows.append(tuple(flat[pos:pos + N - i]))
            pos += N - i
        return cls(N, rows, num_colors)

    def color(self, i: int, j: int) -> int:
        """Color of the edge ``i -> j``; requires ``1 <= i < j <= N``."""
        if not 1 <= i < j <= self.num_vertices:
            raise IndexError(f"no edge ({i}, {j})")
        return self.rows[i - 1][j - i - 1]

    @cached_property
    def flat(self) -> array:
        """Colors in row-major upper-triangle order as a C int array."""
        return array("i", [c for row in self.rows for c in row])

    def edges(self) -> Iterator[tuple[int, int, int]]:
        for i, row in enumerate(self.rows, 1):
            for off, c in enumerate(row):
                yield i, i + 1 + off, c


@dataclass(frozen=True)
class LabeledBipartiteGraph:
    """Bipartite graph ``a_1..a_left`` / ``b_1..b_right`` with labeled edges.

    Each edge is ``(a, b, label)``.  Edges are kept in the given order; the
    label classes are the candidate matchings ``E_1..E_k``.
    """

    left: int
    right: int
    num_labels: int
    edges: tuple[tuple[int, int, int], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "edges", tuple(tuple(e) for e in self.edges))
        for name in ("left", "right", "num_labels"):
            v = getattr(self, name)
            _require(_is_int(v) and v >= 0, f"{name} must be a non-negative integer, got {v!r}")
        seen = set()
        for e in self.edges:
            _require(len(e) == 3, f"edge {e!r} must be [a, b, label]")
            a, b, z = e
            _require(_is_int(a) and 1 <= a <= self.left, f"left index {a!r} outside [1, {self.left}]")
            _require(_is_int(b) and 1 <= b <= self.right, f"right index {b!r} outside [1, {self.right}]")
            _require(_is_int(z) and 1 <= z <= self.num_labels, f"label {z!r} outside [1, {self.num_labels}]")
            _require((a, b) not in seen, f"duplicate edge ({a}, {b})")
            seen.add((a, b))

    @cached_property
    def label_of(self) -> dict[tuple[int, int], int]:
        return {(a, b): z for a, b, z in self.edges}

    @cached_property
    def classes(self) -> dict[int, list[tuple[int, int]]]:
        """Label -> list of (a, b) in edge order."""
        out: dict[int, list[tuple[int, int]]] = {}
        for a, b, z in self.edges:
            out.setdefault(z, []).append((a, b))
        return out

    @cached_property
    def left_adj(self) -> dict[int, set[int]]:
        adj: dict[int, set[int]] = {}
        for a, b, _ in self.edges:
            adj.setdefault(a, set()).add(b)
        return adj

    @cached_property
    def right_adj(self) -> dict[int, set[int]]:
        adj: dict[int, set[int]] = {}
        for a, b, _ in self.edges:
            adj.setdefault(b, set()).add(a)
        return adj

    def degrees(self) -> tuple[list[int], list[int]]:
        dl = [0] * (self.left + 1)
        dr = [0] * (self.right + 1)
        for a, b, _ in self.edges:
            dl[a] += 1
            dr[b] += 1
        return dl[1:], dr[1:]


@dataclass(frozen=True)
class MajorityTournamentSpec:
    """k permutations of ``1..k`` with ``perms[i-1][0] == i``, plus side length n."""

    k: int
    n: int
    perms: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "perms", tuple(tuple(p) for p in self.perms))
        k = self.k
        _require(_is_int(k) and k >= 1, f"k must be a positive integer, got {k!r}")
        _require(k % 2 == 1, f"k must be odd, got {k}")
        _require(_is_int(self.n) and self.n >= 1, f"n must be a positive integer, got {self.n!r}")
        _require(len(self.perms) == k, f"expected {k} permutations, got {len(self.perms)}")
        for i, p in enumerate(self.perms, 1):
            _require(sorted(p) == list(range(1, k + 1)) and all(_is_int(v) for v in p),
                     f"permutation {i} is not a bijection on 1..{k}")
            _require(p[0] == i, f"permutation {i} must start with {i}, got {p[0]}")

    @classmethod
    def cyclic(cls, k: int, n: int) -> "MajorityTournamentSpec":
        """The cyclic-shift family: ``sigma_i = (i, i+1, ..., k, 1, ..., i-1)``."""
        return cls(k, n, [[(i + j) % k + 1 for j in range(k)] for i in range(k)])


@dataclass(frozen=True)
class Tournament:
    """Orientation of pairs on ``1..N`` stored as a full boolean matrix.

    ``beats[i-1][j-1]`` is true when the edge is ``i -> j``.  Broken
    orientations (both or neither direction) are representable so that
    :func:`colorpaths.verify.check_tournament` has something to reject.
    """

    num_vertices: int
    beats: tuple[tuple[bool, ...], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "beats", tuple(tuple(bool(x) for x in r) for r in self.beats))
        N = self.num_vertices
        _require(_is_int(N) and N >= 1, f"num_vertices must be a positive integer, got {N!r}")
        _require(len(self.beats) == N and all(len(r) == N for r in self.beats),
                 f"adjacency must be {N}x{N}")

    @classmethod
    def from_forward(cls, N: int, forward: Sequence[Sequence[bool]]) -> "Tournament":
        """Build from upper-triangle rows (true means ``i -> j`` for ``i < j``)."""
        _require(len(forward) == N - 1, f"expected {N - 1} rows, got {len(forward)}")
        m = [[False] * N for _ in range(N)]
        for i, row in enumerate(forward):
            _require(len(row) == N - 1 - i, f"row {i + 1} must have {N - 1 - i} entries")
            for off, v in enumerate(row):
                _require(isinstance(v, bool), f"row {i + 1} entry {v!r} is not a boolean")
                j = i + 1 + off
                m[i][j] = v
                m[j][i] = not v
        return cls(N, m)

    @classmethod
    def transitive(cls, N: int) -> "Tournament":
        return cls(N, [[i < j for j in range(N)] for i in range(N)])

    def edge(self, i: int, j: int) -> bool:
        """True iff ``i -> j`` (1-based)."""
        return self.beats[i - 1][j - 1]

    def forward_rows(self) -> list[list[bool]]:
        N = self.num_vertices
        return [[self.beats[i][j] for j in range(i + 1, N)] for i in range(N - 1)]


@dataclass(frozen=True)
class Violation:
    """Evidence that an object fails a property.

    ``kind`` selects the meaning of ``details``; see
    :func:`colorpaths.verify.recheck` for the exact contract of each kind.
    """

    kind: str
    details: dict[str, Any] = field(default_factory=dict)

    def __hash__(self) -> int:
        return hash((self.kind, serialize(self)))

    def summary(self) -> str:
        d = ", ".join(f"{k}={v}" for k, v in sorted(self.details.items()))
        return f"{self.kind}: {d}"


@dataclass(frozen=True)
class SearchResult:
    """Outcome of a solver.

    ``exact`` is False when the budget ran out; ``bound`` then says which side
    ``value`` bounds the true optimum from ("upper" for f, "lower" for F/M/transitive).
    """

    problem: str
    params: dict[str, int]
    value: int
    witness: Any
    exact: bool
    bound: str
    nodes: int = 0
    elapsed: float = field(default=0.0, compare=False)


# ---------------------------------------------------------------------------
# Serialization
# ---------------------------------------------------------------------------

def _to_data(obj: Any) -> dict[str, Any]:
    if isinstance(obj, TripleSequence):
        return {"n": obj.n, "triples": [list(t) for t in obj.triples]}
    if isinstance(obj, TournamentColoring):
        return {"num_vertices": obj.num_vertices, "num_colors": obj.num_colors,
                "colors": [list(r) for r in obj.rows]}
    if isinstance(obj, LabeledBipartiteGraph):
        return {"left": obj.left, "right": obj.right, "num_labels": obj.num_labels,
                "edges": [list(e) for e in obj.edges]}
    if isinstance(obj, MajorityTournamentSpec):
        return {"k": obj.k, "n": obj.n, "perms": [list(p) for p in obj.perms]}
    if isinstance(obj, Tournament):
        for i in range(obj.num_vertices):
            for j in range(i + 1, obj.num_vertices):
                if obj.beats[i][j] == obj.beats[j][i]:
                    raise ValueError(f"pair ({i + 1}, {j + 1}) is not oriented exactly once")
        return {"num_vertices": obj.num_vertices, "forward": obj.forward_rows()}
    if isinstance(obj, Violation):
        return {"kind": obj.kind, **_jsonable(obj.details)}
    if isinstance(obj, SearchResult):
        w = obj.witness
        return {"problem": obj.problem, "params": dict(obj.params), "value": obj.value,
                "exact": obj.exact, "bound": obj.bound, "nodes": obj.nodes,
                "witness": None if w is None else _to_data(w)}
    if isinstance(obj, (list, tuple)):
        return list(obj)
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def _jsonable(v: Any) -> Any:
    if isinstance(v, dict):
        return {str(k): _jsonable(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    return v


def _dump(v: Any, indent: int) -> str:
    pad = " " * indent
    if isinstance(v, dict):
        if not v:
            return "{}"
        items = [f'{pad} {json.dumps(k)}: {_dump(v[k], indent + 1)}' for k in sorted(v)]
        return "{\n" + ",\n".join(items) + "\n" + pad + "}"
    if isinstance(v, list) and v and all(isinstance(x, (list, dict)) for x in v):
        items = [pad + " " + _dump(x, indent + 1) for x in v]
        return "[\n" + ",\n".join(items) + "\n" + pad + "]"
    return json.dumps(v, separators=(", ", ": "))


def serialize(obj: Any) -> str:
    """Canonical text form: sorted keys, one row per line, trailing newline."""
    return _dump(_to_data(obj), 0) + "\n"


_KINDS = {
    "triples": TripleSequence,
    "coloring": TournamentColoring,
    "bipartite": LabeledBipartiteGraph,
    "majority": MajorityTournamentSpec,
    "tournament": Tournament,
}


def _keys(d: dict, required: set[str]) -> None:
    _require(isinstance(d, dict), "top level must be an object")
    missing = required - d.keys()
    _require(not missing, f"missing keys: {sorted(missing)}")
    extra = d.keys() - required
    _require(not extra, f"unexpected keys: {sorted(extra)}")


def _int_rows(v: Any, what: str) -> list[list[int]]:
    _require(isinstance(v, list), f"{what} must be a list")
    for row in v:
        _require(isinstance(row, list), f"{what} entries must be lists")
    return v


def from_data(d: Any, expected: type | str) -> Any:
    """Build a typed object from already-decoded JSON data."""
    cls = _KINDS.get(expected, expected) if isinstance(expected, str) else expected
    try:
        if cls is TripleSequence:
            _keys(d, {"n", "triples"})
            return TripleSequence(d["n"], _int_rows(d["triples"], "triples"))
        if cls is TournamentColoring:
            _keys(d, {"num_vertices", "num_colors", "colors"})
            return TournamentColoring(d["num_vertices"], _int_rows(d["colors"], "colors"), d["num_colors"])
        if cls is LabeledBipartiteGraph:
            _keys(d, {"left", "right", "num_labels", "edges"})
            return LabeledBipartiteGraph(d["left"], d["right"], d["num_labels"], _int_rows(d["edges"], "edges"))
        if cls is MajorityTournamentSpec:
            _keys(d, {"k", "n", "perms"})
            return MajorityTournamentSpec(d["k"], d["n"], _int_rows(d["perms"], "perms"))
        if cls is Tournament:
            _keys(d, {"num_vertices", "forward"})
            N = d["num_vertices"]
            _require(_is_int(N) and N >= 1, f"num_vertices must be a positive integer, got {N!r}")
            return Tournament.from_forward(N, _int_rows(d["forward"], "forward"))
    except TypeError as exc:
        raise ParseError(str(exc)) from exc
    raise TypeError(f"cannot parse into {expected!r}")


def parse(text: str | bytes, expected: type | str) -> Any:
    """Parse canonical (or any equivalent JSON) text into ``expected``.

    ``expected`` is a core type or one of ``triples``, ``coloring``,
    ``bipartite``, ``majority``, ``tournament``.  Raises :class:`ParseError`.
    """
    try:
        d = json.loads(text)
    except (json.JSONDecodeError, UnicodeDecodeError) as exc:
        raise ParseError(f"malformed syntax: {exc}") from exc
    return from_data(d, expected)
