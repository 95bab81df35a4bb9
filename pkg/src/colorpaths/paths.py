"""Longest color-avoiding and monochromatic paths in colored transitive
tournaments, plus longest monotone subsequences.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass
from typing import Sequence

from . import kernels
from .core import TournamentColoring


@dataclass(frozen=True)
class PathResult:
    """Per-color lengths and one witness path (1-based vertices) per color."""

    lengths: tuple[int, ...]
    witnesses: tuple[tuple[int, ...], ...]

    @property
    def best(self) -> int:
        return max(self.lengths)

    @property
    def best_color(self) -> int:
        return self.lengths.index(self.best) + 1


def _table(coloring: TournamentColoring, mono: bool):
    N, r = coloring.num_vertices, coloring.num_colors
    return kernels.color_dp(coloring.flat, N, r, mono)


def avoidance_records(coloring: TournamentColoring) -> list[tuple[int, ...]]:
    """For every vertex k, the vertex-lengths of the longest paths ending at k
    that avoid color 1, ..., color r."""
    r = coloring.num_colors
    vals, _ = _table(coloring, mono=False)
    return [tuple(vals[k * r:(k + 1) * r]) for k in range(coloring.num_vertices)]


def _walk_back(preds: list[int], r: int, end: int, c: int) -> tuple[int, ...]:
    path = []
    v = end
    while v != -1:
        path.append(v + 1)
        v = preds[v * r + c]
    return tuple(reversed(path))


def _path_ok(coloring: TournamentColoring, path: Sequence[int], color: int, mono: bool) -> bool:
    if any(b <= a for a, b in zip(path, path[1:])):
        return False
    return all((coloring.color(a, b) == color) == mono for a, b in zip(path, path[1:]))


def _longest(coloring: TournamentColoring, mono: bool) -> PathResult:
    N, r = coloring.num_vertices, coloring.num_colors
    vals, preds = _table(coloring, mono)
    lengths, witnesses = [], []
    for c in range(r):
        col = [vals[k * r + c] for k in range(N)]
        best = max(col)
        end = col.index(best)
        path = _walk_back(preds, r, end, c)
        if len(path) != best or not _path_ok(coloring, path, c + 1, mono):
            raise AssertionError(f"witness reconstruction failed for color {c + 1}")
        lengths.append(best)
        witnesses.append(path)
    return PathResult(tuple(lengths), tuple(witnesses))


def longest_color_avoiding(coloring: TournamentColoring) -> PathResult:
    """Longest path avoiding each color in turn, with witnesses."""
    return _longest(coloring, mono=False)


def longest_monochromatic(coloring: TournamentColoring) -> PathResult:
    """Longest path in each single color, with witnesses."""
    return _longest(coloring, mono=True)


@dataclass(frozen=True)
class MonotoneResult:
    """Longest increasing/decreasing subsequences.

    Witnesses are 0-based index lists.  ``labels[i]`` is the pair (length of
    the longest increasing, longest decreasing subsequence ending at i).
    """

    lis: int
    lds: int
    lis_witness: tuple[int, ...]
    lds_witness: tuple[int, ...]
    labels: tuple[tuple[int, int], ...]


def _patience(values: Sequence[float]) -> tuple[list[int], list[int]]:
    """Length of the longest increasing subsequence ending at each index, and
    predecessor links, in O(n log n)."""
    tails: list[float] = []
    tail_idx: list[int] = []
    ending = [0] * len(values)
    prev = [-1] * len(values)
    for i, v in enumerate(values):
        pos = bisect_left(tails, v)
        if pos == len(tails):
            tails.append(v)
            tail_idx.append(i)
        else:
            tails[pos] = v
            tail_idx[pos] = i
        ending[i] = pos + 1
        prev[i] = tail_idx[pos - 1] if pos else -1
    return ending, prev


def _trace(ending: list[int], prev: list[int]) -> tuple[int, ...]:
    if not ending:
        return ()
    i = ending.index(max(ending))
    out = []
    while i != -1:
        out.append(i)
        i = prev[i]
    return tuple(reversed(out))


def monotone_subsequences(values: Sequence[float]) -> MonotoneResult:
    if len(set(values)) != len(values):
        raise ValueError("values must be pairwise distinct")
    inc, inc_prev = _patience(values)
    dec, dec_prev = _patience([-v for v in values])
    return MonotoneResult(
        lis=max(inc, default=0),
        lds=max(dec, default=0),
        lis_witness=_trace(inc, inc_prev),
        lds_witness=_trace(dec, dec_prev),
        labels=tuple(zip(inc, dec)),
    )
