"""Exact (budgeted) and heuristic solvers for the extremal quantities.

* :func:`exact_f` - min over 3-colorings of the longest 1-color-avoiding path.
* :func:`exact_F` - longest valid triple sequence over ``1..n``.
* :func:`exact_M_l` - most edges in an n+n bipartite graph split into k
  l-separated matchings.
* :func:`max_transitive_subtournament`.

Budget semantics: ``max_nodes`` caps each independent search (one decision
level of :func:`exact_f`, one branch-and-bound run otherwise) and is split
evenly over root branches when ``threads > 1`` or, for :func:`exact_f`,
always.  Running out never corrupts the reported value: f results become
upper bounds, the maximisation problems lower bounds.
"""

from __future__ import annotations

import itertools
import logging
import math
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from . import kernels
from .construct import biclique_union, cube_triple_sequence
from .core import (
    LabeledBipartiteGraph,
    SearchResult,
    Tournament,
    TournamentColoring,
    TripleSequence,
    ViolationError,
)
from .paths import longest_color_avoiding
from .verify import check_l_separated, check_tournament, check_triple_sequence, precedes

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class Budget:
    max_nodes: int = 10**12
    max_seconds: float | None = None
    threads: int = 1

    def __post_init__(self) -> None:
        if self.max_nodes < 1 or self.threads < 1 or (self.max_seconds is not None and self.max_seconds <= 0):
            raise ValueError("budget values must be positive")

    def deadline(self) -> float:
        return time.monotonic() + self.max_seconds if self.max_seconds else 0.0


UNLIMITED = Budget()


class InconsistencyError(RuntimeError):
    """Two independently computed quantities disagree; indicates a bug."""


def _call(args):
    fn, a = args
    return fn(*a)


def _run_all(fn, jobs: list[tuple], threads: int) -> list:
    if threads <= 1 or len(jobs) <= 1:
        return [fn(*j) for j in jobs]
    with ProcessPoolExecutor(max_workers=threads) as ex:
        return list(ex.map(_call, [(fn, j) for j in jobs]))


# ---------------------------------------------------------------------------
# f(N)
# ---------------------------------------------------------------------------

def _f_prefixes(N: int, depth: int) -> list[tuple[int, ...]]:
    """Symmetry-reduced colorings of the first ``depth`` edges (column order),
    colors introduced in order of first use."""
    E = N * (N - 1) // 2
    depth = min(depth, E)
    out: list[tuple[int, ...]] = []

    def rec(pre: list[int], used: int) -> None:
        if len(pre) == depth:
            out.append(tuple(pre))
            return
        for c in range(1, min(used + 1, 3) + 1):
            pre.append(c)
            rec(pre, max(used, c))
            pre.pop()

    rec([], 0)
    return out


def f_decision(N: int, target: int, budget: Budget = UNLIMITED, deadline: float | None = None):
    """Search for a 3-coloring whose longest avoiding path is at most ``target``.

    Returns ``(coloring or None, nodes, exhausted)``.  ``exhausted`` is False
    whenever the answer is conclusive.
    """
    if N == 1:
        return (TournamentColoring(1, []), 0, False) if target >= 1 else (None, 0, False)
    deadline = budget.deadline() if deadline is None else deadline
    prefixes = _f_prefixes(N, 4)
    allot = max(1, budget.max_nodes // len(prefixes))
    jobs = [(N, target, list(p), allot, deadline) for p in prefixes]
    nodes = 0
    exhausted = False
    if budget.threads > 1:
        results = _run_all(kernels.f_search, jobs, budget.threads)
    else:
        results = (kernels.f_search(*j) for j in jobs)
    for flat, n_nodes, ex in results:
        nodes += n_nodes
        exhausted |= ex
        if flat is not None:
            return TournamentColoring.from_flat(N, flat, 3), nodes, False
    return None, nodes, exhausted


def exact_f(N: int, budget: Budget = UNLIMITED) -> SearchResult:
    """Smallest possible longest 1-color-avoiding path over 3-colorings of the
    transitive N-tournament, with an extremal coloring.

    Decision searches run for targets ``ceil(sqrt(N)), ceil(sqrt(N))+1, ...``;
    the first feasible target is the answer when every smaller one was
    refuted without running out of budget.
    """
    if N < 1:
        raise ValueError("N must be positive")
    t0 = time.perf_counter()
    deadline = budget.deadline()
    target = math.isqrt(N - 1) + 1
    nodes = 0
    conclusive = True
    while True:
        if target >= N:
            # every coloring qualifies; skip the search
            col = TournamentColoring.from_function(N, lambda i, j: 1)
            return SearchResult("f", {"N": N}, N, col, conclusive, "upper", nodes,
                                time.perf_counter() - t0)
        col, n_nodes, exhausted = f_decision(N, target, budget, deadline)
        nodes += n_nodes
        if col is not None:
            value = longest_color_avoiding(col).best
            if value > target:
                raise InconsistencyError(f"decision at {target} returned coloring of value {value}")
            return SearchResult("f", {"N": N}, value, col, conclusive, "upper", nodes,
                                time.perf_counter() - t0)
        if exhausted:
            conclusive = False
            log.info("f(%d): target %d inconclusive", N, target)
        target += 1


# ---------------------------------------------------------------------------
# Chain searches: F(n) and transitive subtournaments
# ---------------------------------------------------------------------------

def _chain_search(succ: list[int], families: list[list[int]], seed: list[int], budget: Budget):
    """Longest chain ``v1, v2, ...`` with ``v_a -> v_b`` for all ``a < b``.

    Returns ``(chain, nodes, exact)``; ``seed`` is a known chain used as the
    starting incumbent.
    """
    deadline = budget.deadline()
    n = len(succ)
    best = list(seed)
    nodes = 0
    exact = True
    if budget.threads <= 1:
        remaining = budget.max_nodes
        for v in range(n):
            if remaining <= 0:
                exact = False
                break
            chain, used, ex = kernels.max_chain(succ, families, [v], succ[v], len(best),
                                                remaining, deadline)
            nodes += used
            remaining -= used
            if chain is not None:
                best = chain
            if ex:
                exact = False
                break
    else:
        allot = max(1, budget.max_nodes // max(n, 1))
        jobs = [(succ, families, [v], succ[v], len(seed), allot, deadline) for v in range(n)]
        for chain, used, ex in _run_all(kernels.max_chain, jobs, budget.threads):
            nodes += used
            exact &= not ex
            if chain is not None and len(chain) > len(best):
                best = chain
    return best, nodes, exact


def triple_universe(n: int) -> list[tuple[int, int, int]]:
    return list(itertools.product(range(1, n + 1), repeat=3))


def _triple_masks(n: int):
    verts = triple_universe(n)
    succ = [0] * len(verts)
    for a, p in enumerate(verts):
        m = 0
        for b, q in enumerate(verts):
            if precedes(p, q):
                m |= 1 << b
        succ[a] = m
    families = []
    for c1, c2 in ((0, 1), (0, 2), (1, 2)):
        groups: dict[tuple[int, int], int] = {}
        for a, p in enumerate(verts):
            key = (p[c1], p[c2])
            groups[key] = groups.get(key, 0) | (1 << a)
        families.append([groups[k] for k in sorted(groups)])
    return verts, succ, families


def _F_seed(n: int) -> TripleSequence:
    m = math.isqrt(n)
    cube = cube_triple_sequence(m)
    diag = [(i, i, i) for i in range(1, n + 1)]
    best = cube.triples if len(cube) >= len(diag) else diag
    return TripleSequence(n, best)


def exact_F(n: int, budget: Budget = UNLIMITED) -> SearchResult:
    """Longest sequence of triples over ``1..n`` where each earlier triple is
    below each later one in at least two coordinates.

    Branch and bound over the next triple; a candidate must follow every
    triple already chosen (the relation is not transitive).  Each of the
    three coordinate-pair projections is injective on a valid sequence,
    which bounds the remaining length.
    """
    if n < 1:
        raise ValueError("n must be positive")
    t0 = time.perf_counter()
    verts, succ, families = _triple_masks(n)
    index = {t: i for i, t in enumerate(verts)}
    seed = _F_seed(n)
    chain, nodes, exact = _chain_search(succ, families, [index[t] for t in seed.triples], budget)
    seq = TripleSequence(n, [verts[v] for v in chain])
    bad = check_triple_sequence(seq)
    if bad is not None:
        raise InconsistencyError(f"solver produced invalid sequence: {bad.summary()}")
    return SearchResult("F", {"n": n}, len(seq), seq, exact, "lower", nodes, time.perf_counter() - t0)


def max_transitive_subtournament(t: Tournament, budget: Budget = UNLIMITED) -> SearchResult:
    """Largest vertex set inducing a transitive subtournament.

    The witness lists the vertices (1-based) in their transitive order.
    """
    bad = check_tournament(t)
    if bad is not None:
        raise ViolationError(bad)
    t0 = time.perf_counter()
    N = t.num_vertices
    succ = [sum(1 << j for j in range(N) if t.beats[i][j]) for i in range(N)]
    # greedy seed: repeatedly take the candidate with most out-neighbours left
    seed: list[int] = []
    cand = (1 << N) - 1
    while cand:
        v = max((v for v in range(N) if cand >> v & 1), key=lambda v: ((succ[v] & cand).bit_count(), -v))
        seed.append(v)
        cand &= succ[v]
    chain, nodes, exact = _chain_search(succ, [], seed, budget)
    witness = tuple(v + 1 for v in chain)
    return SearchResult("transitive", {"N": N}, len(witness), witness, exact, "lower", nodes,
                        time.perf_counter() - t0)


# ---------------------------------------------------------------------------
# M_l(n, k)
# ---------------------------------------------------------------------------

def m_l_upper_bound(n: int, k: int, l: int) -> int:
    """Each label class is a matching (at most n edges); for l >= 2 the
    squared-degree count gives at most ``n * sqrt(k)`` edges."""
    ub = min(n * n, n * k)
    if l >= 2:
        ub = min(ub, math.isqrt(n * n * k))
    return ub


def _separated(edges: list[tuple[int, int, int]], n: int, l: int) -> bool:
    """Fast yes/no version of :func:`check_l_separated` on ``n + n`` vertices
    (left vertex a is node a-1, right vertex b is node n+b-1)."""
    adj: list[list[int]] = [[] for _ in range(2 * n)]
    cls: dict[int, list[tuple[int, int]]] = {}
    for a, b, z in edges:
        u, v = a - 1, n + b - 1
        adj[u].append(v)
        adj[v].append(u)
        cls.setdefault(z, []).append((u, v))
    for es in cls.values():
        owner: dict[int, int] = {}
        for idx, (u, v) in enumerate(es):
            if u in owner or v in owner:
                return False
            owner[u] = owner[v] = idx
        if len(es) < 2:
            continue
        for idx, (u, v) in enumerate(es):
            dist = {u: 0, v: 0}
            frontier = [u, v]
            for d in range(1, l + 1):
                nxt = []
                for x in frontier:
                    for y in adj[x]:
                        if y not in dist:
                            dist[y] = d
                            o = owner.get(y)
                            if o is not None and o != idx:
                                return False
                            nxt.append(y)
                frontier = nxt
                if not frontier:
                    break
    return True


def _M_seed(n: int, k: int, l: int) -> list[tuple[int, int, int]]:
    diag = [(i, i, 1) for i in range(1, n + 1)]
    s = math.isqrt(min(n, k))
    bic = list(biclique_union(s * s).edges) if s >= 1 else []
    return bic if len(bic) > len(diag) else diag


def exact_M_l(n: int, k: int, l: int, budget: Budget = UNLIMITED, use_bound: bool = True) -> SearchResult:
    """Most edges in an ``n + n`` bipartite graph whose edges split into k
    l-separated matchings.

    Edges ``(a, b)`` are decided in row-major order: absent, or one of the
    labels (a new label only as the next unused one).  With ``use_bound`` the
    search also stops as soon as the incumbent reaches
    :func:`m_l_upper_bound`.
    """
    if min(n, k, l) < 1:
        raise ValueError("n, k, l must be positive")
    t0 = time.perf_counter()
    deadline = budget.deadline()
    ub = m_l_upper_bound(n, k, l) if use_bound else n * n
    best = _M_seed(n, k, l)
    if not _separated(best, n, l):
        raise InconsistencyError("seed graph is not separated")
    slots = [(a, b) for a in range(1, n + 1) for b in range(1, n + 1)]
    cur: list[tuple[int, int, int]] = []
    state = {"nodes": 0, "exhausted": False}
    best_box = [best]

    def rec(pos: int, used: int) -> None:
        if state["exhausted"] or len(best_box[0]) >= ub:
            return
        state["nodes"] += 1
        if state["nodes"] > budget.max_nodes or (deadline and state["nodes"] % 1024 == 0
                                                  and time.monotonic() > deadline):
            state["exhausted"] = True
            return
        if len(cur) > len(best_box[0]):
            best_box[0] = list(cur)
        if pos == len(slots) or len(cur) + len(slots) - pos <= len(best_box[0]):
            return
        a, b = slots[pos]
        for z in range(1, min(used + 1, k) + 1):
            cur.append((a, b, z))
            if _separated(cur, n, l):
                rec(pos + 1, max(used, z))
            cur.pop()
        rec(pos + 1, used)

    if len(best) < ub:
        rec(0, 0)
    edges = sorted(best_box[0])
    g = LabeledBipartiteGraph(n, n, k, edges)
    if check_l_separated(g, l) is not None:
        raise InconsistencyError("solver produced a graph that is not separated")
    return SearchResult("M", {"n": n, "k": k, "l": l}, len(edges), g, not state["exhausted"], "lower",
                        state["nodes"], time.perf_counter() - t0)


# ---------------------------------------------------------------------------
# Duality between f and F
# ---------------------------------------------------------------------------

@dataclass
class DualityReport:
    f: dict[int, int]
    F: dict[int, int]
    checks: list[str] = field(default_factory=list)


def duality_check(N_max: int, n_max: int = 0, budget: Budget = UNLIMITED,
                  f_values: dict[int, int] | None = None,
                  F_values: dict[int, int] | None = None) -> DualityReport:
    """Cross-check exact f(1..N_max) against exact F(1..n_max).

    Checks that f starts at 1, never decreases, rises by at most one per
    step, and that ``F(n) = N`` exactly when ``f(N) = n < f(N+1)``.  Pairs
    that need f beyond ``N_max`` are skipped.  Raises
    :class:`InconsistencyError` on any mismatch.
    """
    f = dict(f_values or {})
    for N in range(1, N_max + 1):
        if N not in f:
            res = exact_f(N, budget)
            if not res.exact:
                raise ValueError(f"f({N}) not exact within budget")
            f[N] = res.value
    F = dict(F_values or {})
    for n in range(1, n_max + 1):
        if n not in F:
            res = exact_F(n, budget)
            if not res.exact:
                raise ValueError(f"F({n}) not exact within budget")
            F[n] = res.value
    rep = DualityReport(f, F)
    if f.get(1, 1) != 1:
        raise InconsistencyError(f"f(1) = {f[1]}")
    for N in range(1, N_max):
        if f[N + 1] < f[N] or f[N + 1] > f[N] + 1:
            raise InconsistencyError(f"f({N}) = {f[N]}, f({N + 1}) = {f[N + 1]}")
    rep.checks.append(f"f monotone with unit steps on 1..{N_max}")
    for N in range(1, N_max):
        n = f[N]
        if f[N + 1] > n and n in F:
            if F[n] != N:
                raise InconsistencyError(f"f({N}) = {n} < f({N + 1}) but F({n}) = {F[n]}")
            rep.checks.append(f"F({n}) = {N} from the step of f at {N}")
    for n, N in sorted(F.items()):
        if N + 1 <= N_max:
            if f[N] != n or f[N + 1] <= n:
                raise InconsistencyError(f"F({n}) = {N} but f({N}) = {f[N]}, f({N + 1}) = {f[N + 1]}")
            rep.checks.append(f"f({N}) = {n} < f({N + 1}) from F({n}) = {N}")
    return rep


def step_property_check(N: int) -> int:
    """Extend every 3-coloring of N vertices by a new last vertex whose
    incoming edges all get color 1, and confirm the longest avoiding path
    grows by at most one.  Returns the number of colorings checked."""
    E = N * (N - 1) // 2
    from array import array

    count = 0
    for flat in itertools.product((1, 2, 3), repeat=E):
        base = array("i", flat)
        vals, _ = kernels.color_dp(base, N, 3, False)
        ext = array("i")
        pos = 0
        for i in range(N - 1):
            ext.extend(base[pos:pos + N - 1 - i])
            ext.append(1)
            pos += N - 1 - i
        ext.append(1)
        vals2, _ = kernels.color_dp(ext, N + 1, 3, False)
        if max(vals2) > max(vals) + 1:
            raise InconsistencyError(f"step property fails for coloring {flat}")
        count += 1
    return count


# ---------------------------------------------------------------------------
# Heuristics
# ---------------------------------------------------------------------------

def _improve_sequence(seq: list[tuple[int, int, int]], n: int, rng: random.Random, max_steps: int):
    universe = triple_universe(n)
    steps = 0

    def try_insert(cur):
        order = universe[:]
        rng.shuffle(order)
        for t in order:
            if t in cur:
                continue
            for p in range(len(cur) + 1):
                if all(precedes(x, t) for x in cur[:p]) and all(precedes(t, x) for x in cur[p:]):
                    return cur[:p] + [t] + cur[p:]
        return None

    best = list(seq)
    cur = list(seq)
    while steps < max_steps:
        steps += 1
        nxt = try_insert(cur)
        if nxt is not None:
            cur = nxt
            if len(cur) > len(best):
                best = list(cur)
            continue
        if not cur:
            break
        # perturb: drop one element and retry from there
        cur = list(best)
        del cur[rng.randrange(len(cur))]
    return best, steps


def heuristic_lower_bound(problem: str, params: dict[str, int], budget: Budget = Budget(max_nodes=200),
                          seed: int = 0) -> SearchResult:
    """Constructive seed plus randomised local improvement; never exact.

    ``problem`` is ``"F"`` (params ``n``) or ``"M"`` (params ``n``, ``k``,
    ``l``).  ``budget.max_nodes`` bounds the number of improvement rounds.
    """
    rng = random.Random(seed)
    t0 = time.perf_counter()
    if problem == "F":
        n = params["n"]
        start = list(_F_seed(n).triples)
        best, steps = _improve_sequence(start, n, rng, budget.max_nodes)
        seq = TripleSequence(n, best)
        assert check_triple_sequence(seq) is None
        return SearchResult("F", {"n": n}, len(seq), seq, False, "lower", steps, time.perf_counter() - t0)
    if problem == "M":
        n, k, l = params["n"], params["k"], params["l"]
        edges = _M_seed(n, k, l)
        present = {(a, b) for a, b, _ in edges}
        slots = [(a, b, z) for a in range(1, n + 1) for b in range(1, n + 1) for z in range(1, k + 1)]
        steps = 0
        for _ in range(max(1, budget.max_nodes // max(1, len(slots)))):
            rng.shuffle(slots)
            grew = False
            for a, b, z in slots:
                steps += 1
                if (a, b) in present:
                    continue
                trial = edges + [(a, b, z)]
                if _separated(trial, n, l):
                    edges = trial
                    present.add((a, b))
                    grew = True
            if not grew:
                break
        g = LabeledBipartiteGraph(n, n, k, sorted(edges))
        assert check_l_separated(g, l) is None
        return SearchResult("M", {"n": n, "k": k, "l": l}, len(g.edges), g, False, "lower", steps,
                            time.perf_counter() - t0)
    raise ValueError(f"unknown problem {problem!r}")
