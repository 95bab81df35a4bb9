"""Command-line interface.

Exit codes: 0 success/valid, 1 violation (certificate emitted), 2 usage or
parse error, 3 search stopped by its budget (value is only a bound).
"""

from __future__ import annotations

import argparse
import csv
import io
import logging
import sys
import time
from pathlib import Path

from . import construct, search, transform, verify
from .core import (
    LabeledBipartiteGraph,
    MajorityTournamentSpec,
    ParseError,
    SearchResult,
    TripleSequence,
    ViolationError,
    parse,
    serialize,
)

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE, EXIT_BOUND = 0, 1, 2, 3

# inputs beyond these need an explicit budget
F_SMALL_MAX = 9
BIG_F_MAX = 4
M_SIDE_MAX = 3

TABLE_COLUMNS = ["problem", "param", "value", "exact", "bound", "nodes", "witness", "duality"]

log = logging.getLogger("colorpaths")


class UsageError(Exception):
    pass


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _info(msg: str, out: str | None) -> None:
    # keep stdout clean when the object itself goes there
    print(msg, file=sys.stderr if not out else sys.stdout)


def _read(path: str, kind: str):
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from exc
    return parse(text, kind)


# ---------------------------------------------------------------------------
# gen
# ---------------------------------------------------------------------------

def _parse_perms(raw: str) -> list[list[int]]:
    try:
        return [[int(x) for x in part.split(",")] for part in raw.split(";") if part.strip()]
    except ValueError as exc:
        raise UsageError(f"bad --perms {raw!r}; expected e.g. '1,2,3;2,3,1;3,1,2'") from exc


def cmd_gen(args) -> int:
    kind = args.kind
    try:
        if kind == "cube-coloring":
            _need(args, "m")
            obj = construct.cube_coloring(args.m, args.r)
            summary = f"cube coloring m={args.m} r={args.r}: {obj.num_vertices} vertices"
        elif kind == "cube-triples":
            _need(args, "m")
            obj = construct.cube_triple_sequence(args.m)
            summary = f"cube triples m={args.m}: {len(obj)} triples over alphabet {obj.n}"
        elif kind == "biclique":
            _need(args, "n")
            obj = construct.biclique_union(args.n)
            summary = f"biclique union n={args.n}: {len(obj.edges)} edges, {obj.num_labels} labels"
        else:
            _need(args, "k")
            _need(args, "n")
            spec = (MajorityTournamentSpec(args.k, args.n, _parse_perms(args.perms)) if args.perms
                    else MajorityTournamentSpec.cyclic(args.k, args.n))
            obj = construct.majority_tournament(spec)
            summary = f"majority tournament k={args.k} n={args.n}: {obj.num_vertices} vertices"
    except (ValueError, ParseError) as exc:
        raise UsageError(str(exc)) from exc
    _emit(serialize(obj), args.out)
    _info(summary, args.out)
    return EXIT_OK


def _need(args, name: str) -> None:
    if getattr(args, name) is None:
        raise UsageError(f"--{name} is required")


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------

_VERIFY = {
    "triples": ("triples", verify.check_triple_sequence),
    "induced": ("bipartite", verify.check_induced_matchings),
    "ordered": ("bipartite", verify.check_ordered_matchings),
    "sigma-free": ("bipartite", verify.check_sigma_free),
    "separated": ("bipartite", None),
    "tournament": ("tournament", verify.check_tournament),
}


def cmd_verify(args) -> int:
    kind, check = _VERIFY[args.property]
    obj = _read(args.input, kind)
    if args.property == "separated":
        if args.l is None or args.l < 1:
            raise UsageError("separated needs --l >= 1")
        cert = verify.check_l_separated(obj, args.l)
    else:
        cert = check(obj)
    if cert is None:
        print(f"{args.property}: valid")
        return EXIT_OK
    if not verify.recheck(cert, obj):
        raise AssertionError(f"certificate failed re-check: {cert.summary()}")
    print(f"{args.property}: violation ({cert.summary()})")
    if args.out:
        Path(args.out).write_text(serialize(cert))
    return EXIT_VIOLATION


# ---------------------------------------------------------------------------
# convert
# ---------------------------------------------------------------------------

def _stat(obj) -> str:
    if isinstance(obj, TripleSequence):
        return f"{len(obj)} triples, max entry {obj.max_entry}"
    if isinstance(obj, LabeledBipartiteGraph):
        return f"{len(obj.edges)} edges"
    return f"{obj.num_vertices} vertices"


def cmd_convert(args) -> int:
    pair = (args.src, args.dst)
    obj = _read(args.input, args.src)
    try:
        if pair == ("coloring", "triples"):
            out = transform.coloring_to_triples(obj)
        elif pair == ("triples", "coloring"):
            out = transform.triples_to_coloring(obj)
        elif pair == ("triples", "bipartite"):
            out = transform.triples_to_bipartite(obj)
        elif pair == ("coloring", "bipartite"):
            out = transform.triples_to_bipartite(transform.coloring_to_triples(obj))
        else:
            raise UsageError(f"no conversion from {args.src} to {args.dst}")
    except ViolationError as exc:
        print(f"invalid input: {exc.certificate.summary()}")
        if args.cert:
            Path(args.cert).write_text(serialize(exc.certificate))
        return EXIT_VIOLATION
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    _emit(serialize(out), args.out)
    _info(f"{args.src} -> {args.dst}: {_stat(out)}", args.out)
    return EXIT_OK


# ---------------------------------------------------------------------------
# search / table
# ---------------------------------------------------------------------------

def _budget(args, explicit_required: bool) -> search.Budget:
    given = args.budget_nodes is not None or args.budget_seconds is not None
    if explicit_required and not given:
        raise UsageError("parameters outside the default feasibility envelope; pass --budget-nodes or --budget-seconds")
    try:
        return search.Budget(
            max_nodes=args.budget_nodes if args.budget_nodes is not None else search.UNLIMITED.max_nodes,
            max_seconds=args.budget_seconds,
            threads=args.threads,
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _solve(problem: str, args, value: int) -> SearchResult:
    """Run one solver; ``value`` is the size parameter (N or n)."""
    if value < 1:
        raise UsageError("size parameter must be positive")
    if problem == "f":
        return search.exact_f(value, _budget(args, value > F_SMALL_MAX))
    if problem == "F":
        if args.heuristic:
            return search.heuristic_lower_bound("F", {"n": value}, search.Budget(max_nodes=args.budget_nodes or 200))
        return search.exact_F(value, _budget(args, value > BIG_F_MAX))
    if problem == "M":
        k = args.k if args.k is not None else value
        l = args.l if args.l is not None else 2
        if k < 1 or l < 1:
            raise UsageError("--k and --l must be positive")
        if args.heuristic:
            return search.heuristic_lower_bound("M", {"n": value, "k": k, "l": l},
                                                search.Budget(max_nodes=args.budget_nodes or 10_000))
        bound_hits = search.m_l_upper_bound(value, k, l) <= len(search._M_seed(value, k, l))
        return search.exact_M_l(value, k, l, _budget(args, value > M_SIDE_MAX and not bound_hits))
    raise UsageError(f"unknown problem {problem}")


def _report(res: SearchResult) -> str:
    flag = "exact" if res.exact else f"{res.bound} bound"
    params = " ".join(f"{k}={v}" for k, v in res.params.items())
    return f"{res.problem}({params}) = {res.value} [{flag}] nodes={res.nodes}"


def cmd_search(args) -> int:
    if args.problem == "transitive":
        if not args.input:
            raise UsageError("transitive needs --in TOURNAMENT_FILE")
        t = _read(args.input, "tournament")
        try:
            res = search.max_transitive_subtournament(t, _budget(args, t.num_vertices > 64))
        except ViolationError as exc:
            print(f"not a tournament: {exc.certificate.summary()}")
            return EXIT_VIOLATION
    else:
        size = {"f": args.N, "F": args.n, "M": args.n}[args.problem]
        if size is None:
            raise UsageError(f"search {args.problem} needs --{'N' if args.problem == 'f' else 'n'}")
        res = _solve(args.problem, args, size)
    print(_report(res))
    print(f"elapsed {res.elapsed:.3f}s", file=sys.stderr)
    if args.out:
        Path(args.out).write_text(serialize(res.witness))
    if args.report:
        Path(args.report).write_text(serialize(res))
    return EXIT_OK if res.exact else EXIT_BOUND


def _parse_range(raw: str) -> range:
    try:
        if ".." in raw:
            lo, hi = raw.split("..")
            return range(int(lo), int(hi) + 1)
        v = int(raw)
        return range(v, v + 1)
    except ValueError as exc:
        raise UsageError(f"bad range {raw!r}; expected LO..HI") from exc


def cmd_table(args) -> int:
    rng = _parse_range(args.range)
    if args.problem not in ("f", "F", "M"):
        raise UsageError("table supports f, F, M")
    rows = []
    results: dict[int, SearchResult] = {}
    timings = []
    wdir = Path(args.witness_dir) if args.witness_dir else None
    if wdir:
        wdir.mkdir(parents=True, exist_ok=True)
    for v in rng:
        t0 = time.perf_counter()
        res = _solve(args.problem, args, v)
        timings.append((v, time.perf_counter() - t0))
        results[v] = res
        wpath = ""
        if wdir:
            name = f"{args.problem}_{v}.json"
            (wdir / name).write_text(serialize(res.witness))
            wpath = str(wdir / name)
        rows.append({"problem": args.problem, "param": v, "value": res.value, "exact": int(res.exact),
                     "bound": res.bound, "nodes": res.nodes, "witness": wpath, "duality": ""})
    _fill_duality(args.problem, rows, results)
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=TABLE_COLUMNS, lineterminator="\n")
    w.writeheader()
    w.writerows(rows)
    _emit(buf.getvalue(), args.out)
    if args.out:
        Path(args.out + ".log").write_text("".join(f"{v}\t{dt:.3f}s\n" for v, dt in timings))
    return EXIT_OK


def _fill_duality(problem: str, rows: list[dict], results: dict[int, SearchResult]) -> None:
    """For f rows: where f steps up after N, F(f(N)) must equal N; checked
    against exact_F when that is cheap.  For F rows: f must step up right
    after N = F(n); checked against exact_f."""
    if problem == "f":
        for row in rows:
            N = row["param"]
            nxt = results.get(N + 1)
            if nxt is None or not (nxt.exact and results[N].exact):
                continue
            if nxt.value > results[N].value:
                n = results[N].value
                note = f"F({n})={N}"
                if n <= BIG_F_MAX:
                    F = search.exact_F(n)
                    note += " ok" if F.exact and F.value == N else f" MISMATCH F({n})={F.value}"
                row["duality"] = note
            if nxt.value > results[N].value + 1 or nxt.value < results[N].value:
                row["duality"] = (row["duality"] + " STEP-VIOLATION").strip()
    elif problem == "F":
        for row in rows:
            n, N = row["param"], results[row["param"]].value
            if not results[n].exact or N + 1 > F_SMALL_MAX:
                continue
            fN, fN1 = search.exact_f(N), search.exact_f(N + 1)
            ok = fN.value == n and fN1.value > n
            row["duality"] = f"f({N})={fN.value},f({N + 1})={fN1.value} " + ("ok" if ok else "MISMATCH")


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------

def _add_budget(p: argparse.ArgumentParser) -> None:
    p.add_argument("--budget-nodes", type=int, default=None)
    p.add_argument("--budget-seconds", type=float, default=None)
    p.add_argument("--threads", type=int, default=1)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="colorpaths", description=__doc__.splitlines()[0])
    ap.add_argument("-v", "--verbose", action="store_true", help="progress messages on stderr")
    sub = ap.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="generate a construction")
    g.add_argument("kind", choices=["cube-coloring", "cube-triples", "biclique", "majority"])
    g.add_argument("--m", type=int)
    g.add_argument("--r", type=int, default=3)
    g.add_argument("--n", type=int)
    g.add_argument("--k", type=int)
    g.add_argument("--perms", help="majority permutations, e.g. '1,2,3;2,3,1;3,1,2'")
    g.add_argument("--out")
    g.set_defaults(func=cmd_gen)

    v = sub.add_parser("verify", help="check a property; exit 1 with a certificate on failure")
    v.add_argument("property", choices=list(_VERIFY))
    v.add_argument("input")
    v.add_argument("--l", type=int)
    v.add_argument("--out", help="write the certificate here")
    v.set_defaults(func=cmd_verify)

    c = sub.add_parser("convert", help="convert between representations")
    c.add_argument("--from", dest="src", required=True, choices=["coloring", "triples"])
    c.add_argument("--to", dest="dst", required=True, choices=["coloring", "triples", "bipartite"])
    c.add_argument("input")
    c.add_argument("--out")
    c.add_argument("--cert", help="certificate file for invalid input")
    c.set_defaults(func=cmd_convert)

    s = sub.add_parser("search", help="solve for f, F, M or a transitive subtournament")
    s.add_argument("problem", choices=["f", "F", "M", "transitive"])
    s.add_argument("--N", type=int)
    s.add_argument("--n", type=int)
    s.add_argument("--k", type=int)
    s.add_argument("--l", type=int)
    s.add_argument("--in", dest="input")
    s.add_argument("--heuristic", action="store_true", help="constructive lower bound only (F, M)")
    s.add_argument("--out", help="witness file")
    s.add_argument("--report", help="full search result file")
    _add_budget(s)
    s.set_defaults(func=cmd_search)

    t = sub.add_parser("table", help="sweep a parameter range into CSV")
    t.add_argument("problem", choices=["f", "F", "M"])
    t.add_argument("--range", required=True, help="LO..HI")
    t.add_argument("--k", type=int)
    t.add_argument("--l", type=int)
    t.add_argument("--heuristic", action="store_true")
    t.add_argument("--witness-dir")
    t.add_argument("--out")
    _add_budget(t)
    t.set_defaults(func=cmd_table)
    return ap


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, stream=sys.stderr,
                        format="%(name)s: %(message)s")
    try:
        return args.func(args)
    except (UsageError, ParseError) as exc:
        print(f"colorpaths: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
