import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from colorpaths.core import TournamentColoring, TripleSequence, ViolationError
from colorpaths.paths import avoidance_records
from colorpaths.transform import coloring_to_triples, triples_to_bipartite, triples_to_coloring
from colorpaths.verify import (
    check_induced_matchings,
    check_ordered_matchings,
    check_sigma_free,
    check_triple_sequence,
    recheck,
)

EXAMPLE = TripleSequence(9, [(3, 2, 7), (7, 3, 2), (1, 8, 8), (2, 9, 9)])


def test_constant_coloring_to_triples():
    col = TournamentColoring.from_function(3, lambda i, j: 1)
    seq = coloring_to_triples(col)
    assert seq.triples == ((1, 1, 1), (1, 2, 2), (1, 3, 3))
    assert seq.n == 3


def test_single_vertex():
    assert coloring_to_triples(TournamentColoring(1, [])).triples == ((1, 1, 1),)


def test_rejects_non_three_colorings():
    with pytest.raises(ValueError):
        coloring_to_triples(TournamentColoring.from_function(3, lambda i, j: 1, 2))


def test_tie_break_all_increasing():
    col = triples_to_coloring(TripleSequence(2, [(1, 1, 1), (2, 2, 2)]))
    assert col.color(1, 2) == 1


def test_example_edge_colors():
    col = triples_to_coloring(EXAMPLE)
    assert col.color(1, 2) == 3
    for i, j in [(1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]:
        assert col.color(i, j) == 1


def test_invalid_sequence_raises_with_certificate():
    seq = TripleSequence(2, [(1, 1, 1), (1, 1, 2)])
    with pytest.raises(ViolationError) as info:
        triples_to_coloring(seq)
    cert = info.value.certificate
    assert (cert.details["i"], cert.details["j"]) == (1, 2)
    assert recheck(cert, seq)
    with pytest.raises(ViolationError):
        triples_to_bipartite(seq)


def test_bipartite_examples():
    g = triples_to_bipartite(TripleSequence(5, [(1, 2, 5)]))
    assert g.edges == ((1, 2, 5),)
    g = triples_to_bipartite(EXAMPLE)
    assert (g.left, g.right, g.num_labels) == (9, 9, 9)
    assert set(g.edges) == {(3, 2, 7), (7, 3, 2), (1, 8, 8), (2, 9, 9)}


def test_cube_image_m2():
    from colorpaths.construct import cube_triple_sequence
    g = triples_to_bipartite(cube_triple_sequence(2))
    assert len(g.edges) == 8 and g.left == g.right == 4
    assert check_induced_matchings(g) is None
    assert check_ordered_matchings(g) is None
    assert check_sigma_free(g) is None


def assert_dominated(seq):
    recs = avoidance_records(triples_to_coloring(seq))
    for t, l in zip(recs, seq.triples):
        assert all(a <= b for a, b in zip(t, l)), (t, l)


def assert_image_ok(seq):
    g = triples_to_bipartite(seq)
    assert len(g.edges) == len(seq)
    assert check_induced_matchings(g) is None
    assert check_ordered_matchings(g) is None
    assert check_sigma_free(g) is None


@pytest.mark.parametrize("n", [1, 2])
def test_dominance_and_image_exhaustive(n):
    seqs = oracles.all_valid_sequences(n)
    if n == 2:
        assert len(seqs) == 18
    for ts in seqs:
        seq = TripleSequence(n, ts)
        assert_dominated(seq)
        assert_image_ok(seq)


def test_dominance_and_image_random():
    rng = random.Random(11)
    for _ in range(300):
        n = rng.randint(3, 6)
        seq = TripleSequence(n, oracles.random_valid_sequence(n, rng))
        assert check_triple_sequence(seq) is None
        assert_dominated(seq)
        assert_image_ok(seq)


@st.composite
def colorings(draw):
    N = draw(st.integers(1, 10))
    flat = draw(st.lists(st.integers(1, 3), min_size=N * (N - 1) // 2, max_size=N * (N - 1) // 2))
    return TournamentColoring.from_flat(N, flat)


@settings(max_examples=300, deadline=None)
@given(colorings())
def test_coloring_to_triples_sound(col):
    seq = coloring_to_triples(col)
    assert check_triple_sequence(seq) is None
    # alphabet is the longest avoiding path
    best = max(oracles.brute_longest(col.color, col.num_vertices, 3, False)) if col.num_vertices <= 7 else None
    if best is not None:
        assert seq.n == best
    assert_dominated(seq)
