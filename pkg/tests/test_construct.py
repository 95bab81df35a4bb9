import itertools
import random

import pytest

import oracles
from colorpaths.construct import (
    SizeLimitError,
    biclique_union,
    cube_coloring,
    cube_triple_sequence,
    majority_tournament,
    majority_vertices,
)
from colorpaths.core import MajorityTournamentSpec, TripleSequence
from colorpaths.paths import longest_color_avoiding, longest_monochromatic
from colorpaths.verify import (
    check_l_separated,
    check_sigma_free,
    check_tournament,
    check_triple_sequence,
    degree_square_diagnostic,
)


def index_of(m, r, tup):
    return list(itertools.product(range(1, m + 1), repeat=r)).index(tup) + 1


def test_cube_examples():
    c = cube_coloring(2)
    assert c.color(index_of(2, 3, (1, 1, 1)), index_of(2, 3, (1, 1, 2))) == 3
    assert c.color(index_of(2, 3, (1, 2, 2)), index_of(2, 3, (2, 1, 1))) == 1
    assert cube_coloring(1).num_vertices == 1


def test_cube_limits():
    with pytest.raises(SizeLimitError):
        cube_coloring(30)
    with pytest.raises(ValueError):
        cube_coloring(0)


@pytest.mark.parametrize("m", [1, 2, 3])
def test_cube_avoiding_tightness(m):
    c = cube_coloring(m)
    assert longest_color_avoiding(c).lengths == (m * m,) * 3
    if m <= 2:
        assert oracles.brute_longest(c.color, c.num_vertices, 3, False) == [m * m] * 3


@pytest.mark.parametrize("m, r", [(m, r) for m in (1, 2, 3) for r in (2, 3)])
def test_cube_monochromatic_tightness(m, r):
    c = cube_coloring(m, r)
    assert longest_monochromatic(c).lengths == (m,) * r


def test_cube_triple_sequences():
    assert cube_triple_sequence(1).triples == ((1, 1, 1),)
    for m in (2, 3):
        seq = cube_triple_sequence(m)
        assert len(seq) == m ** 3 and seq.n == m * m
        assert check_triple_sequence(seq) is None


def test_biclique_shapes():
    g = biclique_union(1)
    assert g.edges == ((1, 1, 1),)
    g = biclique_union(4)
    assert len(g.edges) == 8 and g.num_labels == 4
    assert all(len(es) == 2 for es in g.classes.values())
    with pytest.raises(ValueError):
        biclique_union(5)


@pytest.mark.parametrize("n", [1, 4, 9, 16])
def test_biclique_properties(n):
    g = biclique_union(n)
    s = int(n ** 0.5)
    assert len(g.edges) == n * s
    for l in range(2, 7):
        assert check_l_separated(g, l) is None
    assert check_sigma_free(g) is None
    d = degree_square_diagnostic(g)
    assert d.tight


def test_majority_small():
    t = majority_tournament(MajorityTournamentSpec.cyclic(3, 1))
    assert t.num_vertices == 1
    spec = MajorityTournamentSpec(3, 2, [[1, 2, 3], [2, 3, 1], [3, 1, 2]])
    t = majority_tournament(spec)
    assert check_tournament(t) is None
    verts = majority_vertices(spec)
    x, y = verts.index((1, 2, 2)) + 1, verts.index((2, 1, 1)) + 1
    assert t.edge(y, x) and not t.edge(x, y)
    lo, hi = verts.index((1, 1, 1)) + 1, verts.index((2, 2, 2)) + 1
    assert t.edge(lo, hi)


def test_majority_matches_definition():
    rng = random.Random(8)
    for k, n in [(3, 2), (3, 3), (5, 2), (1, 4)]:
        perms = []
        for i in range(1, k + 1):
            rest = [c for c in range(1, k + 1) if c != i]
            rng.shuffle(rest)
            perms.append([i] + rest)
        spec = MajorityTournamentSpec(k, n, perms)
        t = majority_tournament(spec)
        assert check_tournament(t) is None
        verts = majority_vertices(spec)
        for a, b in itertools.combinations(range(len(verts)), 2):
            assert t.edge(a + 1, b + 1) == oracles.lex_majority_edge(verts[a], verts[b], perms)


def test_majority_size_cap(monkeypatch):
    spec = MajorityTournamentSpec.cyclic(3, 3)
    with pytest.raises(SizeLimitError):
        majority_tournament(spec, limit=10)
    monkeypatch.setenv("COLORPATHS_MAX_PAIRS", "10")
    with pytest.raises(SizeLimitError):
        majority_tournament(spec)


def embeds(t, verts, seq):
    idx = [verts.index(tuple(p)) + 1 for p in seq]
    return all(t.edge(idx[i], idx[j]) for i in range(len(idx)) for j in range(i + 1, len(idx)))


def test_valid_sequences_embed_forward():
    spec = MajorityTournamentSpec.cyclic(3, 2)
    t, verts = majority_tournament(spec), majority_vertices(spec)
    for seq in oracles.all_valid_sequences(2):
        assert embeds(t, verts, seq)
    spec = MajorityTournamentSpec.cyclic(3, 3)
    t, verts = majority_tournament(spec), majority_vertices(spec)
    rng = random.Random(9)
    for _ in range(300):
        assert embeds(t, verts, oracles.random_valid_sequence(3, rng))


def test_invalid_sequence_need_not_embed():
    spec = MajorityTournamentSpec.cyclic(3, 3)
    t, verts = majority_tournament(spec), majority_vertices(spec)
    seq = TripleSequence(3, [(2, 1, 3), (3, 2, 1), (1, 3, 2)])
    assert check_triple_sequence(seq) is not None
    assert not embeds(t, verts, seq.triples)
