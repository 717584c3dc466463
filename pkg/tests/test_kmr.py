import numpy as np
from hypothesis import given, settings

from rectindex import Grid2D, build_kmr, encode_pattern, meta_id, parse_grid
from rectindex.kmr import MetaId, rank_for_pattern_fragment

from conftest import grids

ABAB = parse_grid("abab\nbaba")


def test_level1_ranks_example():
    t = build_kmr(ABAB)
    assert [t.rank(1, 1, j) for j in (1, 2, 3)] == [0, 1, 0]
    assert t.num_distinct[1] == 2


def test_uniform_text_single_rank():
    t = build_kmr(Grid2D.from_rows(["aaaa"] * 4))
    assert t.num_distinct == [1, 1, 1]
    assert all((lvl == 0).all() for lvl in t.levels)


def test_level_sizes():
    t = build_kmr(parse_grid("abcde\nedcba\naaaaa"))
    for k, lvl in enumerate(t.levels):
        assert lvl.size == 3 * (5 - 2**k + 1)


def test_meta_id_examples():
    t = build_kmr(ABAB)
    assert meta_id(t, 1, 1, 3) == MetaId(0, 1)
    m = meta_id(t, 2, 3, 1)
    assert m.prefix_rank == m.suffix_rank
    m = meta_id(t, 1, 2, 2)
    assert m.prefix_rank == m.suffix_rank


def test_fragment_lookup():
    t = build_kmr(ABAB, tries=True)
    assert rank_for_pattern_fragment(t, b"ba") == 1
    assert rank_for_pattern_fragment(t, b"bb") is None
    for j in (1, 2, 3):
        frag = ABAB.cells[0, j - 1 : j + 1].tolist()
        assert rank_for_pattern_fragment(t, frag) == t.rank(1, 1, j)


def test_encode_pattern_examples():
    t = build_kmr(ABAB, tries=True)
    assert encode_pattern(t, parse_grid("ab\nba")) == [(0, 0), (1, 1)]
    assert encode_pattern(t, parse_grid("az")) is None
    assert encode_pattern(t, parse_grid("a")) == [MetaId(0, 0)]


def test_exhaustive_soundness_small():
    # rank equality iff fragment equality, ranks dense and lexicographic
    rng = np.random.default_rng(3)
    for h, w, sigma in [(16, 16, 2), (16, 16, 4), (5, 13, 3), (16, 1, 2), (1, 16, 2)]:
        g = Grid2D(rng.integers(0, sigma, size=(h, w)))
        t = build_kmr(g)
        rows = g.cells.tolist()
        for k, lvl in enumerate(t.levels):
            span = 1 << k
            frags = {}
            for i in range(h):
                for j in range(w - span + 1):
                    frags.setdefault(tuple(rows[i][j : j + span]), set()).add(int(lvl[i, j]))
            assert all(len(r) == 1 for r in frags.values())
            ordered = [next(iter(frags[f])) for f in sorted(frags)]
            assert ordered == list(range(len(frags))) == list(range(t.num_distinct[k]))


@settings(max_examples=60, deadline=None)
@given(grids(max_h=6, max_w=9, sigma=2))
def test_meta_ids_identify_fragments(g):
    t = build_kmr(g)
    rows = g.cells.tolist()
    for w in range(1, g.width + 1):
        seen = {}
        for i in range(1, g.height + 1):
            for j in range(1, g.width - w + 2):
                frag = tuple(rows[i - 1][j - 1 : j - 1 + w])
                seen.setdefault(frag, set()).add(meta_id(t, i, j, w))
        assert all(len(v) == 1 for v in seen.values())
        ids = {next(iter(v)): f for f, v in seen.items()}
        assert len(ids) == len(seen)
        assert [ids[m] for m in sorted(ids)] == sorted(seen)
