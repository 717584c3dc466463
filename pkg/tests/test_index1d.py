import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st

from rectindex.index1d import build_long_index, build_suffix_index, query_long, query_suffix
from rectindex.reference import naive_search_1d


def test_cut_counts():
    assert build_long_index([b"abcdefg"], 2).n_cuts == 4
    ix = build_long_index([b"abcdefg"], 2)
    assert ix.cut_pos.tolist() == [0, 2, 4, 6]
    assert len(ix.points) == 4
    assert build_long_index([b"abab"], 4).cut_pos.tolist() == [0, 4]
    assert build_long_index([b"abcde", b"abcdef"], 3).n_cuts == 5


def test_long_examples():
    ix = build_long_index([b"ababa"], 2)
    assert sorted(query_long(ix, "aba")) == [(1, 1), (1, 3)]
    assert query_long(build_long_index([b"abab"], 4), "abab") == [(1, 1)]
    assert query_long(ix, "abz") == []


def test_long_skips_short_texts():
    ix = build_long_index([b"ab", b"abcab"], 3)
    assert ix.n_cuts == 2
    assert query_long(ix, "cab") == [(2, 3)]


def test_suffix_examples():
    ix = build_suffix_index([b"aa"])
    assert ix.trie.n_leaves == 2
    assert ix.trie.to_nested() == ((), (((97,), (((), ("$", 1)), ((97,), ("$", 0)))),))
    assert build_suffix_index([]).trie.n_leaves == 0
    assert build_suffix_index([b"ab", b"ba"]).trie.n_leaves == 4
    assert sorted(query_suffix(build_suffix_index([b"ababa"]), "aba")) == [(1, 1), (1, 3)]
    assert query_suffix(build_suffix_index([b"ab"]), "abc") == []
    assert sorted(query_suffix(build_suffix_index([b"aaa"]), "a")) == [(1, 1), (1, 2), (1, 3)]


def naive_multi(texts, pattern):
    return sorted((t + 1, p) for t, text in enumerate(texts) for p in naive_search_1d(text, pattern))


texts_st = st.lists(st.lists(st.integers(0, 2), max_size=14), min_size=1, max_size=4)


@settings(max_examples=150, deadline=None)
@given(texts_st, st.integers(1, 5), st.lists(st.integers(0, 2), min_size=1, max_size=9))
def test_long_matches_naive(texts, w, pattern):
    if len(pattern) < w:
        pattern = pattern + [0] * (w - len(pattern))
    ix = build_long_index(texts, w)
    got = query_long(ix, pattern)
    assert len(got) == len(set(got))
    assert sorted(got) == naive_multi(texts, pattern)


@settings(max_examples=150, deadline=None)
@given(texts_st, st.lists(st.integers(0, 2), min_size=1, max_size=6))
def test_suffix_matches_naive(texts, pattern):
    got = query_suffix(build_suffix_index(texts), pattern)
    assert len(got) == len(set(got))
    assert sorted(got) == naive_multi(texts, pattern)


def test_planted_patterns():
    rng = np.random.default_rng(4)
    texts = [rng.integers(0, 2, int(n)).tolist() for n in rng.integers(20, 60, 5)]
    for w in (1, 2, 3, 5, 8):
        ix = build_long_index(texts, w)
        for _ in range(40):
            t = texts[int(rng.integers(len(texts)))]
            h = int(rng.integers(w, min(len(t), 3 * w) + 1))
            s = int(rng.integers(0, len(t) - h + 1))
            assert sorted(query_long(ix, t[s : s + h])) == naive_multi(texts, t[s : s + h])
