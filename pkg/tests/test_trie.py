import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rectindex import build_trie, leaf_range, prefix_search
from rectindex.reference import naive_trie
from rectindex.trie import leaves_under


def enc(*words):
    return [list(w.encode()) for w in words]


@pytest.fixture
def abc():
    return build_trie(enc("ab", "abc", "b"))


def test_hand_built_shape(abc):
    assert abc.n_leaves == 3
    assert abc.n_nodes == 5
    internal = [v for v in range(1, abc.n_nodes) if not abc.is_leaf(v)]
    assert len(internal) == 1 and abc.depth[internal[0]] == 2
    assert abc.to_nested() == naive_trie(enc("ab", "abc", "b"))


def test_prefix_search_examples(abc):
    locus = prefix_search(abc, b"ab")
    assert leaf_range(abc, locus) == (1, 2)
    assert sorted(leaves_under(abc, locus).tolist()) == [0, 1]
    assert prefix_search(abc, b"ba") is None
    root = prefix_search(abc, b"")
    assert leaf_range(abc, root) == (1, 3)
    assert sorted(leaves_under(abc, root).tolist()) == [0, 1, 2]


def test_leaf_ranges_are_preorder(abc):
    for sid, p in enumerate(abc.leaf_of_string().tolist()):
        leaf = prefix_search(abc, enc("ab", "abc", "b")[sid])
        assert abc.leaf_range(leaf)[0] <= p <= abc.leaf_range(leaf)[1]
    assert abc.leaf_of_string().tolist() == [1, 2, 3]


def test_single_string():
    t = build_trie(enc("xyz"))
    assert t.n_leaves == 1 and t.n_nodes == 2


def test_nested_prefixes():
    words = enc("a", "aa", "aaa")
    assert build_trie(words).to_nested() == naive_trie(words)


def test_payloads():
    t = build_trie(enc("ab", "abc", "b"), payloads=np.array([10, 20, 30]))
    assert sorted(leaves_under(t, prefix_search(t, b"ab")).tolist()) == [10, 20]
    assert leaves_under(t, prefix_search(t, b"abc")).tolist() == [20]


strings = st.lists(st.lists(st.integers(0, 2), max_size=8), max_size=14)


@settings(max_examples=300, deadline=None)
@given(strings)
def test_matches_naive_insertion(words):
    t = build_trie(words)
    assert t.to_nested() == naive_trie(words)
    assert t.n_leaves == len(words)
    if words:
        # the root may be unary; every other internal node branches
        assert t.n_nodes <= 2 * len(words)
        internal = [v for v in range(1, t.n_nodes) if not t.is_leaf(v)]
        assert all(len(t.children(v)) >= 2 for v in internal)


@settings(max_examples=200, deadline=None)
@given(strings, st.lists(st.integers(0, 2), max_size=5))
def test_prefix_search_reports_matching_strings(words, q):
    t = build_trie(words)
    want = sorted(i for i, w in enumerate(words) if w[: len(q)] == q)
    locus = t.prefix_search(q)
    got = [] if locus is None else sorted(t.leaves_under(locus).tolist())
    assert got == want
    if locus is not None:
        lo, hi = t.leaf_range(locus)
        assert hi - lo + 1 == len(want)


def test_structural_equality_large():
    rng = np.random.default_rng(5)
    for _ in range(20):
        words, total = [], 0
        while total < 512:
            w = [int(x) for x in rng.integers(0, int(rng.integers(1, 4)), int(rng.integers(0, 20)))]
            words.append(w)
            total += len(w)
        assert build_trie(words).to_nested() == naive_trie(words)
