import pytest

from rectindex import naive_search_1d, naive_search_2d, parse_grid
from rectindex.reference import naive_lce, naive_rect, naive_trie


def test_naive_2d_examples():
    text = parse_grid("abab\nbaba\nabab")
    assert naive_search_2d(text, parse_grid("ab\nba")) == [(1, 1), (1, 3), (2, 2)]
    assert naive_search_2d(text, text) == [(1, 1)]
    assert naive_search_2d(text, parse_grid("ababa")) == []
    uniform = parse_grid("aaaa\n" * 4)
    assert naive_search_2d(uniform, parse_grid("aa\naa")) == [(i, j) for i in (1, 2, 3) for j in (1, 2, 3)]


def test_naive_1d_examples():
    assert naive_search_1d(b"ababa", b"aba") == [1, 3]
    assert naive_search_1d(b"abc", b"abc") == [1]
    with pytest.raises(AssertionError):
        naive_search_1d(b"abc", b"")


def test_naive_lce_and_rect():
    assert naive_lce(b"banana", 2, 4) == 3
    assert naive_rect([], (1, 9, 1, 9)) == []
    assert naive_rect([(1, 1, 7)], (1, 1, 1, 1)) == [7]


def test_naive_trie_shape():
    assert naive_trie([[1, 2], [1, 2, 3], [2]]) == (
        (),
        (((1, 2), (((), ("$", 0)), ((3,), ("$", 1)))), ((2,), ("$", 2))),
    )
