"""One-dimensional indexes over a collection of texts.

``LongPatternIndex`` answers patterns of length at least ``w`` with cuts
every ``w`` positions, a trie of reversed prefixes, a trie of suffixes and
rectangle reporting over the cut points.  ``SuffixTrieIndex`` stores every
suffix and answers patterns of any length.

Both report ``(text_id, position)`` pairs, 1-based.
"""
from __future__ import annotations

from typing import List, Optional, Tuple

import numpy as np

from .rangereport import PointSet2D
from .texts import SequenceCollection, SuffixStrings
from .trie import build_trie
from .work import WorkCounter


def _as_collection(texts):
    if hasattr(texts, "lengths") and hasattr(texts, "lce"):
        return texts
    return SequenceCollection(texts)


class LongPatternIndex:
    """Cut-based index for patterns of length ``h >= w``."""

    def __init__(self, texts, w: int):
        assert w >= 1
        self.collection = _as_collection(texts)
        self.w = w
        lengths = self.collection.lengths
        kept = np.flatnonzero(lengths >= w)
        per_text = lengths[kept] // w + 1
        self.cut_text = np.repeat(kept, per_text)
        first = np.repeat(np.cumsum(per_text) - per_text, per_text)
        self.cut_pos = (np.arange(len(self.cut_text)) - first) * w
        tlen = lengths[self.cut_text]
        self.suffixes = SuffixStrings(self.collection, self.cut_text, self.cut_pos)
        # reversed prefix T[..i] == suffix of the reversed text starting at len - i
        self.prefixes = SuffixStrings(self.collection, self.cut_text, tlen - self.cut_pos, reverse=True)
        self.s1 = build_trie(self.prefixes)
        self.s2 = build_trie(self.suffixes)
        x = self.s1.leaf_of_string()
        y = self.s2.leaf_of_string()
        cuts = np.arange(len(self.cut_text))
        self.points = PointSet2D(np.column_stack((x, y, cuts)))
        self._cut_text = self.cut_text.tolist()
        self._cut_pos = self.cut_pos.tolist()

    @property
    def n_cuts(self) -> int:
        return len(self.cut_text)

    def query_keys(self, pattern, counter: Optional[WorkCounter] = None) -> List[Tuple[int, int]]:
        pattern = list(pattern)
        h = len(pattern)
        assert h >= self.w, "pattern shorter than the index width"
        backwards = pattern[::-1]
        full_x = (1, self.s1.n_leaves)
        out = []
        for j in range(self.w):
            if j == 0:
                x_lo, x_hi = full_x
            else:
                v1 = self.s1.prefix_search(backwards[h - j :], counter)
                if v1 is None:
                    continue
                x_lo, x_hi = self.s1.leaf_range(v1)
            v2 = self.s2.prefix_search(pattern[j:], counter)
            if v2 is None:
                continue
            y_lo, y_hi = self.s2.leaf_range(v2)
            for cut in self.points.query(x_lo, x_hi, y_lo, y_hi, counter):
                out.append((self._cut_text[cut] + 1, self._cut_pos[cut] - j + 1))
        return out

    @property
    def words(self) -> int:
        return (self.cut_text.size + self.cut_pos.size + self.s1.words + self.s2.words
                + self.points.words + self.prefixes.words + self.suffixes.words)


class SuffixTrieIndex:
    """Compacted trie of every suffix of every text."""

    def __init__(self, texts):
        self.collection = _as_collection(texts)
        lengths = self.collection.lengths
        texts_of = np.repeat(np.arange(len(lengths)), lengths)
        first = np.repeat(np.cumsum(lengths) - lengths, lengths)
        starts = np.arange(len(texts_of)) - first
        self.suffixes = SuffixStrings(self.collection, texts_of, starts)
        self.trie = build_trie(self.suffixes)

    def query_keys(self, pattern, counter: Optional[WorkCounter] = None) -> List[Tuple[int, int]]:
        pattern = list(pattern)
        assert len(pattern) >= 1
        locus = self.trie.prefix_search(pattern, counter)
        if locus is None:
            return []
        ids = self.trie.leaves_under(locus)
        texts = (self.suffixes.texts[ids] + 1).tolist()
        starts = (self.suffixes.starts[ids] + 1).tolist()
        return list(zip(texts, starts))

    @property
    def words(self) -> int:
        return self.trie.words + self.suffixes.words


def build_long_index(texts, w: int) -> LongPatternIndex:
    return LongPatternIndex(texts, w)


def query_long(index: LongPatternIndex, pattern, counter=None) -> List[Tuple[int, int]]:
    return index.query_keys(_symbols(pattern), counter)


def build_suffix_index(texts) -> SuffixTrieIndex:
    return SuffixTrieIndex(texts)


def query_suffix(index: SuffixTrieIndex, pattern, counter=None) -> List[Tuple[int, int]]:
    return index.query_keys(_symbols(pattern), counter)


def _symbols(pattern):
    if isinstance(pattern, str):
        pattern = pattern.encode("latin-1")
    return list(pattern)
