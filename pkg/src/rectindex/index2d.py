"""Rectangular pattern index for a 2D text.

A ``Component`` indexes every column strip of one orientation of the text:
width-``w`` strips are read top to bottom as strings of meta-characters
(row fragment identifiers), and each width gets a 1D index over those
strings.  Narrow widths use a suffix trie, wider ones the cut index.
``RectangleIndex`` keeps one component for the text and one for its
transpose and sends each pattern to the one where it is at least as tall
as it is wide.
"""
from __future__ import annotations

import math
from typing import Dict, List, Optional, Union

import numpy as np
from sklearn.base import BaseEstimator
from sklearn.utils.validation import check_is_fitted

from .grid import Grid2D, Occurrence
from .index1d import LongPatternIndex, SuffixTrieIndex
from .kmr import build_kmr, encode_pattern_keys
from .lce import StripLceOracle
from .texts import StripCollection
from .validation import check_grid
from .work import WorkCounter


def default_threshold(n: int) -> int:
    return max(1, int(math.floor(math.log2(n)))) if n > 1 else 1


class Component:
    """Per-width strip indexes for one orientation of the text."""

    def __init__(self, text: Grid2D, threshold: int):
        self.text = text
        self.threshold = threshold
        self.kmr = build_kmr(text, tries=True)
        forward = StripLceOracle(self.kmr)
        backward = StripLceOracle(self.kmr, reverse=True)
        self.indexes: Dict[int, Union[SuffixTrieIndex, LongPatternIndex]] = {}
        self.lce_peak_words = 0
        level = 0
        for w in range(1, text.width + 1):
            k = w.bit_length() - 1
            if k != level:
                forward.drop(level)
                backward.drop(level)
                level = k
            strips = StripCollection(self.kmr, w, forward, backward)
            if w <= threshold:
                self.indexes[w] = SuffixTrieIndex(strips)
            else:
                self.indexes[w] = LongPatternIndex(strips, w)
            self.lce_peak_words = max(self.lce_peak_words, forward.words + backward.words)
        forward.drop(level)
        backward.drop(level)

    def query(self, pattern: Grid2D, counter: Optional[WorkCounter] = None) -> List[Occurrence]:
        """Occurrences of a pattern with ``height >= width`` (caller checks sizes)."""
        keys = encode_pattern_keys(self.kmr, pattern, counter)
        if keys is None:
            return []
        hits = self.indexes[pattern.width].query_keys(keys.tolist(), counter)
        return [Occurrence(row, col) for col, row in hits]

    def space(self) -> Dict[str, int]:
        kmr_ranks = self.kmr.entries
        kmr_tries = sum(t.words for t in self.kmr.tries)
        suffix = sum(ix.words for ix in self.indexes.values() if isinstance(ix, SuffixTrieIndex))
        long_ = sum(ix.words for ix in self.indexes.values() if isinstance(ix, LongPatternIndex))
        return {"kmr_ranks": kmr_ranks, "kmr_tries": kmr_tries, "suffix_index": suffix, "long_index": long_}


class RectangleIndex(BaseEstimator):
    """Index of a 2D text answering exact rectangular pattern queries.

    Parameters
    ----------
    small_width_threshold : int or None
        Widths up to this value are indexed with a suffix trie per strip
        width; larger widths use the cut index.  ``None`` means
        ``floor(log2(H * W))``.

    Attributes
    ----------
    text_ : Grid2D
    tall_ : Component
        Index over the text, used for patterns with ``h >= w``.
    wide_ : Component
        Index over the transposed text, used for patterns with ``h < w``.
    """

    def __init__(self, small_width_threshold: Optional[int] = None):
        self.small_width_threshold = small_width_threshold

    def fit(self, X, y=None):
        text = check_grid(X, "text")
        threshold = self.small_width_threshold
        if threshold is None:
            threshold = default_threshold(text.size)
        if threshold < 0:
            raise ValueError("small_width_threshold must be non-negative")
        self.text_ = text
        self.threshold_ = threshold
        self.tall_ = Component(text, threshold)
        self.wide_ = Component(text.transpose(), threshold)
        return self

    def query(self, pattern, counter: Optional[WorkCounter] = None) -> List[Occurrence]:
        """Sorted 1-based top-left corners of every occurrence of ``pattern``."""
        check_is_fitted(self, "tall_")
        pattern = check_grid(pattern, "pattern")
        h, w = pattern.shape
        H, W = self.text_.shape
        if h > H or w > W:
            return []
        if h >= w:
            found = self.tall_.query(pattern, counter)
        else:
            found = [Occurrence(o.col, o.row) for o in self.wide_.query(pattern.transpose(), counter)]
        return sorted(found)

    def count(self, pattern) -> int:
        return len(self.query(pattern))

    def predict(self, X) -> np.ndarray:
        """Occurrences as an ``(k, 2)`` integer array of (row, col)."""
        found = self.query(X)
        return np.array(found, dtype=np.int64).reshape(len(found), 2)

    def space_stats(self) -> Dict[str, int]:
        """Stored machine words per part; ``total`` excludes the construction-only LCE oracles."""
        check_is_fitted(self, "tall_")
        stats: Dict[str, int] = {"text": self.text_.size}
        for comp in (self.tall_, self.wide_):
            for key, val in comp.space().items():
                stats[key] = stats.get(key, 0) + val
        stats["total"] = sum(stats.values())
        stats["lce_peak"] = self.tall_.lce_peak_words + self.wide_.lce_peak_words
        return stats


def build_index(text, small_width_threshold: Optional[int] = None) -> RectangleIndex:
    return RectangleIndex(small_width_threshold=small_width_threshold).fit(text)


def query(index: RectangleIndex, pattern, counter: Optional[WorkCounter] = None) -> List[Occurrence]:
    return index.query(pattern, counter)
