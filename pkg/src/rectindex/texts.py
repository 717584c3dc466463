"""Collections of one-dimensional texts that the 1D indexes run on.

A collection gives random access and LCE over its texts, read either
forward or reversed.  ``SequenceCollection`` wraps explicit sequences;
``StripCollection`` exposes the width-``w`` column strips of a 2D text as
virtual meta-character strings, backed by KMR ranks and strip LCE oracles.
Tries are built over ``SuffixStrings``: suffixes of these (possibly
reversed) texts.
"""
from __future__ import annotations

from typing import Sequence

import numpy as np

from .kmr import KmrTable
from .lce import StripLceOracle, as_symbols, build_lce


class SequenceCollection:
    """Explicit integer texts with forward and reversed LCE oracles."""

    def __init__(self, texts: Sequence[Sequence[int]]):
        self.texts = [as_symbols(t) for t in texts]
        self.lengths = np.array([len(t) for t in self.texts], dtype=np.int64)
        self._lists = [t.tolist() for t in self.texts]
        self._oracles = {}

    def __len__(self):
        return len(self.texts)

    def _oracle(self, reverse: bool):
        oracle = self._oracles.get(reverse)
        if oracle is None:
            texts = [t[::-1] for t in self.texts] if reverse else self.texts
            oracle = build_lce(texts)
            self._oracles[reverse] = oracle
        return oracle

    def symbols(self, reverse, texts, pos):
        oracle = self._oracle(reverse)
        return oracle.seq[oracle.starts[texts] + pos]

    def symbol(self, reverse, t, pos):
        seq = self._lists[t]
        return seq[len(seq) - 1 - pos] if reverse else seq[pos]

    def lce(self, reverse, ta, pa, tb, pb):
        oracle = self._oracle(reverse)
        out = np.zeros(np.shape(ta), dtype=np.int64)
        live = (pa < self.lengths[ta]) & (pb < self.lengths[tb])
        if live.any():
            out[live] = oracle.lce0(oracle.starts[ta[live]] + pa[live], oracle.starts[tb[live]] + pb[live])
        return out

    @property
    def words(self) -> int:
        return 0


class StripCollection:
    """The ``W - w + 1`` strips of width ``w``; text ``c`` reads column window ``c`` top to bottom."""

    def __init__(self, kmr: KmrTable, w: int, forward: StripLceOracle, backward: StripLceOracle):
        assert 1 <= w <= kmr.width
        self.kmr = kmr
        self.w = w
        self.level = w.bit_length() - 1
        self.shift = w - (1 << self.level)
        self.alphabet = kmr.num_distinct[self.level]
        self.height = kmr.height
        self.lengths = np.full(kmr.width - w + 1, kmr.height, dtype=np.int64)
        self._oracles = {False: forward, True: backward}
        self._ranks = {False: kmr.levels[self.level], True: kmr.levels[self.level][::-1]}

    def __len__(self):
        return len(self.lengths)

    def symbols(self, reverse, texts, pos):
        ranks = self._ranks[reverse]
        return ranks[pos, texts] * self.alphabet + ranks[pos, texts + self.shift]

    def symbol(self, reverse, t, pos):
        rows = self.kmr.rank_rows(self.level)
        row = rows[self.height - 1 - pos] if reverse else rows[pos]
        return row[t] * self.alphabet + row[t + self.shift]

    def lce(self, reverse, ta, pa, tb, pb):
        out = np.zeros(np.shape(ta), dtype=np.int64)
        live = (pa < self.height) & (pb < self.height)
        if live.any():
            out[live] = self._oracles[reverse].lce0(self.w, ta[live], pa[live], tb[live], pb[live])
        return out

    @property
    def words(self) -> int:
        return 0


class SuffixStrings:
    """String set: suffix ``starts[s]..`` of text ``texts[s]``, in the given reading direction."""

    def __init__(self, collection, texts, starts, reverse: bool = False):
        self.collection = collection
        self.reverse = reverse
        self.texts = np.asarray(texts, dtype=np.int64)
        self.starts = np.asarray(starts, dtype=np.int64)
        self.lengths = collection.lengths[self.texts] - self.starts
        self._texts = self.texts.tolist()
        self._starts = self.starts.tolist()

    def __len__(self):
        return len(self.texts)

    def symbols(self, ids, offsets):
        return self.collection.symbols(self.reverse, self.texts[ids], self.starts[ids] + offsets)

    def symbol(self, sid: int, offset: int) -> int:
        return self.collection.symbol(self.reverse, self._texts[sid], self._starts[sid] + offset)

    def lce(self, a, b):
        return self.collection.lce(self.reverse, self.texts[a], self.starts[a], self.texts[b], self.starts[b])

    @property
    def words(self) -> int:
        return self.texts.size + self.starts.size
