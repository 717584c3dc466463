"""Karp-Miller-Rosenberg identifiers for row fragments.

Level ``k`` of a ``KmrTable`` holds, for every row ``i`` and start column
``j``, the lexicographic rank of ``T[i][j..j+2^k-1]`` among the distinct row
fragments of that length.  Any width-``w`` fragment is then identified by
the ranks of its two overlapping power-of-two halves.
"""
from __future__ import annotations

from typing import List, NamedTuple, Optional

import numpy as np

from .grid import Grid2D
from .lce import LceOracle, strip_sequence
from .trie import CompactedTrie, build_trie
from .work import WorkCounter


class MetaId(NamedTuple):
    prefix_rank: int
    suffix_rank: int


def _pair_ranks(first: np.ndarray, second: np.ndarray):
    """Dense lexicographic ranks of pairs via two stable counting passes."""
    order = np.argsort(second, kind="stable")
    order = order[np.argsort(first[order], kind="stable")]
    f = first[order]
    s = second[order]
    fresh = np.empty(len(order), dtype=bool)
    fresh[:1] = True
    fresh[1:] = (f[1:] != f[:-1]) | (s[1:] != s[:-1])
    ranks = np.empty(len(order), dtype=np.int64)
    ranks[order] = np.cumsum(fresh) - 1
    return ranks, int(fresh.sum())


class FragmentStrings:
    """String set of the distinct row fragments of one level, string id = rank."""

    def __init__(self, text: Grid2D, rows: np.ndarray, cols: np.ndarray, length: int, row_oracle: LceOracle):
        self.cells = text.cells
        self.rows = rows
        self.cols = cols
        self.lengths = np.full(len(rows), length, dtype=np.int64)
        self._oracle = row_oracle
        self._stride = text.width + 1
        self._cells = text.cells.tolist()
        self._rows = rows.tolist()
        self._cols = cols.tolist()

    def __len__(self):
        return len(self.rows)

    def symbols(self, ids, offsets):
        return self.cells[self.rows[ids], self.cols[ids] + offsets]

    def symbol(self, sid: int, offset: int) -> int:
        return self._cells[self._rows[sid]][self._cols[sid] + offset]

    def lce(self, a, b):
        pos_a = self.rows[a] * self._stride + self.cols[a]
        pos_b = self.rows[b] * self._stride + self.cols[b]
        return np.minimum(self._oracle.lce0(pos_a, pos_b), self.lengths[a])


class KmrTable:
    """Per-level rank tables plus, once built, per-level fragment tries."""

    def __init__(self, text: Grid2D, levels: List[np.ndarray], num_distinct: List[int]):
        self.text = text
        self.levels = levels
        self.num_distinct = num_distinct
        self.tries: List[CompactedTrie] = []
        self._rank_rows = {}

    @property
    def height(self) -> int:
        return self.text.height

    @property
    def width(self) -> int:
        return self.text.width

    @property
    def n_levels(self) -> int:
        return len(self.levels)

    def rank(self, k: int, i: int, j: int) -> int:
        """Level-``k`` rank of the fragment at 1-based row ``i``, column ``j``."""
        return int(self.levels[k][i - 1, j - 1])

    def rank_rows(self, k: int) -> list:
        """Level ``k`` ranks as nested python lists (scalar-access cache)."""
        rows = self._rank_rows.get(k)
        if rows is None:
            rows = self._rank_rows[k] = self.levels[k].tolist()
        return rows

    def build_tries(self) -> None:
        """Compacted trie of the distinct fragments of every level, leaf payload = rank."""
        row_oracle = LceOracle(
            strip_sequence(self.text.cells.T, int(self.text.cells.max()) + 1),
            np.arange(self.height, dtype=np.int64) * (self.width + 1),
        )
        self.tries = []
        for k, ranks in enumerate(self.levels):
            flat = ranks.ravel()
            first = np.full(self.num_distinct[k], -1, dtype=np.int64)
            # first occurrence of every rank
            pos = np.arange(len(flat) - 1, -1, -1)
            first[flat[::-1]] = pos
            rows, cols = np.divmod(first, ranks.shape[1])
            strings = FragmentStrings(self.text, rows, cols, 1 << k, row_oracle)
            order = np.arange(self.num_distinct[k], dtype=np.int64)
            self.tries.append(build_trie(strings, payloads=order, order=order))

    def meta_key(self, w: int, rows, cols):
        """Integer meta-character keys of width-``w`` fragments (0-based coordinates).

        The key ``prefix_rank * D + suffix_rank`` orders like ``MetaId``.
        """
        k = w.bit_length() - 1
        ranks = self.levels[k]
        shift = w - (1 << k)
        return ranks[rows, cols] * self.num_distinct[k] + ranks[rows, np.asarray(cols) + shift]

    @property
    def words(self) -> int:
        return sum(r.size for r in self.levels) + sum(t.words for t in self.tries)

    @property
    def entries(self) -> int:
        return sum(r.size for r in self.levels)


def build_kmr(text: Grid2D, tries: bool = False) -> KmrTable:
    """Doubling rank tables for every level ``k`` with ``2**k <= W``."""
    cells = text.cells
    _, inverse = np.unique(cells, return_inverse=True)
    level0 = inverse.reshape(cells.shape).astype(np.int64)
    levels = [level0]
    num_distinct = [int(level0.max()) + 1]
    span = 1
    while 2 * span <= text.width:
        prev = levels[-1]
        first = prev[:, : prev.shape[1] - span]
        second = prev[:, span:]
        ranks, distinct = _pair_ranks(first.ravel(), second.ravel())
        levels.append(ranks.reshape(first.shape))
        num_distinct.append(distinct)
        span *= 2
    table = KmrTable(text, levels, num_distinct)
    if tries:
        table.build_tries()
    return table


def meta_id(table: KmrTable, i: int, j: int, w: int) -> MetaId:
    """Identifier of ``T[i][j..j+w-1]`` (1-based) as two overlapping fragment ranks."""
    assert 1 <= w <= table.width and 1 <= j <= table.width - w + 1 and 1 <= i <= table.height
    k = w.bit_length() - 1
    ranks = table.levels[k]
    return MetaId(int(ranks[i - 1, j - 1]), int(ranks[i - 1, j - 1 + w - (1 << k)]))


def rank_for_pattern_fragment(table: KmrTable, s, counter: Optional[WorkCounter] = None) -> Optional[int]:
    """Level rank of a power-of-two-length fragment, or ``None`` if it never occurs in a row."""
    length = len(s)
    k = length.bit_length() - 1
    assert length == 1 << k, "fragment length must be a power of two"
    if k >= len(table.tries):
        return None
    trie = table.tries[k]
    locus = trie.prefix_search(s, counter)
    if locus is None:
        return None
    return int(trie.leaves_under(locus)[0])


def encode_pattern_keys(table: KmrTable, pattern: Grid2D, counter: Optional[WorkCounter] = None):
    """Meta-character keys of the pattern rows, or ``None`` if a fragment is absent from the text."""
    w = pattern.width
    k = w.bit_length() - 1
    span = 1 << k
    if k >= len(table.tries):
        return None
    keys = np.empty(pattern.height, dtype=np.int64)
    distinct = table.num_distinct[k]
    for i, row in enumerate(pattern.cells.tolist()):
        left = rank_for_pattern_fragment(table, row[:span], counter)
        if left is None:
            return None
        if span == w:
            right = left
        else:
            right = rank_for_pattern_fragment(table, row[w - span :], counter)
            if right is None:
                return None
        keys[i] = left * distinct + right
    return keys


def encode_pattern(table: KmrTable, pattern: Grid2D, counter: Optional[WorkCounter] = None) -> Optional[List[MetaId]]:
    """One ``MetaId`` per pattern row, or ``None`` when the pattern cannot occur."""
    keys = encode_pattern_keys(table, pattern, counter)
    if keys is None:
        return None
    distinct = table.num_distinct[pattern.width.bit_length() - 1]
    return [MetaId(*divmod(int(key), distinct)) for key in keys]
