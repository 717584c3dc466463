"""Longest-common-extension oracles.

``LceOracle`` answers LCE queries over a concatenation of integer strings with
a suffix array, its LCP array and a sparse table for range minima.
``StripLceOracle`` lifts this to the one-dimensional strings read down
``w``-column strips of a text, for any ``w``, from oracles built only for
power-of-two strip widths.
"""
from __future__ import annotations

from typing import Sequence

import numpy as np


def as_symbols(s) -> np.ndarray:
    """Integer symbol array from ``bytes``, ``str`` (latin-1) or an int sequence."""
    if isinstance(s, str):
        s = s.encode("latin-1")
    if isinstance(s, (bytes, bytearray)):
        return np.frombuffer(bytes(s), dtype=np.uint8).astype(np.int64)
    return np.asarray(s, dtype=np.int64).reshape(-1)


def _dense_rank(values: np.ndarray) -> np.ndarray:
    _, inverse = np.unique(values, return_inverse=True)
    return inverse.astype(np.int64).reshape(-1)


def suffix_array(seq: np.ndarray):
    """Prefix-doubling suffix array.

    Returns ``(sa, history)`` where ``history[t][p]`` is the rank of
    ``seq[p:p + 2**t]`` among all such (possibly end-truncated) substrings.
    The last entry of ``history`` assigns distinct ranks, i.e. it is the
    inverse suffix array.
    """
    n = len(seq)
    rank = _dense_rank(np.asarray(seq, dtype=np.int64))
    history = [rank]
    step = 1
    while n and rank.max() < n - 1:
        second = np.full(n, -1, dtype=np.int64)
        second[: n - step] = rank[step:]
        key = rank * (n + 1) + (second + 1)
        order = np.argsort(key, kind="stable")
        sorted_key = key[order]
        new_rank = np.empty(n, dtype=np.int64)
        new_rank[order] = np.concatenate(([0], np.cumsum(sorted_key[1:] != sorted_key[:-1])))
        rank = new_rank
        history.append(rank)
        step *= 2
    sa = np.empty(n, dtype=np.int64)
    sa[rank] = np.arange(n, dtype=np.int64)
    return sa, history


def lcp_from_history(sa: np.ndarray, history: Sequence[np.ndarray]) -> np.ndarray:
    """LCP of lexicographically adjacent suffixes, by binary lifting over doubling ranks."""
    n = len(sa)
    a = sa[:-1].copy()
    b = sa[1:].copy()
    lcp = np.zeros(max(n - 1, 0), dtype=np.int64)
    for t in range(len(history) - 2, -1, -1):
        rank = history[t]
        pa = a + lcp
        pb = b + lcp
        ok = (pa < n) & (pb < n)
        idx = np.flatnonzero(ok)
        same = rank[pa[idx]] == rank[pb[idx]]
        lcp[idx[same]] += 1 << t
    return lcp


class SparseTableRMQ:
    """Range minimum over a static integer array; O(1) query, O(N log N) words."""

    def __init__(self, values: np.ndarray):
        values = np.asarray(values, dtype=np.int64)
        n = len(values)
        self.n = n
        levels = max(1, n.bit_length())
        # row k holds minima of windows of length 2**k; the tail is padding
        self.table = np.empty((levels, max(n, 1)), dtype=np.int64)
        self.table[0, :n] = values
        span = 1
        for k in range(1, levels):
            row, prev = self.table[k], self.table[k - 1]
            row[:] = prev
            np.minimum(prev[: n - span], prev[span:n], out=row[: n - span])
            span *= 2
        self.log = np.zeros(n + 1, dtype=np.int64)
        if n >= 2:
            self.log[2:] = np.floor(np.log2(np.arange(2, n + 1))).astype(np.int64)
            # guard against float rounding at exact powers of two
            exact = 1 << self.log
            self.log -= (exact > np.arange(n + 1)) & (np.arange(n + 1) > 0)

    def query(self, lo, hi):
        """Minimum of ``values[lo:hi]`` (vectorized; requires ``lo < hi``)."""
        lo = np.asarray(lo, dtype=np.int64)
        hi = np.asarray(hi, dtype=np.int64)
        level = self.log[hi - lo]
        return np.minimum(self.table[level, lo], self.table[level, hi - (1 << level)])

    @property
    def words(self) -> int:
        return self.table.size + len(self.log)


class LceOracle:
    """LCE over a concatenation of strings separated by unique separators.

    ``starts[s]`` is the 0-based offset of string ``s`` in ``seq``; the
    strings are laid out back to back with one separator after every
    string except the last.  Separators never take part in an extension.
    """

    def __init__(self, seq: np.ndarray, starts: np.ndarray):
        self.seq = np.asarray(seq, dtype=np.int64)
        self.starts = np.asarray(starts, dtype=np.int64)
        ends = np.empty(len(self.starts), dtype=np.int64)
        ends[:-1] = self.starts[1:] - 1
        if len(ends):
            ends[-1] = len(self.seq)
        self.ends = ends
        self.suffix_array, history = suffix_array(self.seq)
        self.inverse_sa = history[-1]
        self.lcp_array = lcp_from_history(self.suffix_array, history)
        self.rmq = SparseTableRMQ(self.lcp_array) if len(self.lcp_array) else None

    def __len__(self):
        return len(self.seq)

    def end_of(self, p):
        """Exclusive end of the string containing 0-based position(s) ``p``."""
        idx = np.searchsorted(self.starts, p, side="right") - 1
        return self.ends[idx]

    def lce0(self, p, q) -> np.ndarray:
        """Vectorized LCE for 0-based positions."""
        p = np.asarray(p, dtype=np.int64)
        q = np.asarray(q, dtype=np.int64)
        out = np.empty(np.broadcast(p, q).shape, dtype=np.int64)
        p, q = np.broadcast_arrays(p, q)
        same = p == q
        if same.any():
            out[same] = self.end_of(p[same]) - p[same]
        diff = ~same
        if diff.any():
            rp = self.inverse_sa[p[diff]]
            rq = self.inverse_sa[q[diff]]
            out[diff] = self.rmq.query(np.minimum(rp, rq), np.maximum(rp, rq))
        return out

    def lce(self, p: int, q: int) -> int:
        """LCE of the suffixes starting at 1-based positions ``p`` and ``q``."""
        assert 1 <= p <= len(self.seq) and 1 <= q <= len(self.seq)
        return int(self.lce0(p - 1, q - 1))

    @property
    def words(self) -> int:
        rmq = self.rmq.words if self.rmq is not None else 0
        return len(self.seq) + len(self.suffix_array) + len(self.inverse_sa) + len(self.lcp_array) + rmq


def build_lce(strings: Sequence[Sequence[int]]) -> LceOracle:
    """Concatenate non-negative integer strings with fresh separators and index them."""
    arrays = [as_symbols(s) for s in strings]
    if not arrays:
        raise ValueError("build_lce needs at least one string")
    top = max((int(a.max()) for a in arrays if len(a)), default=-1) + 1
    parts, starts, offset = [], [], 0
    for idx, a in enumerate(arrays):
        starts.append(offset)
        parts.append(a)
        offset += len(a)
        if idx < len(arrays) - 1:
            parts.append(np.array([top + idx], dtype=np.int64))
            offset += 1
    return LceOracle(np.concatenate(parts), np.array(starts, dtype=np.int64))


def lce(oracle: LceOracle, p: int, q: int) -> int:
    return oracle.lce(p, q)


def strip_sequence(ranks: np.ndarray, alphabet: int) -> np.ndarray:
    """Concatenate the columns of ``ranks`` top to bottom, separated by fresh symbols."""
    height, cols = ranks.shape
    framed = np.empty((cols, height + 1), dtype=np.int64)
    framed[:, :height] = ranks.T
    framed[:, height] = alphabet + np.arange(cols)
    return framed.ravel()[:-1]


class StripLceOracle:
    """LCE between suffixes of strings read down ``w``-column strips.

    Built over a ``KmrTable``: for level ``k`` the string of strip ``c`` is
    the column ``c`` of the level-``k`` rank table.  With ``reverse=True`` the
    text is flipped upside down first.  Level oracles are built on first use;
    ``drop`` releases one.
    """

    def __init__(self, kmr, reverse: bool = False):
        self.kmr = kmr
        self.reverse = reverse
        self.height = kmr.height
        self._levels = {}
        self.peak_words = 0

    def ranks(self, k: int) -> np.ndarray:
        ranks = self.kmr.levels[k]
        return ranks[::-1] if self.reverse else ranks

    def level(self, k: int) -> LceOracle:
        oracle = self._levels.get(k)
        if oracle is None:
            ranks = self.ranks(k)
            seq = strip_sequence(ranks, self.kmr.num_distinct[k])
            starts = np.arange(ranks.shape[1], dtype=np.int64) * (self.height + 1)
            oracle = LceOracle(seq, starts)
            self._levels[k] = oracle
            self.peak_words = max(self.peak_words, self.words)
        return oracle

    def drop(self, k: int) -> None:
        self._levels.pop(k, None)

    @property
    def words(self) -> int:
        return sum(o.words for o in self._levels.values())

    def lce0(self, w: int, c1, r1, c2, r2) -> np.ndarray:
        """Vectorized strip LCE with 0-based strip columns and rows."""
        k = w.bit_length() - 1
        shift = w - (1 << k)
        oracle = self.level(k)
        stride = self.height + 1
        c1 = np.asarray(c1, dtype=np.int64)
        c2 = np.asarray(c2, dtype=np.int64)
        p = c1 * stride + r1
        q = c2 * stride + r2
        left = oracle.lce0(p, q)
        if shift == 0:
            return left
        right = oracle.lce0(p + shift * stride, q + shift * stride)
        return np.minimum(left, right)

    def strip_lce(self, i: int, j: int, i2: int, j2: int, w: int) -> int:
        """LCE of the width-``w`` strip strings at (column ``i``, row ``j``) and (``i2``, ``j2``), 1-based."""
        width = self.kmr.width
        assert 1 <= w <= width and 1 <= i <= width - w + 1 and 1 <= i2 <= width - w + 1
        assert 1 <= j <= self.height and 1 <= j2 <= self.height
        return int(self.lce0(w, i - 1, j - 1, i2 - 1, j2 - 1))


def strip_lce(oracle: StripLceOracle, i: int, j: int, i2: int, j2: int, w: int) -> int:
    return oracle.strip_lce(i, j, i2, j2, w)
