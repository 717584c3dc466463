"""Static two-dimensional orthogonal range reporting.

Points are sorted by x; their y values (rank-reduced) are laid out in a
wavelet matrix whose levels are packed bitvectors with a popcount directory,
so the structure takes O(N log N) bits.  A rectangle query walks the matrix
from the top bit down, pruning subtrees whose value range misses the
y-interval, and reports each surviving leaf run: O((1 + k) log N) node
visits.
"""
from __future__ import annotations

from array import array
from bisect import bisect_left, bisect_right
from typing import Iterable, Optional, Sequence, Tuple

import numpy as np

from .work import WorkCounter


class _BitVector:
    """Packed bits with O(1) rank."""

    __slots__ = ("words", "directory", "zeros")

    def __init__(self, bits: np.ndarray):
        n = len(bits)
        padded = np.zeros(((n + 63) // 64) * 64, dtype=np.uint8)
        padded[:n] = bits
        packed = np.packbits(padded, bitorder="little").view("<u8")
        counts = padded.reshape(-1, 64).sum(axis=1, dtype=np.int64)
        directory = np.zeros(len(counts) + 1, dtype=np.int64)
        np.cumsum(counts, out=directory[1:])
        self.words = array("Q", packed.tolist())
        self.directory = array("q", directory.tolist())
        self.zeros = n - int(directory[-1])

    def rank1(self, i: int) -> int:
        """Number of set bits in ``bits[:i]``."""
        block = i >> 6
        rest = i & 63
        if rest == 0:
            return self.directory[block]
        return self.directory[block] + (self.words[block] & ((1 << rest) - 1)).bit_count()

    @property
    def n_words(self) -> int:
        return len(self.words) + len(self.directory) + 1


class PointSet2D:
    """Static point set answering axis-aligned rectangle reporting queries."""

    def __init__(self, points: Iterable[Tuple[int, int, int]]):
        pts = np.asarray(list(points), dtype=np.int64).reshape(-1, 3)
        order = np.lexsort((pts[:, 1], pts[:, 0]))
        pts = pts[order]
        self.n = len(pts)
        self.xs = pts[:, 0].copy()
        self.y_values = np.unique(pts[:, 1])
        values = np.searchsorted(self.y_values, pts[:, 1]).astype(np.int64)
        self.n_bits = max(1, int(len(self.y_values) - 1).bit_length())
        payload = pts[:, 2].copy()
        self.levels = []
        for bit in range(self.n_bits - 1, -1, -1):
            bits = ((values >> bit) & 1).astype(np.uint8)
            self.levels.append(_BitVector(bits))
            stay = bits == 0
            values = np.concatenate((values[stay], values[~stay]))
            payload = np.concatenate((payload[stay], payload[~stay]))
        # payload of each position after the last level, i.e. grouped by y
        self.payload = payload
        self._xs = self.xs.tolist()
        self._ys = self.y_values.tolist()
        self._payload = payload.tolist()

    def __len__(self):
        return self.n

    def query(self, x_lo: int, x_hi: int, y_lo: int, y_hi: int,
              counter: Optional[WorkCounter] = None) -> list:
        """Payloads of all points with ``x_lo <= x <= x_hi`` and ``y_lo <= y <= y_hi``."""
        start = bisect_left(self._xs, x_lo)
        stop = bisect_right(self._xs, x_hi)
        v_lo = bisect_left(self._ys, y_lo)
        v_hi = bisect_right(self._ys, y_hi) - 1
        out: list = []
        if start >= stop or v_lo > v_hi:
            if counter is not None:
                counter.range_visits += 1
            return out
        visits = self._report(0, start, stop, 0, v_lo, v_hi, out)
        if counter is not None:
            counter.range_visits += visits
        return out

    def _report(self, depth, start, stop, prefix, v_lo, v_hi, out) -> int:
        span = self.n_bits - depth
        low = prefix << span
        high = low + (1 << span) - 1
        if high < v_lo or low > v_hi:
            return 1
        if depth == self.n_bits:
            # positions [start, stop) at the bottom all hold the value ``prefix``
            out.extend(self._payload[start:stop])
            return 1
        level = self.levels[depth]
        ones_start = level.rank1(start)
        ones_stop = level.rank1(stop)
        visits = 1
        zs, ze = start - ones_start, stop - ones_stop
        if zs < ze:
            visits += self._report(depth + 1, zs, ze, prefix << 1, v_lo, v_hi, out)
        os_, oe = level.zeros + ones_start, level.zeros + ones_stop
        if os_ < oe:
            visits += self._report(depth + 1, os_, oe, (prefix << 1) | 1, v_lo, v_hi, out)
        return visits

    @property
    def words(self) -> int:
        return self.xs.size + self.y_values.size + self.payload.size + sum(lv.n_words for lv in self.levels)


def build_points(points: Sequence[Tuple[int, int, int]]) -> PointSet2D:
    return PointSet2D(points)


def query_rect(ps: PointSet2D, x_lo: int, x_hi: int, y_lo: int, y_hi: int, counter=None) -> list:
    return ps.query(x_lo, x_hi, y_lo, y_hi, counter)
