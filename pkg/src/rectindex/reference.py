"""Brute-force reference implementations.

Deliberately naive and independent of the indexed code paths; the test
suite and the ``verify`` command compare the index against these.
"""
from __future__ import annotations

from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np

from .grid import Grid2D, Occurrence


def naive_search_2d(text: Grid2D, pattern: Grid2D) -> List[Occurrence]:
    H, W = text.height, text.width
    h, w = pattern.height, pattern.width
    rows = text.cells.tolist()
    prow = pattern.cells.tolist()
    out = []
    for i in range(H - h + 1):
        for j in range(W - w + 1):
            if all(rows[i + a][j : j + w] == prow[a] for a in range(h)):
                out.append(Occurrence(i + 1, j + 1))
    return out


def naive_search_1d(text: Sequence, pattern: Sequence) -> List[int]:
    text, pattern = list(text), list(pattern)
    assert len(pattern) > 0, "patterns are nonempty"
    m = len(pattern)
    return [p + 1 for p in range(len(text) - m + 1) if text[p : p + m] == pattern]


def naive_lce(seq: Sequence, p: int, q: int) -> int:
    """LCE of ``seq[p..]`` and ``seq[q..]``, 1-based positions."""
    seq = list(seq)
    p, q = p - 1, q - 1
    n = 0
    while p + n < len(seq) and q + n < len(seq) and seq[p + n] == seq[q + n]:
        n += 1
    return n


def naive_rect(points: Iterable[Tuple[int, int, int]], rect: Tuple[int, int, int, int]) -> List[int]:
    x_lo, x_hi, y_lo, y_hi = rect
    return [pay for x, y, pay in points if x_lo <= x <= x_hi and y_lo <= y <= y_hi]


def naive_trie(strings: Sequence[Sequence[int]]):
    """Compacted trie by one-string-at-a-time insertion, in the nested form of ``CompactedTrie.to_nested``.

    Builds an uncompacted trie of dicts with a distinct end marker per
    string, then merges unary chains.
    """
    root: dict = {}
    for sid, s in enumerate(strings):
        node = root
        for sym in list(s):
            node = node.setdefault(sym, {})
        node[("$", sid)] = None

    def compact(label, node, is_root=False):
        while not is_root and len(node) == 1:
            (key, child), = node.items()
            if isinstance(key, tuple):
                break
            label = label + (key,)
            node = child
        kids = []
        for key in sorted(node, key=lambda k: (0, k[1], 0) if isinstance(k, tuple) else (1, k, 0)):
            if isinstance(key, tuple):
                kids.append(((), key))
            else:
                kids.append(compact((key,), node[key]))
        # a string ending here with no siblings is a plain leaf
        if not is_root and len(kids) == 1 and kids[0][0] == ():
            return (label, kids[0][1])
        return (label, tuple(kids))

    return compact((), root, is_root=True)


def random_text(height: int, width: int, sigma: int, rng: np.random.Generator) -> Grid2D:
    """Uniform i.i.d. grid over ``sigma`` symbols: letters from 'a' when ``sigma <= 26``, else byte values from 0."""
    if not 1 <= sigma <= 256:
        raise ValueError("sigma must be in 1..256")
    base = ord("a") if sigma <= 26 else 0
    return Grid2D(rng.integers(0, sigma, size=(height, width)) + base)


def sample_pattern(text: Grid2D, sigma: int, rng: np.random.Generator, planted: bool,
                   shape: Optional[Tuple[int, int]] = None) -> Grid2D:
    """A pattern cut out of ``text`` (planted) or drawn like ``random_text``."""
    if shape is None:
        shape = (int(rng.integers(1, text.height + 1)), int(rng.integers(1, text.width + 1)))
    h, w = shape
    if planted:
        i = int(rng.integers(0, text.height - h + 1))
        j = int(rng.integers(0, text.width - w + 1))
        return Grid2D(text.cells[i : i + h, j : j + w].copy())
    return random_text(h, w, sigma, rng)
