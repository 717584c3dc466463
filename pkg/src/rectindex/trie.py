"""Compacted tries over strings of integer symbols.

A trie never copies symbol data.  It is built over a *string set*: any
object exposing

``lengths``
    int array, one entry per string;
``symbols(ids, offsets)``
    vectorized symbol access;
``symbol(id, offset)``
    scalar symbol access;
``lce(ids_a, ids_b)``
    vectorized longest common extension of whole strings.

Every string carries a logical terminator that is smaller than every real
symbol and distinct between strings, so equal strings get separate leaves
(ordered by string id) and a string that is a proper prefix of another sorts
first.

Construction sorts the strings with an LCE-accelerated comparison sort and
then appends them one by one as the rightmost leaf, walking up from the
previous leaf to the attachment depth given by the LCE of the two neighbours.
"""
from __future__ import annotations

from bisect import bisect_left
from typing import NamedTuple, Optional, Sequence

import numpy as np

from .lce import as_symbols, build_lce
from .work import WorkCounter

#: child key used for an edge that holds only the terminator
TERMINATOR = -1

_SCAN_DEGREE = 8
_SCALAR_EDGE = 12


class SequenceStrings:
    """String set over explicit integer sequences, with its own LCE oracle."""

    def __init__(self, sequences: Sequence[Sequence[int]]):
        arrays = [as_symbols(s) for s in sequences]
        self.lengths = np.array([len(a) for a in arrays], dtype=np.int64)
        self._oracle = build_lce(arrays) if arrays else None
        self._starts = self._oracle.starts if arrays else np.zeros(0, dtype=np.int64)
        self._seq = self._oracle.seq if arrays else np.zeros(0, dtype=np.int64)
        self._list = [a.tolist() for a in arrays]

    def __len__(self):
        return len(self.lengths)

    def symbols(self, ids, offsets):
        return self._seq[self._starts[ids] + offsets]

    def symbol(self, sid: int, offset: int) -> int:
        return self._list[sid][offset]

    def lce(self, a, b):
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        out = np.zeros(a.shape, dtype=np.int64)
        live = (self.lengths[a] > 0) & (self.lengths[b] > 0)
        if live.any():
            out[live] = self._oracle.lce0(self._starts[a[live]], self._starts[b[live]])
        return out


def _less(strings, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Vectorized ``string a < string b`` under the terminator convention."""
    la = strings.lengths[a]
    lb = strings.lengths[b]
    common = np.minimum(strings.lce(a, b), np.minimum(la, lb))
    end_a = common == la
    end_b = common == lb
    out = end_a & ~end_b
    both = end_a & end_b
    out[both] = a[both] < b[both]
    inner = np.flatnonzero(~end_a & ~end_b)
    if len(inner):
        off = common[inner]
        out[inner] = strings.symbols(a[inner], off) < strings.symbols(b[inner], off)
    return out


def lce_sort(strings) -> np.ndarray:
    """Sort string ids with LCE-then-one-symbol comparisons.

    A bitonic network does the comparisons a whole layer at a time, so each
    layer is one vectorized LCE batch.
    """
    count = len(strings.lengths)
    if count <= 1:
        return np.arange(count, dtype=np.int64)
    size = 1 << (count - 1).bit_length()
    arr = np.full(size, -1, dtype=np.int64)
    arr[:count] = np.arange(count)
    positions = np.arange(size, dtype=np.int64)
    block = 2
    while block <= size:
        stride = block // 2
        while stride:
            lo = positions[(positions & stride) == 0]
            hi = lo | stride
            ascending = (lo & block) == 0
            x = arr[lo]
            y = arr[hi]
            pad_x = x < 0
            pad_y = y < 0
            real = np.flatnonzero(~pad_x & ~pad_y)
            # x > y, with padding larger than every string
            greater = pad_x & ~pad_y
            smaller = pad_y & ~pad_x
            if len(real):
                y_less = _less(strings, y[real], x[real])
                greater[real] = y_less
                smaller[real] = ~y_less
            swap = np.where(ascending, greater, smaller)
            arr[lo[swap]] = y[swap]
            arr[hi[swap]] = x[swap]
            stride //= 2
        block *= 2
    return arr[:count]


class Locus(NamedTuple):
    """End point of a prefix search.

    ``edge_offset`` symbols were consumed on the edge entering ``node``; 0
    means the locus is the explicit node itself.
    """

    node: int
    edge_offset: int


class CompactedTrie:
    """Static compacted trie with pre-order leaf numbering.

    Leaves are numbered 1..L in pre-order, which equals the sorted order of
    the stored strings.  ``leaf_string[p - 1]`` is the string id at leaf ``p``.
    Node 0 is the root.
    """

    def __init__(self, strings, order, parent, depth, leaf_lo, leaf_hi, payloads=None):
        self.strings = strings
        self.leaf_string = np.asarray(order, dtype=np.int64)
        self.parent = np.asarray(parent, dtype=np.int32)
        self.depth = np.asarray(depth, dtype=np.int32)
        self.leaf_lo = np.asarray(leaf_lo, dtype=np.int32)
        self.leaf_hi = np.asarray(leaf_hi, dtype=np.int32)
        self.payloads = payloads
        self._index_children()
        # python-level mirrors of the arrays touched per query step
        self._child_ptr = self.child_ptr.tolist()
        self._child_key = self.child_key.tolist()
        self._child_node = self.child_node.tolist()
        self._depth = self.depth.tolist()
        self._rep = self.leaf_string[self.leaf_lo].tolist() if len(self.leaf_string) else []

    def _index_children(self):
        n_nodes = len(self.parent)
        kids = np.arange(1, n_nodes, dtype=np.int64)
        par = self.parent[1:].astype(np.int64)
        order = np.lexsort((self.leaf_lo[1:], par))
        kids = kids[order]
        par = par[order]
        counts = np.bincount(par, minlength=n_nodes) if len(par) else np.zeros(n_nodes, dtype=np.int64)
        self.child_ptr = np.zeros(n_nodes + 1, dtype=np.int64)
        np.cumsum(counts, out=self.child_ptr[1:])
        self.child_node = kids.astype(np.int32)
        keys = np.full(len(kids), TERMINATOR, dtype=np.int64)
        if len(kids):
            rep = self.leaf_string[self.leaf_lo[kids]]
            offset = self.depth[par].astype(np.int64)
            real = offset < self.strings.lengths[rep]
            keys[real] = self.strings.symbols(rep[real], offset[real])
        self.child_key = keys

    @property
    def root(self) -> int:
        return 0

    @property
    def n_leaves(self) -> int:
        return len(self.leaf_string)

    @property
    def n_nodes(self) -> int:
        return len(self.parent)

    def is_leaf(self, node: int) -> bool:
        return self._child_ptr[node] == self._child_ptr[node + 1] and node != 0

    def children(self, node: int) -> list:
        return self._child_node[self._child_ptr[node] : self._child_ptr[node + 1]]

    def _child(self, node: int, key: int) -> int:
        lo = self._child_ptr[node]
        hi = self._child_ptr[node + 1]
        keys = self._child_key
        if hi - lo <= _SCAN_DEGREE:
            for idx in range(lo, hi):
                if keys[idx] == key:
                    return self._child_node[idx]
            return -1
        idx = bisect_left(keys, key, lo, hi)
        if idx < hi and keys[idx] == key:
            return self._child_node[idx]
        return -1

    def prefix_search(self, query, counter: Optional[WorkCounter] = None) -> Optional[Locus]:
        """Locus spelling ``query``, or ``None`` if no stored string starts with it."""
        m = len(query)
        node = 0
        d = 0
        depth = self._depth
        strings = self.strings
        steps = 0
        compared = 0
        result = None
        while True:
            if d >= m:
                result = Locus(node, 0)
                break
            child = self._child(node, int(query[d]))
            steps += 1
            if child < 0:
                break
            edge_end = depth[child]
            stop = m if m < edge_end else edge_end
            rep = self._rep[child]
            compared += stop - d
            if stop - d - 1 > _SCALAR_EDGE:
                offs = np.arange(d + 1, stop)
                got = strings.symbols(np.full(len(offs), rep), offs)
                if not np.array_equal(got, np.asarray(query[d + 1 : stop])):
                    break
            else:
                ok = True
                for t in range(d + 1, stop):
                    if strings.symbol(rep, t) != query[t]:
                        ok = False
                        break
                if not ok:
                    break
            if m < edge_end or self.is_leaf(child):
                if m <= edge_end:
                    result = Locus(child, m - depth[node])
                break
            node = child
            d = edge_end
        if counter is not None:
            counter.trie_steps += steps
            counter.symbol_comparisons += compared
        return result

    def leaf_range(self, locus) -> tuple:
        """1-based inclusive pre-order range of the leaves below ``locus``."""
        node = locus.node if isinstance(locus, Locus) else int(locus)
        return int(self.leaf_lo[node]) + 1, int(self.leaf_hi[node]) + 1

    def leaves_under(self, locus) -> np.ndarray:
        lo, hi = self.leaf_range(locus)
        ids = self.leaf_string[lo - 1 : hi]
        return ids if self.payloads is None else np.asarray(self.payloads)[ids]

    def leaf_of_string(self) -> np.ndarray:
        """Inverse of ``leaf_string``: 1-based pre-order number for each string id."""
        inv = np.empty(len(self.leaf_string), dtype=np.int64)
        inv[self.leaf_string] = np.arange(1, len(self.leaf_string) + 1)
        return inv

    def edge_label(self, node: int) -> tuple:
        """Real symbols on the edge entering ``node`` (terminator omitted)."""
        if node == 0:
            return ()
        start = self._depth[int(self.parent[node])]
        rep = self._rep[node]
        return tuple(self.strings.symbol(rep, t) for t in range(start, self._depth[node]))

    def to_nested(self, node: int = 0):
        """Canonical nested form: ``(label, children)`` for inner nodes, ``(label, ('$', id))`` for leaves."""
        label = self.edge_label(node)
        if self.is_leaf(node):
            return (label, ("$", int(self.leaf_string[self.leaf_lo[node]])))
        return (label, tuple(self.to_nested(c) for c in self.children(node)))

    @property
    def words(self) -> int:
        return int(
            self.parent.size + self.depth.size + self.leaf_lo.size + self.leaf_hi.size
            + self.child_ptr.size + self.child_key.size + self.child_node.size
            + self.leaf_string.size
        )


def build_from_sorted(strings, order: np.ndarray, lcps: np.ndarray, payloads=None) -> CompactedTrie:
    """Append sorted strings as successive rightmost leaves.

    ``lcps[t]`` is the common-prefix length of strings ``order[t]`` and
    ``order[t + 1]``.  Leaves are treated as one symbol deeper than their
    string (the terminator), so a new string never hangs below a leaf.
    """
    lengths = strings.lengths[order].tolist()
    lcps = lcps.tolist()
    parent = [-1]
    depth = [0]
    leaf_lo = [0]
    leaf_hi = [-1]
    is_leaf = [False]
    stack = [0]
    for t, length in enumerate(lengths):
        shared = lcps[t - 1] if t else 0
        last = -1
        while True:
            top = stack[-1]
            reach = depth[top] + 1 if is_leaf[top] else depth[top]
            if reach <= shared:
                break
            last = stack.pop()
            leaf_hi[last] = t - 1
        if depth[top] < shared:
            node = len(parent)
            parent.append(top)
            depth.append(shared)
            leaf_lo.append(leaf_lo[last])
            leaf_hi.append(-1)
            is_leaf.append(False)
            parent[last] = node
            stack.append(node)
            top = node
        node = len(parent)
        parent.append(top)
        depth.append(length)
        leaf_lo.append(t)
        leaf_hi.append(t)
        is_leaf.append(True)
        stack.append(node)
    for node in stack:
        if not is_leaf[node]:
            leaf_hi[node] = len(lengths) - 1
    return CompactedTrie(strings, order, parent, depth, leaf_lo, leaf_hi, payloads)


def build_trie(strings, payloads=None, order: Optional[np.ndarray] = None) -> CompactedTrie:
    """Compacted trie over every string of ``strings``.

    ``strings`` is a string set (see module docstring) or a plain list of
    integer sequences.  Pass ``order`` to skip sorting when the
    lexicographic order is already known.
    """
    if not hasattr(strings, "lce"):
        strings = SequenceStrings(strings)
    if order is None:
        order = lce_sort(strings)
    order = np.asarray(order, dtype=np.int64)
    if len(order) > 1:
        lcps = np.minimum(
            strings.lce(order[:-1], order[1:]),
            np.minimum(strings.lengths[order[:-1]], strings.lengths[order[1:]]),
        )
    else:
        lcps = np.zeros(0, dtype=np.int64)
    return build_from_sorted(strings, order, lcps, payloads)


def prefix_search(trie: CompactedTrie, query, counter=None) -> Optional[Locus]:
    return trie.prefix_search(query, counter)


def leaf_range(trie: CompactedTrie, locus) -> tuple:
    return trie.leaf_range(locus)


def leaves_under(trie: CompactedTrie, locus) -> np.ndarray:
    return trie.leaves_under(locus)
