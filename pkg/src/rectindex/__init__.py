"""Exact rectangular pattern matching over a 2D text."""
from .grid import Grid2D, GridFormatError, Occurrence, parse_grid, read_grid, serialize_grid
from .index2d import RectangleIndex, build_index, query
from .kmr import MetaId, build_kmr, encode_pattern, meta_id
from .lce import build_lce, lce, strip_lce
from .rangereport import build_points, query_rect
from .reference import naive_search_1d, naive_search_2d
from .trie import build_trie, leaf_range, prefix_search
from .validation import check_grid
from .work import WorkCounter

__all__ = [
    "Grid2D", "GridFormatError", "Occurrence", "parse_grid", "read_grid", "serialize_grid",
    "RectangleIndex", "build_index", "query",
    "MetaId", "build_kmr", "encode_pattern", "meta_id",
    "build_lce", "lce", "strip_lce",
    "build_points", "query_rect",
    "naive_search_1d", "naive_search_2d",
    "build_trie", "leaf_range", "prefix_search",
    "check_grid", "WorkCounter",
]
