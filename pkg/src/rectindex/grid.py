"""Two-dimensional strings: storage, access, transposition and the grid file format."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence, Union

import numpy as np


class GridFormatError(ValueError):
    """Raised when a grid file is empty or its lines have unequal lengths."""


class Occurrence(NamedTuple):
    """Top-left corner of a pattern occurrence, 1-based."""

    row: int
    col: int


@dataclass(frozen=True, eq=False)
class Grid2D:
    """Rectangular array of integer symbols stored row-major.

    Public indexing is 1-based (``char_at(1, 1)`` is the top-left symbol);
    ``cells`` is a read-only ``(height, width)`` numpy array.
    """

    cells: np.ndarray

    def __post_init__(self):
        cells = np.asarray(self.cells)
        if cells.ndim != 2:
            raise ValueError("a grid needs a two-dimensional cell array")
        if cells.shape[0] < 1 or cells.shape[1] < 1:
            raise ValueError("grid height and width must be at least 1")
        if cells.dtype.kind not in "iu":
            raise ValueError("grid symbols must be integers")
        if cells.size and cells.min() < 0:
            raise ValueError("grid symbols must be non-negative")
        cells = np.array(cells, dtype=np.int64, copy=True)
        cells.setflags(write=False)
        object.__setattr__(self, "cells", cells)

    @classmethod
    def from_rows(cls, rows: Iterable[Union[str, bytes, Sequence[int]]]) -> "Grid2D":
        """Build a grid from equal-length rows given as ``str``, ``bytes`` or int sequences."""
        decoded = []
        for row in rows:
            if isinstance(row, str):
                row = row.encode("latin-1")
            decoded.append(list(row))
        if not decoded:
            raise GridFormatError("empty grid")
        width = len(decoded[0])
        if any(len(r) != width for r in decoded):
            raise GridFormatError("ragged grid: rows have unequal lengths")
        return cls(np.array(decoded, dtype=np.int64).reshape(len(decoded), width))

    @property
    def height(self) -> int:
        return self.cells.shape[0]

    @property
    def width(self) -> int:
        return self.cells.shape[1]

    @property
    def shape(self):
        return self.cells.shape

    @property
    def size(self) -> int:
        return self.cells.size

    def row(self, i: int) -> np.ndarray:
        assert 1 <= i <= self.height, f"row {i} out of range"
        return self.cells[i - 1]

    def char_at(self, i: int, j: int) -> int:
        assert 1 <= i <= self.height and 1 <= j <= self.width, f"({i}, {j}) out of range"
        return int(self.cells[i - 1, j - 1])

    def transpose(self) -> "Grid2D":
        return Grid2D(self.cells.T)

    def rows_as_bytes(self) -> list:
        return [bytes(int(c) for c in r) for r in self.cells]

    def __eq__(self, other):
        if not isinstance(other, Grid2D):
            return NotImplemented
        return self.shape == other.shape and bool(np.array_equal(self.cells, other.cells))

    def __hash__(self):
        return hash((self.shape, self.cells.tobytes()))

    def __repr__(self):
        if self.cells.max() < 256:
            rows = [r.decode("latin-1") for r in self.rows_as_bytes()]
            return f"Grid2D({self.height}x{self.width}, rows={rows!r})"
        return f"Grid2D({self.height}x{self.width})"


def parse_grid(data: Union[bytes, str]) -> Grid2D:
    """Parse newline-separated rows of equal length (LF or CRLF, trailing newline optional)."""
    if isinstance(data, str):
        data = data.encode("utf-8")
    if not data:
        raise GridFormatError("empty input")
    lines = data.split(b"\n")
    if lines[-1] == b"":
        lines.pop()
    lines = [ln[:-1] if ln.endswith(b"\r") else ln for ln in lines]
    if not lines or any(len(ln) == 0 for ln in lines):
        raise GridFormatError("empty line in grid input")
    width = len(lines[0])
    for number, ln in enumerate(lines, 1):
        if len(ln) != width:
            raise GridFormatError(
                f"ragged grid: line {number} has length {len(ln)}, expected {width}"
            )
    cells = np.frombuffer(b"".join(lines), dtype=np.uint8).reshape(len(lines), width)
    return Grid2D(cells)


def serialize_grid(grid: Grid2D) -> bytes:
    if grid.cells.max() > 255:
        raise GridFormatError("only byte-valued grids can be serialized")
    return b"".join(r + b"\n" for r in grid.rows_as_bytes())


def read_grid(path) -> Grid2D:
    with open(path, "rb") as fh:
        return parse_grid(fh.read())


def transpose(g: Grid2D) -> Grid2D:
    return g.transpose()


def char_at(g: Grid2D, i: int, j: int) -> int:
    return g.char_at(i, j)
