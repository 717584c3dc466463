"""Input validation for grid-like arguments."""
from __future__ import annotations

import numpy as np

from .grid import Grid2D, GridFormatError, parse_grid


def check_grid(X, name: str = "grid") -> Grid2D:
    """Coerce ``X`` to a ``Grid2D``.

    Accepts a ``Grid2D``, the text of a grid file (``str``/``bytes``), a list
    of equal-length rows, or a 2D integer array.
    """
    if isinstance(X, Grid2D):
        return X
    if isinstance(X, (str, bytes, bytearray)):
        return parse_grid(bytes(X) if not isinstance(X, str) else X)
    if isinstance(X, np.ndarray):
        if X.ndim != 2:
            raise ValueError(f"{name} must be two-dimensional, got shape {X.shape}")
        if X.shape[0] == 0 or X.shape[1] == 0:
            raise ValueError(f"{name} must have at least one row and one column")
        if X.dtype.kind not in "iu":
            raise ValueError(f"{name} must hold integer symbols, got dtype {X.dtype}")
        return Grid2D(X)
    try:
        rows = list(X)
    except TypeError:
        raise TypeError(f"cannot interpret {type(X).__name__} as a {name}") from None
    if not rows:
        raise GridFormatError(f"{name} is empty")
    return Grid2D.from_rows(rows)
