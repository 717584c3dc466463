import numpy as np
import pytest
from hypothesis import strategies as st

from rectindex import Grid2D


def grids(max_h=8, max_w=8, sigma=3):
    """Hypothesis strategy for small letter grids."""
    return st.tuples(st.integers(1, max_h), st.integers(1, max_w), st.integers(0, 2**32 - 1)).map(
        lambda t: Grid2D(np.random.default_rng(t[2]).integers(0, sigma, size=(t[0], t[1])) + ord("a"))
    )


@pytest.fixture
def rng():
    return np.random.default_rng(12345)
