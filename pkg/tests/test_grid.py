import numpy as np
import pytest
from hypothesis import given

from rectindex import Grid2D, GridFormatError, parse_grid, read_grid, serialize_grid
from rectindex.grid import char_at, transpose
from rectindex.validation import check_grid

from conftest import grids


def test_parse_basic():
    g = parse_grid("ab\ncd\n")
    assert g.shape == (2, 2)
    assert g.rows_as_bytes() == [b"ab", b"cd"]


def test_parse_single_cell():
    assert parse_grid("a\n").shape == (1, 1)


def test_parse_crlf_and_missing_final_newline():
    assert parse_grid(b"ab\r\ncd") == parse_grid("ab\ncd\n")


@pytest.mark.parametrize("data", ["ab\ncde\n", "", "\n", "ab\n\ncd\n"])
def test_parse_rejects(data):
    with pytest.raises(GridFormatError):
        parse_grid(data)


def test_transpose_examples():
    assert transpose(parse_grid("x")) == parse_grid("x")
    assert transpose(parse_grid("ab\ncd")).rows_as_bytes() == [b"ac", b"bd"]


@given(grids())
def test_transpose_involution(g):
    assert transpose(transpose(g)) == g


@given(grids())
def test_grid_invariants(g):
    assert g.cells.size == g.height * g.width
    assert g.height >= 1 and g.width >= 1
    for i in range(1, g.height + 1):
        assert len(g.row(i)) == g.width
    assert char_at(g, 1, 1) == g.cells[0, 0]


def test_char_at():
    g = parse_grid("ab\ncd")
    assert char_at(g, 2, 1) == ord("c")
    assert char_at(g, 1, 2) == ord("b")


def test_cells_read_only():
    g = parse_grid("ab")
    with pytest.raises(ValueError):
        g.cells[0, 0] = 1


def test_roundtrip_file(tmp_path):
    g = parse_grid("abc\ndef\n")
    path = tmp_path / "g.grid"
    path.write_bytes(serialize_grid(g))
    assert read_grid(path) == g


def test_check_grid_inputs():
    want = parse_grid("ab\ncd")
    assert check_grid(want) is want
    assert check_grid(["ab", "cd"]) == want
    assert check_grid(b"ab\ncd\n") == want
    assert check_grid(np.array([[97, 98], [99, 100]])) == want


@pytest.mark.parametrize("bad", [np.zeros((0, 3), dtype=int), np.zeros(3, dtype=int), np.zeros((2, 2))])
def test_check_grid_rejects_arrays(bad):
    with pytest.raises(ValueError):
        check_grid(bad)


def test_check_grid_rejects_empty_list():
    with pytest.raises(GridFormatError):
        check_grid([])


def test_negative_symbols_rejected():
    with pytest.raises(ValueError):
        Grid2D(np.array([[-1]]))
