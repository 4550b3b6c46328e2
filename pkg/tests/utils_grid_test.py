"""
    Tests for the parameter grid syntax lo:hi:step
"""
from rdp.utils.grid import parse_grid, inclusive_grid
import numpy as np
import pytest


@pytest.mark.fast
@pytest.mark.parametrize("text, nof_points, hi", [('0:0.5:0.05', 11, 0.5), ('0:1:0.25', 5, 1.0),
                                                  ('0:1:0.01', 101, 1.0), ('0.6:1.1:0.01', 51, 1.1),
                                                  ('0:0.5:0.01', 51, 0.5)])
def test_inclusive_endpoints(text, nof_points, hi):
    """
        Both ends are part of the grid and the last point is exactly hi
    :param text: Grid specification
    :param nof_points: Expected number of grid points
    :param hi: Expected last point
    :return:
    """
    grid = parse_grid(text)
    assert len(grid) == nof_points
    assert grid[-1] == hi
    assert np.all(np.diff(grid) > 0)


@pytest.mark.fast
def test_points_are_not_accumulated():
    grid = inclusive_grid(0.0, 1.0, 0.1)
    assert grid[3] == 3 * 0.1
    assert grid[7] == 7 * 0.1


@pytest.mark.fast
def test_single_point():
    assert list(parse_grid('0.3')) == [0.3]


@pytest.mark.fast
def test_hi_off_grid():
    grid = parse_grid('0:1:0.3')
    assert grid == pytest.approx([0, 0.3, 0.6, 0.9])


@pytest.mark.fast
@pytest.mark.parametrize("text", ['a:b:c', '0:1', '0:1:0', '0:1:-0.1', '1:0:0.1', '', '0:1:0.1:2'])
def test_malformed(text):
    with pytest.raises(ValueError):
        parse_grid(text)
