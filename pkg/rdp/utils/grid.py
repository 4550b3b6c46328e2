"""
    Functions for constructing parameter grids (distortion, perception and rate axes)
"""
import numpy as np

# Endpoints are included if they are within this distance of the last grid point
GRID_TOLERANCE = 1e-12


def arange(start, step, nof_steps):
    """
        Wrapper for numpy arange to avoid fp problems
    :param start: Start of the grid
    :param step: Stepsize
    :param nof_steps: number of steps in the grid (= nof points - 1)
    :return: grid as numpy array
    """
    return np.arange(0, nof_steps+1) * step + start


def inclusive_grid(lo, hi, step):
    """
        Grid lo, lo + step, ..., hi where hi is included if it lies on the grid within GRID_TOLERANCE.
        Points are computed as lo + i*step (never by accumulation), so the grid is reproducible.
    :param lo: First grid point
    :param hi: Last grid point (inclusive)
    :param step: Positive stepsize
    :return: grid as numpy array
    """
    if step <= 0:
        raise ValueError('Grid step must be positive, got {}'.format(step))
    if hi < lo:
        raise ValueError('Grid upper end {} is below lower end {}'.format(hi, lo))
    nof_steps = int(np.floor((hi - lo) / step + GRID_TOLERANCE / step))
    grid = arange(lo, step, nof_steps)
    # Snap the last point onto hi to remove representation error
    if abs(grid[-1] - hi) <= GRID_TOLERANCE + 1e-9 * step:
        grid[-1] = hi
    return grid


def parse_grid(text):
    """
        Parses the grid syntax 'lo:hi:step' (inclusive of both ends within GRID_TOLERANCE).
        A single number is accepted as a one point grid.
    :param text: Grid specification string
    :return: grid as numpy array
    """
    parts = text.strip().split(':')
    try:
        values = [float(part) for part in parts]
    except ValueError:
        raise ValueError('Malformed grid {!r}, expected lo:hi:step'.format(text))
    if len(values) == 1:
        return np.array(values)
    if len(values) != 3:
        raise ValueError('Malformed grid {!r}, expected lo:hi:step'.format(text))
    return inclusive_grid(*values)
