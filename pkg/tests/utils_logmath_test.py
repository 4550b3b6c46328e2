"""
    Tests for the base 2 log domain helpers
"""
import math
from rdp.utils.logmath import log2_sum, log2_comb, exact_binomials, log2_bernoulli_atom, log2_int, below_log2_int
from rdp.utils.random import get_rng, chunk_sizes
import numpy as np
import pytest


@pytest.mark.fast
def test_log2_sum_exact_cases():
    """
        A single term passes through unchanged and two equal terms add exactly one bit
    :return:
    """
    assert log2_sum([-8.0]) == -8.0
    assert log2_sum([0.0, 0.0]) == 1.0
    assert log2_sum([]) == -np.inf
    assert log2_sum([-np.inf, -np.inf]) == -np.inf
    assert log2_sum([-np.inf, 3.0]) == 3.0


@pytest.mark.fast
def test_log2_sum_large_magnitudes():
    assert log2_sum([-5000.0, -5000.0]) == pytest.approx(-4999.0, abs=1e-12)
    assert log2_sum([2000.0, 0.0]) == pytest.approx(2000.0, abs=1e-12)


@pytest.mark.fast
def test_log2_sum_axis():
    terms = np.log2(np.array([[1.0, 2.0], [3.0, 6.0]]))
    assert log2_sum(terms, axis=0) == pytest.approx(np.log2([4.0, 8.0]))
    assert log2_sum(terms, axis=1) == pytest.approx(np.log2([3.0, 9.0]))


@pytest.mark.fast
@pytest.mark.parametrize("n", [1, 5, 20, 64, 65, 100, 1000])
def test_log2_comb(n):
    k = np.arange(n + 1)
    expected = np.array([math.log2(math.comb(n, int(ki))) for ki in k])
    assert log2_comb(n, k) == pytest.approx(expected, rel=1e-9, abs=1e-9)


@pytest.mark.fast
def test_exact_binomials():
    assert exact_binomials(5) == [1, 5, 10, 10, 5, 1]
    assert exact_binomials(100)[50] == math.comb(100, 50)


@pytest.mark.fast
def test_degenerate_atoms():
    assert log2_bernoulli_atom(0.0, 0, 4) == 0.0
    assert log2_bernoulli_atom(0.0, 1, 4) == -np.inf
    assert log2_bernoulli_atom(1.0, 4, 4) == 0.0
    assert log2_bernoulli_atom(0.5, 3, 8) == -8.0


@pytest.mark.fast
def test_log2_int():
    assert log2_int(2**900) == 900.0
    assert log2_int(1) == 0.0
    with pytest.raises(ValueError):
        log2_int(0)


@pytest.mark.fast
def test_substreams():
    """
        Equal (seed, stream) pairs reproduce, different streams differ
    :return:
    """
    assert np.array_equal(get_rng(7, 3).random(5), get_rng(7, 3).random(5))
    assert not np.array_equal(get_rng(7, 3).random(5), get_rng(7, 4).random(5))
    assert np.array_equal(get_rng(7).random(5), get_rng(7).random(5))
    with pytest.raises(ValueError):
        get_rng(-1)


@pytest.mark.fast
@pytest.mark.parametrize("total, chunk, expected", [(10, 4, [4, 4, 2]), (8, 4, [4, 4]), (0, 4, []), (3, 4, [3])])
def test_chunk_sizes(total, chunk, expected):
    assert chunk_sizes(total, chunk) == expected


@pytest.mark.fast
@pytest.mark.parametrize("k", [3, 10, 52, 53, 60, 1000])
def test_below_log2_int_at_powers_of_two(k):
    values = np.array([k, k - 0.5, np.inf], dtype=float)
    assert below_log2_int(values, 2**k + 1).tolist() == [True, True, False]
    assert below_log2_int(values, 2**k).tolist() == [False, True, False]
    assert below_log2_int(values, 2**k - 1).tolist() == [False, k > 1, False]


@pytest.mark.fast
def test_below_log2_int_shape():
    values = np.array([[0.0, 1.0], [1.5, 2.0]])
    assert below_log2_int(values, 2).tolist() == [[True, False], [False, False]]
    assert below_log2_int(values, 3).tolist() == [[True, True], [True, False]]
    assert below_log2_int(values, 1).tolist() == [[False, False], [False, False]]
