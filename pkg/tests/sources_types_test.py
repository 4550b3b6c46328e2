"""
    Tests for exact block probabilities via type classes against brute force enumeration
"""
import math
from rdp.sources.model import SourceModel
from rdp.sources.types import block_log_prob, block_log_probs, build_type_table, top_mass
from rdp.sources.block import all_blocks, from_bits, to_bits, format_block
import testutils.enumeration as enumeration
from testutils.random import generate_random_model
import numpy as np
import pytest


@pytest.mark.fast
@pytest.mark.parametrize("model, k, n, expected", [(SourceModel.bernoulli(0.5), 3, 8, -8.0),
                                                   (SourceModel.paper(), 1, 1, math.log2(5 / 8)),
                                                   (SourceModel.paper(), 0, 2, math.log2(5 / 32)),
                                                   (SourceModel.paper(), 2, 2, math.log2(13 / 32))])
def test_block_log_prob(model, k, n, expected):
    assert block_log_prob(model, k, n) == pytest.approx(expected, abs=1e-12)


@pytest.mark.fast
def test_uniform_is_exact():
    """
        Dyadic probabilities of the uniform source come out exactly, which the weak and strict
        inequalities of the spectrum and the code rely on
    :return:
    """
    for n in [1, 7, 63, 1000]:
        assert block_log_prob(SourceModel.bernoulli(0.5), n // 2, n) == -n


@pytest.mark.fast
@pytest.mark.parametrize("k, n", [(-1, 4), (5, 4), (1, 0), (1.5, 4)])
def test_block_log_prob_errors(k, n):
    with pytest.raises(ValueError):
        block_log_prob(SourceModel.paper(), k, n)


@pytest.mark.fast
def test_type_tables():
    table = build_type_table(SourceModel.bernoulli(0.5), 2)
    assert table.rows() == [(0, 1, -2.0), (1, 2, -2.0), (2, 1, -2.0)]
    table = build_type_table(SourceModel.paper(), 1)
    rows = table.rows()
    assert [row[1] for row in rows] == [1, 1]
    assert rows[0][2] == pytest.approx(math.log2(3 / 8))
    assert rows[1][2] == pytest.approx(math.log2(5 / 8))


@pytest.mark.fast
@pytest.mark.parametrize("n", [1, 2, 5, 10, 64, 65, 1000, 10**5])
def test_total_mass(n):
    table = build_type_table(SourceModel.paper(), n)
    assert np.exp2(table.total_log2_mass()) == pytest.approx(1.0, abs=1e-9)
    assert (table.counts is None) == (n > 64)


@pytest.mark.fast
@pytest.mark.parametrize("seed", range(5))
@pytest.mark.parametrize("n", [1, 3, 8, 12])
def test_against_enumeration(seed, n):
    """
        Type class probabilities agree with symbol by symbol multiplication over all blocks
    :param seed: Seed of the random model
    :param n: Block length
    :return:
    """
    model = generate_random_model(np.random.default_rng(seed))
    brute = enumeration.block_probabilities(model, n)
    fast = np.exp2(block_log_probs(model, all_blocks(n), n))
    assert fast == pytest.approx(brute, rel=1e-10, abs=1e-300)
    assert brute.sum() == pytest.approx(1.0, abs=1e-9)


@pytest.mark.fast
def test_exchangeability():
    """
        Permuting the symbols of a block leaves its probability unchanged
    :return:
    """
    rng = np.random.default_rng(5)
    model = SourceModel.paper()
    n = 20
    for _ in range(20):
        bits = (rng.random(n) < 0.4).astype(np.uint8)
        permuted = rng.permutation(bits)
        codes = np.array([from_bits(bits), from_bits(permuted)])
        a, b = block_log_probs(model, codes, n)
        assert a == b


@pytest.mark.fast
def test_block_codes():
    assert format_block(from_bits([1, 0, 1, 1]), 4) == '1011'
    assert list(to_bits(0b1011, 4)) == [1, 0, 1, 1]
    assert from_bits(to_bits(np.arange(16), 4)).tolist() == list(range(16))


@pytest.mark.fast
@pytest.mark.parametrize("model, n, M, expected", [(SourceModel.bernoulli(0.5), 2, 2, 0.5),
                                                   (SourceModel.bernoulli(0.5), 2, 4, 1.0),
                                                   (SourceModel.bernoulli(0.5), 2, 100, 1.0),
                                                   (SourceModel.paper(), 2, 1, 13 / 32)])
def test_top_mass(model, n, M, expected):
    assert top_mass(model, n, M) == pytest.approx(expected, abs=1e-12)


@pytest.mark.fast
@pytest.mark.parametrize("n", [1, 4, 9])
def test_top_mass_against_enumeration(n):
    model = SourceModel.paper()
    values = [top_mass(model, n, M) for M in range(1, 2**n + 1)]
    assert values == pytest.approx([enumeration.top_mass(model, n, M) for M in range(1, 2**n + 1)], abs=1e-12)
    assert np.all(np.diff(values) >= -1e-15)
    assert values[-1] == 1.0


@pytest.mark.fast
def test_top_mass_large_n():
    assert top_mass(SourceModel.paper(), 1000, 2**1000) == 1.0
    assert 0 < top_mass(SourceModel.paper(), 1000, 2**900) < 1
    with pytest.raises(ValueError):
        top_mass(SourceModel.paper(), 4, 0)


@pytest.mark.fast
@pytest.mark.parametrize("n", [1, 10, 64, 65, 1000, 10**4])
def test_total_mass_compensated(n):
    table = build_type_table(SourceModel.paper(), n)
    assert table.total_mass() == pytest.approx(1.0, abs=1e-9)
    assert table.total_mass() == pytest.approx(2**table.total_log2_mass(), abs=1e-12)
