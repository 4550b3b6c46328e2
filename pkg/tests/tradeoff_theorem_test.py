"""
    Tests for the closed form R(D, S) and the printed piecewise formula of the canonical source
"""
from rdp.sources.model import SourceModel
from rdp.spectra import binary_entropy
from rdp.tradeoff import rd_term, perception_term, rdp_theorem, rdp_paper_example, TradeoffPoint
import numpy as np
import pytest

H_QUARTER = binary_entropy(0.25)
PAPER = SourceModel.paper()


@pytest.mark.fast
@pytest.mark.parametrize("D, expected", [(0.0, 1.0), (0.5, 0.0), (0.1, 1 - binary_entropy(0.1)), (0.7, 0.0)])
def test_rd_term(D, expected):
    assert rd_term(PAPER, D) == pytest.approx(expected, abs=1e-12)


@pytest.mark.fast
def test_rd_term_value():
    assert rd_term(PAPER, 0.1) == pytest.approx(0.531004, abs=1e-6)


@pytest.mark.fast
@pytest.mark.parametrize("S, expected", [(0.0, 1.0), (0.5, H_QUARTER), (0.4, 1.0), (0.75, H_QUARTER), (1.0, 0.0)])
def test_perception_term(S, expected):
    assert perception_term(PAPER, S) == pytest.approx(expected, abs=1e-12)


@pytest.mark.fast
@pytest.mark.parametrize("model, D, S, expected", [(PAPER, 0.1, 0.5, H_QUARTER), (PAPER, 0.0, 1.0, 1.0),
                                                   (SourceModel.bernoulli(0.5), 0.11, 1.0,
                                                    1 - binary_entropy(0.11))])
def test_theorem(model, D, S, expected):
    breakdown = rdp_theorem(model, D, S)
    assert breakdown.value == pytest.approx(expected, abs=1e-12)
    assert breakdown.value == max(breakdown.rd_term, breakdown.perception_term)


@pytest.mark.fast
def test_breakdown_details():
    breakdown = rdp_theorem(PAPER, 0.1, 0.5)
    assert breakdown.binding == 'perception'
    assert breakdown.rd_component == 0
    assert breakdown.perception_level == 0.5
    assert rdp_theorem(PAPER, 0.0, 0.0).binding == 'both'
    assert rdp_theorem(PAPER, 0.0, 1.0).binding == 'rd'


@pytest.mark.fast
def test_monotone_and_max_structure():
    """
        R(D, S) is nonincreasing in both arguments and dominates both of its terms
    :return:
    """
    d_grid = np.linspace(0, 0.6, 100)
    s_grid = np.linspace(0, 1, 100)
    for model in [PAPER, SourceModel.parse('mix:0.2*0.1,0.3*0.3,0.5*0.5')]:
        values = np.array([[rdp_theorem(model, D, S).value for S in s_grid] for D in d_grid])
        assert np.all(np.diff(values, axis=0) <= 1e-15)
        assert np.all(np.diff(values, axis=1) <= 1e-15)
        for i in range(0, 100, 11):
            for j in range(0, 100, 11):
                assert values[i, j] >= rd_term(model, d_grid[i])
                assert values[i, j] >= perception_term(model, s_grid[j])


@pytest.mark.fast
def test_unconstrained_perception():
    for D in np.linspace(0, 1, 11):
        assert rdp_theorem(PAPER, D, 1.0).value == rd_term(PAPER, D)
        if D >= 0.5:
            assert rd_term(PAPER, D) == 0.0


@pytest.mark.fast
@pytest.mark.parametrize("D, S, expected", [(0.1, 0.0, 1.0), (0.1, 0.5, H_QUARTER),
                                            (0.25, 0.75, 1 - H_QUARTER), (0.0, 1.0, 1.0)])
def test_paper_example(D, S, expected):
    assert rdp_paper_example(D, S) == pytest.approx(expected, abs=1e-9)


@pytest.mark.fast
def test_paper_example_values():
    assert rdp_paper_example(0.1, 0.5) == pytest.approx(0.811278, abs=1e-6)
    assert rdp_paper_example(0.25, 0.75) == pytest.approx(0.188722, abs=1e-6)
    assert rdp_theorem(PAPER, 0.0, 1.0).rd_term == 1.0


@pytest.mark.fast
def test_paper_example_branches():
    """
        Branch boundaries exactly as printed: S = 0 alone, (0, 1/2] and (1/2, 1]
    :return:
    """
    D = 0.3
    middle = max(H_QUARTER, 1 - binary_entropy(D))
    assert rdp_paper_example(D, 0.0) == 1.0
    assert rdp_paper_example(D, 1e-9) == middle
    assert rdp_paper_example(D, 0.5) == middle
    assert rdp_paper_example(D, 0.5 + 1e-9) == 1 - binary_entropy(D)
    assert rdp_paper_example(D, 1.0) == 1 - binary_entropy(D)


@pytest.mark.fast
@pytest.mark.parametrize("function, args", [(rd_term, (PAPER, -0.1)), (perception_term, (PAPER, 1.1)),
                                            (perception_term, (PAPER, -0.1)), (rdp_paper_example, (0.6, 0.5)),
                                            (rdp_paper_example, (0.1, 1.5)), (rdp_theorem, (PAPER, -1, 0.5))])
def test_domain_errors(function, args):
    with pytest.raises(ValueError):
        function(*args)


@pytest.mark.fast
def test_tradeoff_point():
    TradeoffPoint(R=0.5, D=0.1, S=0.5)
    with pytest.raises(ValueError):
        TradeoffPoint(R=-0.1, D=0.1, S=0.5)
    with pytest.raises(ValueError):
        TradeoffPoint(R=0.1, D=0.1, S=1.5)
