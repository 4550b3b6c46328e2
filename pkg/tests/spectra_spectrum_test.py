"""
    Tests for exact finite-n spectral CDFs, the asymptotic step function and the p-limsup diagnostic
"""
from rdp.sources.model import SourceModel
from rdp.spectra import spectral_cdf_exact, exceedance_curve, asymptotic_spectral_cdf, plimsup_estimate, \
    sample_self_information, binary_entropy, StepFunction
from rdp.utils.grid import inclusive_grid
from rdp.utils.random import get_rng
import testutils.enumeration as enumeration
from testutils.random import generate_random_model
import numpy as np
import pytest

H_QUARTER = binary_entropy(0.25)


@pytest.mark.fast
@pytest.mark.parametrize("n", [1, 10, 63, 1000])
def test_uniform_boundary(n):
    """
        Every block of the uniform source has self-information exactly 1 bit per symbol, so the weak
        inequality includes all of them at R = 1
    :param n: Block length
    :return:
    """
    model = SourceModel.bernoulli(0.5)
    assert spectral_cdf_exact(model, n, 1.0) == pytest.approx(1.0, abs=1e-9)
    assert spectral_cdf_exact(model, n, 1.01) == 0.0


@pytest.mark.fast
@pytest.mark.parametrize("R, expected, tol", [(0.70, 1.0, 1e-3), (0.90, 0.5, 1e-3), (1.05, 0.0, 1e-3)])
def test_canonical_convergence(R, expected, tol):
    assert spectral_cdf_exact(SourceModel.paper(), 10**4, R) == pytest.approx(expected, abs=tol)


@pytest.mark.fast
def test_convergence_away_from_thresholds():
    model = SourceModel.paper()
    steps = asymptotic_spectral_cdf(model)
    for R in inclusive_grid(0.0, 1.3, 0.01):
        if min(abs(R - t) for t in steps.thresholds) >= 0.05:
            assert spectral_cdf_exact(model, 10**4, R) == pytest.approx(steps(R), abs=1e-3)


@pytest.mark.fast
def test_monotone_on_grid():
    model = SourceModel.paper()
    grid = np.linspace(0.5, 1.2, 100)
    values = [spectral_cdf_exact(model, 500, R) for R in grid]
    assert np.all(np.diff(values) <= 1e-15)
    curve = exceedance_curve(model, 500, grid)
    assert curve.values == pytest.approx(values, abs=1e-12)
    assert np.all((curve.values >= 0) & (curve.values <= 1))


@pytest.mark.fast
@pytest.mark.parametrize("seed", range(4))
@pytest.mark.parametrize("n", [1, 4, 11, 16])
def test_against_enumeration(seed, n):
    model = generate_random_model(np.random.default_rng(seed))
    grid = np.linspace(0, 3, 31)
    curve = exceedance_curve(model, n, grid)
    for R, F in curve.points:
        assert F == pytest.approx(enumeration.spectral_cdf(model, n, R), abs=1e-12)
        assert spectral_cdf_exact(model, n, R) == pytest.approx(F, abs=1e-12)


@pytest.mark.fast
def test_canonical_step_function():
    steps = asymptotic_spectral_cdf(SourceModel.paper())
    assert steps.thresholds[0] == pytest.approx(H_QUARTER, abs=1e-12)
    assert steps.thresholds[1] == 1.0
    assert steps.levels == (1.0, 0.5, 0.0)
    # A threshold carries the new level
    assert steps(H_QUARTER) == 0.5
    assert steps(1.0) == 0.0
    assert steps(0.5) == 1.0
    assert steps(0.999) == 0.5


@pytest.mark.fast
@pytest.mark.parametrize("text, thresholds, levels", [('bernoulli:0.25', [H_QUARTER], (1.0, 0.0)),
                                                      ('mix:0.25*0.5,0.75*0.75', [H_QUARTER, 1.0],
                                                       (1.0, 0.25, 0.0)),
                                                      ('mix:0.5*0.25,0.5*0.75', [H_QUARTER], (1.0, 0.0))])
def test_step_functions(text, thresholds, levels):
    steps = asymptotic_spectral_cdf(SourceModel.parse(text))
    assert list(steps.thresholds) == pytest.approx(thresholds, abs=1e-12)
    assert steps.levels == pytest.approx(levels, abs=1e-12)


@pytest.mark.fast
def test_step_function_cross_check():
    model = SourceModel.parse('mix:0.25*0.5,0.75*0.75')
    steps = asymptotic_spectral_cdf(model)
    for R in [0.7, 0.9, 1.05]:
        assert spectral_cdf_exact(model, 10**4, R) == pytest.approx(steps(R), abs=1e-2)


@pytest.mark.fast
def test_step_function_validation():
    with pytest.raises(ValueError):
        StepFunction(thresholds=(0.5, 0.4), levels=(1.0, 0.5, 0.0))
    with pytest.raises(ValueError):
        StepFunction(thresholds=(0.5, ), levels=(1.0, 1.0))
    with pytest.raises(ValueError):
        StepFunction(thresholds=(0.5, ), levels=(1.0, ))
    steps = StepFunction(thresholds=(0.5, 1.0), levels=(1.0, 0.5, 0.0))
    assert steps.first_rate_at_most(0.5) == 0.5
    assert steps.first_rate_at_most(0.4) == 1.0
    assert steps.first_rate_at_most(1.0) == 0.0


@pytest.mark.fast
def test_plimsup_constant():
    assert plimsup_estimate([(10, [0.3] * 200)]) == pytest.approx(0.3)


@pytest.mark.fast
def test_plimsup_two_point():
    values = [0.81] * 500 + [1.0] * 500
    assert plimsup_estimate([(100, values)], tail=0.25) == 1.0


@pytest.mark.fast
def test_plimsup_uses_largest_n():
    rng = get_rng(102)
    n = 10**4
    fractions = rng.binomial(n, 0.5, size=1000) / n
    samples = [(10, [5.0] * 1000), (n, fractions), (10**5, [9.0] * 10)]
    assert plimsup_estimate(samples, tail=0.01) == pytest.approx(0.5, abs=0.02)


@pytest.mark.fast
@pytest.mark.parametrize("samples, tail", [([], 0.01), ([(10, [1.0] * 99)], 0.01), ([(10, [1.0] * 200)], 0.5),
                                           ([(10, [1.0] * 200)], 0.0)])
def test_plimsup_errors(samples, tail):
    with pytest.raises(ValueError):
        plimsup_estimate(samples, tail)


@pytest.mark.fast
def test_self_information_samples():
    """
        Normalized self-information of the canonical source concentrates at h(1/4) and 1
    :return:
    """
    values = sample_self_information(SourceModel.paper(), 10**4, 2000, get_rng(4))
    near = (np.abs(values - H_QUARTER) < 0.03) | (np.abs(values - 1.0) < 0.03)
    assert near.mean() > 0.99
    assert plimsup_estimate([(10**4, values)], tail=0.01) == pytest.approx(1.0, abs=0.01)
