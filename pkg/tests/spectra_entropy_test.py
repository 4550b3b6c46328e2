"""
    Tests for the binary entropy function and its inverse
"""
from rdp.spectra.entropy import binary_entropy, binary_entropy_inv
import testutils.enumeration as enumeration
import numpy as np
import pytest


@pytest.mark.fast
@pytest.mark.parametrize("u, expected", [(0.5, 1.0), (0.0, 0.0), (1.0, 0.0), (0.25, 0.811278124459133),
                                         (0.1, 0.468995593589281), (0.11, 0.499915958164528)])
def test_binary_entropy(u, expected):
    assert binary_entropy(u) == pytest.approx(expected, abs=1e-6)


@pytest.mark.fast
def test_exact_maximum():
    assert binary_entropy(0.5) == 1.0


@pytest.mark.fast
def test_symmetry_and_reference():
    u = np.linspace(0, 1, 101)
    assert binary_entropy(u) == pytest.approx(binary_entropy(1 - u), abs=1e-12)
    assert binary_entropy(u) == pytest.approx([enumeration.binary_entropy(x) for x in u], abs=1e-12)


@pytest.mark.fast
@pytest.mark.parametrize("t, expected", [(1.0, 0.5), (0.0, 0.0), (0.811278, 0.25)])
def test_inverse(t, expected):
    assert binary_entropy_inv(t) == pytest.approx(expected, abs=1e-6)


@pytest.mark.fast
def test_inverse_round_trip():
    for d in np.linspace(0, 0.5, 51):
        assert binary_entropy_inv(binary_entropy(d)) == pytest.approx(d, abs=1e-10)


@pytest.mark.fast
@pytest.mark.parametrize("function, value", [(binary_entropy, -0.1), (binary_entropy, 1.1),
                                             (binary_entropy_inv, -1e-3), (binary_entropy_inv, 1.5)])
def test_domain_errors(function, value):
    with pytest.raises(ValueError):
        function(value)
