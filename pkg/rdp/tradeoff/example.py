"""
    The closed form R(D, S) printed for the canonical mixed source (Bernoulli(1/2) and Bernoulli(3/4),
    equal weights, logarithms in base 2)
"""
from rdp.spectra.entropy import binary_entropy

H_QUARTER = binary_entropy(0.25)

# Largest distortion covered by the printed formula
MAX_DISTORTION = 0.5


def rdp_paper_example(D, S):
    """
        Piecewise R(D, S) of the canonical mixed source:
            1                      if S = 0
            max{h(1/4), 1 - h(D)}  if 0 < S <= 1/2
            1 - h(D)               if 1/2 < S
    :param D: Per-symbol distortion in [0, 1/2]
    :param S: Variational distance budget in [0, 1]
    :return: bits/symbol
    """
    if not 0 <= D <= MAX_DISTORTION:
        raise ValueError('The printed formula covers D in [0, 1/2], got {}'.format(D))
    if not 0 <= S <= 1:
        raise ValueError('Perception budget must lie in [0, 1], got {}'.format(S))
    if S == 0:
        return 1.0
    elif S <= 0.5:
        return max(H_QUARTER, 1 - binary_entropy(D))
    else:
        return 1 - binary_entropy(D)
