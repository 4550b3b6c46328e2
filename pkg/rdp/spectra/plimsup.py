"""
    Empirical diagnostic for the limit superior in probability
"""
import numpy as np

# Minimum number of samples at a block length to be used by the estimator
MIN_SAMPLES = 100


def plimsup_estimate(samples, tail=0.01):
    """
        Empirical (1 - tail) quantile of the samples at the largest block length that has at least
        MIN_SAMPLES samples. This is a diagnostic heuristic: the p-limsup involves a double limit that no
        finite procedure can certify, so this is not a convergent estimator.
    :param samples: Iterable of (n, values) pairs
    :param tail: Tail probability in (0, 0.5)
    :return: quantile value
    """
    if not 0 < tail < 0.5:
        raise ValueError('Tail probability must lie in (0, 0.5), got {}'.format(tail))
    usable = [(n, np.asarray(values, dtype=float)) for n, values in samples if len(values) >= MIN_SAMPLES]
    if not usable:
        raise ValueError('plimsup_estimate needs at least one block length with >= {} samples'
                         .format(MIN_SAMPLES))
    _, values = max(usable, key=lambda item: item[0])
    return float(np.quantile(values, 1 - tail))
