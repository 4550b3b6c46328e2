"""
    Binary entropy function (in bits) and its inverse on [0, 1/2]
"""
import numpy as np
from scipy.optimize import bisect
from scipy.special import entr
from rdp.utils.logmath import LN2

# Absolute tolerance of the inverse
INVERSE_TOLERANCE = 1e-13


def binary_entropy(u):
    """
        h(u) = -u log2 u - (1-u) log2(1-u) with h(0) = h(1) = 0, for scalars or arrays
    :param u: probability (or array of probabilities) in [0, 1]
    :return: h(u) in bits
    """
    u_arr = np.asarray(u, dtype=float)
    if np.any((u_arr < 0) | (u_arr > 1)) or np.any(np.isnan(u_arr)):
        raise ValueError('Binary entropy is defined on [0, 1], got {}'.format(u))
    h = (entr(u_arr) + entr(1 - u_arr)) / LN2
    if h.ndim == 0:
        return float(h)
    return h


def binary_entropy_inv(t):
    """
        Unique d in [0, 1/2] with h(d) = t, found by bisection
    :param t: entropy value in [0, 1] (bits)
    :return: probability in [0, 1/2]
    """
    if not 0 <= t <= 1:
        raise ValueError('Inverse binary entropy is defined on [0, 1], got {}'.format(t))
    if t == 0:
        return 0.0
    if t == 1:
        return 0.5
    return bisect(lambda d: binary_entropy(d) - t, 0.0, 0.5, xtol=INVERSE_TOLERANCE, maxiter=200)
