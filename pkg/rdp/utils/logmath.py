"""
    Log domain arithmetic in base 2. All probabilities in the package are handled as log2 values
"""
import math
import numpy as np
from scipy.special import gammaln

LN2 = math.log(2)

# Binomial coefficients are exact big integers up to this block length, log gamma based beyond
EXACT_BINOMIAL_CAP = 64


def log2_sum(log2_terms, axis=None):
    """
        Stable log2(sum_i 2^a_i) (log-sum-exp in base 2). A single term is returned unchanged, which
        keeps dyadic probabilities exact. Returns -inf for empty or all -inf input.
    :param log2_terms: array of log2 values
    :param axis: axis to reduce (None reduces all)
    :return: float (or array if axis is given)
    """
    a = np.asarray(log2_terms, dtype=float)
    if a.size == 0:
        return -np.inf
    m = np.max(a, axis=axis, keepdims=True)
    m = np.where(np.isfinite(m), m, 0.0)
    with np.errstate(divide='ignore'):
        result = np.log2(np.sum(np.exp2(a - m), axis=axis, keepdims=True)) + m
    if axis is None:
        return float(result.reshape(()))
    return np.squeeze(result, axis=axis)


def log2_comb(n, k):
    """
        log2 of the binomial coefficient C(n, k) for scalar or array k. Exact (via math.comb) for
        n <= EXACT_BINOMIAL_CAP, log gamma approximation beyond (relative error well below 1e-9)
    """
    k = np.asarray(k)
    if n <= EXACT_BINOMIAL_CAP:
        values = np.array([math.log2(math.comb(n, int(ki))) for ki in k.ravel()], dtype=float)
        return values.reshape(k.shape)
    return (gammaln(n + 1) - gammaln(k + 1) - gammaln(n - k + 1)) / LN2


def exact_binomials(n):
    """
        Exact big integer binomial coefficients C(n, 0), ..., C(n, n), computed by the multiplicative
        recurrence (no factorials)
    """
    counts = [1]
    for k in range(n):
        counts.append(counts[-1] * (n - k) // (k + 1))
    return counts


def _xlog2y(x, y):
    """
        x * log2(y) with 0 * log2(0) = 0
    """
    x = np.asarray(x, dtype=float)
    if y == 0:
        return np.where(x == 0, 0.0, -np.inf)
    return x * math.log2(y)


def log2_bernoulli_atom(p, k, n):
    """
        log2(p^k (1-p)^(n-k)) for arrays of ones counts k, with the convention 0*log(0) = 0
    """
    k = np.asarray(k, dtype=float)
    return _xlog2y(k, p) + _xlog2y(n - k, 1 - p)


def log2_int(value):
    """
        log2 of a (possibly huge) positive Python integer
    """
    if value <= 0:
        raise ValueError('log2 of non-positive integer {}'.format(value))
    return math.log2(value)


def below_log2_int(values, M):
    """
        Elementwise values < log2(M) for a (possibly huge) Python integer M. Integral values k are decided
        exactly by 2^k < M, since log2(M) rounds to k for M = 2^k + 1 once k exceeds the float mantissa.
    :param values: array of log2 values (self-information of atoms, may contain inf)
    :param M: Positive Python integer
    :return: boolean array
    """
    M = int(M)
    log2_m = log2_int(M)
    values = np.asarray(values, dtype=float)
    flat = values.reshape(-1)
    mask = flat < log2_m
    integral = np.isfinite(flat) & (flat == np.round(flat)) & (flat >= 0)
    for i in np.flatnonzero(integral):
        mask[i] = (1 << int(flat[i])) < M
    return mask.reshape(values.shape)
