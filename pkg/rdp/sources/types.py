"""
    Exact block probabilities via type classes. For every in-scope source the probability of a block
    depends only on its ones count k, so all quantities reduce to sums over k = 0..n.
"""
from dataclasses import dataclass
import math
from functools import lru_cache
import numpy as np
from rdp.utils.logmath import EXACT_BINOMIAL_CAP, log2_comb, log2_sum, log2_bernoulli_atom, exact_binomials, \
    log2_int
from rdp.sources.block import ones_count

# Allowed deviation of the total probability mass from 1
MASS_TOLERANCE = 1e-9


def _check_n(n):
    if int(n) != n or n < 1:
        raise ValueError('Block length must be a positive integer, got {}'.format(n))


def log2_atom_probs(model, k, n):
    """
        log2 of the probability of a single block with k ones (k may be an array)
    """
    k = np.asarray(k)
    terms = np.stack([np.log2(w) + log2_bernoulli_atom(p, k, n) for w, p in model.components])
    return log2_sum(terms, axis=0)


def block_log_prob(model, k, n):
    """
        log2 P_{X^n}(x^n) for any block x^n with k ones:
        log2(sum_j w_j p_j^k (1-p_j)^(n-k)), evaluated with log-sum-exp
    :param model: SourceModel
    :param k: Ones count, 0 <= k <= n
    :param n: Block length >= 1
    :return: log2-probability (float, -inf for impossible blocks)
    """
    _check_n(n)
    if int(k) != k or not 0 <= k <= n:
        raise ValueError('Ones count must satisfy 0 <= k <= n, got k={}, n={}'.format(k, n))
    return float(log2_atom_probs(model, int(k), n))


def block_log_probs(model, codes, n):
    """
        Vectorized block_log_prob for dense integer block codes
    """
    return log2_atom_probs(model, ones_count(codes, n), n)


@dataclass(frozen=True)
class TypeClassTable:
    """
        Per ones count k = 0..n: log2 of the class size C(n, k) and log2 of the probability of each atom
        in the class. counts holds the exact big integer class sizes for n <= EXACT_BINOMIAL_CAP and is
        None beyond.
    """
    n: int
    log2_counts: np.ndarray
    log2_atom_probs: np.ndarray
    counts: tuple = None

    @property
    def log2_class_masses(self):
        return self.log2_counts + self.log2_atom_probs

    @property
    def class_masses(self):
        return np.exp2(self.log2_class_masses)

    @property
    def self_information(self):
        """
            Normalized self-information (1/n) * (-log2 P(x^n)) of the atoms of each class
        """
        return -self.log2_atom_probs / self.n

    def rows(self):
        """
            Rows (k, count, log2_atom_prob); count is exact if available and its log2 value otherwise
        """
        counts = self.counts if self.counts is not None else self.log2_counts
        return [(k, counts[k], self.log2_atom_probs[k]) for k in range(self.n + 1)]

    def total_log2_mass(self):
        return log2_sum(self.log2_class_masses)

    def total_mass(self):
        """
            Total probability with compensated summation (math.fsum) of the class masses shifted by
            their maximum
        """
        masses = self.log2_class_masses
        shift = float(np.max(masses))
        return 2.0**shift * math.fsum(np.exp2(masses - shift).tolist())


@lru_cache(maxsize=64)
def build_type_table(model, n):
    """
        Exact type class table of the model at block length n (works in the log domain up to n ~ 1e5
        and beyond). The total mass invariant is checked before returning.
    :param model: SourceModel
    :param n: Block length >= 1
    :return: TypeClassTable
    """
    _check_n(n)
    k = np.arange(n + 1)
    counts = tuple(exact_binomials(n)) if n <= EXACT_BINOMIAL_CAP else None
    table = TypeClassTable(n=n, log2_counts=log2_comb(n, k), log2_atom_probs=log2_atom_probs(model, k, n),
                           counts=counts)
    total = table.total_mass()
    if abs(total - 1) > MASS_TOLERANCE:
        raise AssertionError('Type class table of {} at n={} has total mass {}'.format(model, n, total))
    return table


def top_mass(model, n, M):
    """
        Total probability of the M most probable blocks. Classes are taken greedily in order of
        decreasing atom probability, the last one possibly partially.
    :param model: SourceModel
    :param n: Block length
    :param M: Atom budget >= 1 (Python integers of any size are allowed)
    :return: probability
    """
    if M < 1:
        raise ValueError('Atom budget must be >= 1, got {}'.format(M))
    M = int(M)
    if M >= 2**n:
        return 1.0
    table = build_type_table(model, n)
    counts = table.counts if table.counts is not None else exact_binomials(n)
    order = np.argsort(-table.log2_atom_probs, kind='stable')
    remaining = M
    log2_terms = []
    for k in order:
        if remaining == 0:
            break
        taken = min(remaining, counts[k])
        log2_terms.append(log2_int(taken) + table.log2_atom_probs[k])
        remaining -= taken
    return float(min(1.0, np.exp2(log2_sum(log2_terms))))
