"""
    Closed-form finite-n bounds that every code with a limited number of reconstruction values obeys
"""
from rdp.sources.types import top_mass
from rdp.spectra.entropy import binary_entropy, binary_entropy_inv
from rdp.utils.logmath import log2_int


def min_sigma_closed_form(model, n, M):
    """
        Exact minimum of the variational distance over all codes with at most M reconstruction values:
        1 - (mass of the M most probable blocks). It is attained by mapping every block into the top-M set
        while fixing the members of that set.
    :param model: SourceModel
    :param n: Block length
    :param M: Number of reconstruction values (Python integer >= 1)
    :return: variational distance
    """
    return max(0.0, 1.0 - top_mass(model, n, M))


def iid_distortion_bound(p, n, total_indices):
    """
        Finite-n rate-distortion converse for a Bernoulli(p) source: any code with total_indices indices
        has expected per-symbol Hamming distortion >= h^-1((h(p) - log2(total_indices)/n)^+)
    """
    if total_indices < 1:
        raise ValueError('Number of indices must be >= 1, got {}'.format(total_indices))
    excess = binary_entropy(p) - log2_int(int(total_indices)) / n
    return binary_entropy_inv(min(1.0, max(0.0, excess)))
