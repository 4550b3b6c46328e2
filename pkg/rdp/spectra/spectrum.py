"""
    Information spectrum of mixture sources: exact finite-n exceedance probabilities of the normalized
    self-information and the asymptotic step function they converge to.
"""
from dataclasses import dataclass
import numpy as np
from rdp.sources.types import build_type_table, log2_atom_probs
from rdp.sources.sampling import sample_ones_counts
from rdp.spectra.entropy import binary_entropy
from rdp.spectra.step import StepFunction
from rdp.utils.logmath import log2_sum

# Component entropies closer than this are merged into one threshold
THRESHOLD_MERGE_TOLERANCE = 1e-12


@dataclass(frozen=True)
class ExceedanceCurve:
    """
        Finite-n spectral CDF F_n(R) = Pr[(1/n) log2 1/P(X^n) >= R] on a grid of rates
    """
    n: int
    points: tuple
    exact: bool = True

    @property
    def rates(self):
        return np.array([r for r, _ in self.points])

    @property
    def values(self):
        return np.array([f for _, f in self.points])


def spectral_cdf_exact(model, n, R):
    """
        Pr[(1/n) * (-log2 P_{X^n}(X^n)) >= R], summing the masses of all type classes whose per-atom
        self-information reaches R (weak inequality)
    :param model: SourceModel
    :param n: Block length >= 1
    :param R: Rate in bits/symbol
    :return: probability
    """
    table = build_type_table(model, n)
    selected = table.self_information >= R
    if not np.any(selected):
        return 0.0
    return float(min(1.0, np.exp2(log2_sum(table.log2_class_masses[selected]))))


def exceedance_curve(model, n, r_grid):
    """
        spectral_cdf_exact on a whole grid of rates, using one pass over the sorted type classes
    :param model: SourceModel
    :param n: Block length >= 1
    :param r_grid: Iterable of rates
    :return: ExceedanceCurve
    """
    table = build_type_table(model, n)
    order = np.argsort(-table.self_information, kind='stable')
    info_desc = table.self_information[order]
    masses_desc = table.class_masses[order]
    tail = np.minimum(1.0, np.cumsum(masses_desc))
    points = []
    for R in r_grid:
        # Number of classes with self-information >= R
        count = np.searchsorted(-info_desc, -R, side='right')
        points.append((float(R), float(tail[count - 1]) if count > 0 else 0.0))
    return ExceedanceCurve(n=n, points=tuple(points), exact=True)


def asymptotic_spectral_cdf(model):
    """
        Limit of the spectral CDF for a mixture of memoryless sources: starts at 1 and drops by the
        weight of every component at its entropy h(p_j) (components with equal entropy are merged).
    :param model: SourceModel
    :return: StepFunction
    """
    entropies = [(binary_entropy(p), w) for w, p in model.components]
    entropies.sort()
    thresholds = []
    drops = []
    for h, w in entropies:
        if thresholds and h - thresholds[-1] <= THRESHOLD_MERGE_TOLERANCE:
            drops[-1] += w
        else:
            thresholds.append(h)
            drops.append(w)
    levels = [1.0]
    for drop in drops:
        levels.append(max(0.0, levels[-1] - drop))
    # Weights sum to 1 within 1e-12, the last level is exactly 0
    levels[-1] = 0.0
    return StepFunction(thresholds=tuple(thresholds), levels=tuple(levels))


def sample_self_information(model, n, size, rng):
    """
        Draws samples of the normalized self-information (1/n) * (-log2 P_{X^n}(X^n))
    :param model: SourceModel
    :param n: Block length
    :param size: Number of samples
    :param rng: numpy Generator
    :return: numpy array of samples in bits/symbol
    """
    counts, _ = sample_ones_counts(model, n, size, rng)
    return -log2_atom_probs(model, counts, n) / n
