"""
    Local search over codebooks and encoder maps for block lengths where exhaustive enumeration is out of
    reach. Each restart minimizes the scalarized objective D + lam * sigma for its own weight lam.
"""
import logging
import numpy as np
from rdp.oracle.witness import witness_metrics, canonical_witness
from rdp.utils.random import get_rng

logger = logging.getLogger(__name__)

RESTARTS = 64

# Upper limit of improvement sweeps per restart
MAX_SWEEPS = 1000


def restart_weight(restart, restarts=RESTARTS):
    """
        Weight of sigma in the objective of a restart, log-spaced over [1e-2, 1e2]
    """
    if restarts == 1:
        return 1.0
    return 10**(-2 + 4 * restart / (restarts - 1))


def _nearest_encoder(distances, codebook):
    return np.argmin(distances[:, codebook], axis=1)


def local_search(probs, distances, m, restart, seed=102, restarts=RESTARTS):
    """
        One restart of the local search: starts from a random codebook of m blocks (restart 0 uses the m
        most probable blocks) with the nearest codeword encoder, then applies improving moves (reassign one
        block, or replace one codeword by an unused block) until none is left.
    :param probs: Block probabilities
    :param distances: Per-symbol distance matrix between blocks
    :param m: Codebook size
    :param restart: Restart index, also the random substream
    :param seed: Seed of the random starts
    :param restarts: Total number of restarts (sets the objective weights)
    :return: list of (D, sigma, witness) for every accepted state
    """
    N = len(probs)
    lam = restart_weight(restart, restarts)
    if restart == 0:
        codebook = np.sort(np.argsort(-probs, kind='stable')[:m])
    else:
        codebook = np.sort(get_rng(seed, restart).choice(N, size=m, replace=False))
    encoder = _nearest_encoder(distances, codebook)

    def objective(cb, enc):
        D, sigma = witness_metrics(probs, distances, cb, enc)
        return D + lam * sigma, D, sigma

    value, D, sigma = objective(codebook, encoder)
    visited = [(D, sigma, canonical_witness(codebook, encoder))]
    for _ in range(MAX_SWEEPS):
        improved = False
        for x in range(N):
            for j in range(m):
                if j == encoder[x]:
                    continue
                trial = encoder.copy()
                trial[x] = j
                trial_value, D, sigma = objective(codebook, trial)
                if trial_value < value - 1e-15:
                    encoder, value, improved = trial, trial_value, True
                    visited.append((D, sigma, canonical_witness(codebook, encoder)))
        unused = np.setdiff1d(np.arange(N), codebook)
        for i in range(m):
            for block in unused:
                if block in codebook:
                    continue
                trial = codebook.copy()
                trial[i] = block
                trial_value, D, sigma = objective(trial, encoder)
                if trial_value < value - 1e-15:
                    codebook, value, improved = trial, trial_value, True
                    visited.append((D, sigma, canonical_witness(codebook, encoder)))
        if not improved:
            break
    logger.debug('Restart %d (lam=%.3g) ended at objective %.6g after %d accepted moves', restart, lam, value,
                 len(visited) - 1)
    return visited
