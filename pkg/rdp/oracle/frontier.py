"""
    Exact finite-n ground truth: the Pareto frontier of (expected per-symbol distortion, variational
    distance) over all deterministic codes with at most M reconstruction values. The search is decoder
    first: every codebook of min(M, 2^n) blocks is enumerated together with every encoder map into it
    (smaller codebooks are covered by maps that leave codewords unused).
"""
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import partial
from itertools import combinations
import logging
import math
import numpy as np
from tqdm import tqdm
from rdp.oracle.heuristic import local_search, RESTARTS
from rdp.oracle.witness import block_probabilities, distance_matrix, format_witness
from rdp.utils.errors import ResourceLimitError

logger = logging.getLogger(__name__)

MAX_EXHAUSTIVE_LENGTH = 3
HEURISTIC_LENGTH = 4

# Both coordinates are rounded to this resolution before comparing points
PARETO_TOLERANCE = 1e-12

# Cap on the total number of (codebook, encoder map) pairs of an exhaustive search
MAX_ENCODER_MAPS = 2**26

# Encoder maps evaluated per vectorized batch
_MAP_CHUNK = 2**16

_DECIMALS = 12


@dataclass(frozen=True)
class FrontierPoint:
    """
        Point of the frontier with a witness code (codebook, encoder map) attaining it. exhaustive is False
        for points found by the local search heuristic.
    """
    M: int
    D: float
    sigma: float
    witness: tuple
    exhaustive: bool = True

    @property
    def codebook(self):
        return self.witness[0]

    @property
    def encoder(self):
        return self.witness[1]

    def witness_line(self, n):
        return format_witness(self.witness, n)


def _key(D, sigma):
    return round(D, _DECIMALS), round(sigma, _DECIMALS)


def pareto_filter(points):
    """
        Antichain of the points under componentwise <= (after rounding to PARETO_TOLERANCE). Among equal
        points the one with the lexicographically smallest witness is kept.
    :param points: Iterable of FrontierPoint
    :return: list of FrontierPoint sorted by increasing D (and thus decreasing sigma)
    """
    ordered = sorted(points, key=lambda p: (_key(p.D, p.sigma), p.witness))
    front = []
    best_sigma = math.inf
    for point in ordered:
        sigma = _key(point.D, point.sigma)[1]
        if sigma < best_sigma:
            front.append(point)
            best_sigma = sigma
    return front


def dominated_by_frontier(frontier, D, sigma, tol=PARETO_TOLERANCE):
    """
        Whether (D, sigma) is weakly dominated by (or lies on) some frontier point
    """
    return any(p.D <= D + tol and p.sigma <= sigma + tol for p in frontier)


def _codebook_candidates(probs, distances, codebook):
    """
        Pareto candidates among all encoder maps into one codebook, as (D, sigma, map index) with the
        lowest map index kept among equal points
    """
    N, m = len(probs), len(codebook)
    weighted = probs[:, None] * distances[:, list(codebook)]
    codeword_probs = probs[list(codebook)]
    powers = m**np.arange(N - 1, -1, -1, dtype=np.int64)
    rows = np.arange(N)
    total = m**N
    D_all, sigma_all = [], []
    for start in range(0, total, _MAP_CHUNK):
        index = np.arange(start, min(total, start + _MAP_CHUNK), dtype=np.int64)
        maps = (index[:, None] // powers[None, :]) % m
        D_all.append(weighted[rows[None, :], maps].sum(axis=1))
        sigma = np.zeros(len(index))
        for j in range(m):
            pushed = (maps == j) @ probs
            sigma += np.maximum(0.0, pushed - codeword_probs[j])
        sigma_all.append(sigma)
    D_all, sigma_all = np.concatenate(D_all), np.concatenate(sigma_all)
    D_key, sigma_key = np.round(D_all, _DECIMALS), np.round(sigma_all, _DECIMALS)
    order = np.lexsort((np.arange(total), sigma_key, D_key))
    running = np.minimum.accumulate(sigma_key[order])
    previous = np.concatenate(([np.inf], running[:-1]))
    keep = order[sigma_key[order] < previous]
    return [(float(D_all[i]), float(sigma_all[i]), int(i)) for i in keep]


def _map_digits(index, m, N):
    """
        Encoder map with the given index in lexicographic order (base m digits, block 0 first)
    """
    digits = []
    for _ in range(N):
        index, digit = divmod(index, m)
        digits.append(digit)
    return tuple(reversed(digits))


def _exhaustive(model, n, M, workers, verbose):
    N = 2**n
    m = min(M, N)
    codebooks = list(combinations(range(N), m))
    nof_maps = len(codebooks) * m**N
    if nof_maps > MAX_ENCODER_MAPS:
        raise ResourceLimitError('Exhaustive search over {} encoder maps exceeds the cap of {}'
                                 .format(nof_maps, MAX_ENCODER_MAPS))
    logger.info('Enumerating %d codebooks of size %d with %d encoder maps each', len(codebooks), m, m**N)
    probs, distances = block_probabilities(model, n), distance_matrix(n)
    task = partial(_codebook_candidates, probs, distances)
    with tqdm(total=len(codebooks), disable=not verbose, desc='oracle') as progress:
        results = []
        if workers > 1:
            with ProcessPoolExecutor(max_workers=workers) as executor:
                for result in executor.map(task, codebooks):
                    results.append(result)
                    progress.update(1)
        else:
            for codebook in codebooks:
                results.append(task(codebook))
                progress.update(1)
    points = []
    for codebook, candidates in zip(codebooks, results):
        for D, sigma, index in candidates:
            points.append(FrontierPoint(M=M, D=D, sigma=sigma, witness=(codebook, _map_digits(index, m, N)),
                                        exhaustive=True))
    return points


def _heuristic(model, n, M, workers, verbose, seed, restarts):
    N = 2**n
    m = min(M, N)
    probs, distances = block_probabilities(model, n), distance_matrix(n)
    task = partial(local_search, probs, distances, m, seed=seed, restarts=restarts)
    with tqdm(total=restarts, disable=not verbose, desc='oracle-heuristic') as progress:
        results = []
        if workers > 1:
            with ProcessPoolExecutor(max_workers=workers) as executor:
                for result in executor.map(task, range(restarts)):
                    results.append(result)
                    progress.update(1)
        else:
            for restart in range(restarts):
                results.append(task(restart))
                progress.update(1)
    return [FrontierPoint(M=M, D=D, sigma=sigma, witness=witness, exhaustive=False)
            for visited in results for D, sigma, witness in visited]


def enumerate_frontier(model, n, M, heuristic=False, workers=1, verbose=False, seed=102, restarts=RESTARTS):
    """
        Pareto frontier of (D, sigma) over deterministic codes with at most M reconstruction values
    :param model: SourceModel
    :param n: Block length. Exhaustive search needs n <= 3, n = 4 is only allowed with heuristic=True
    :param M: Codeword budget >= 1
    :param heuristic: Use the local search (n = 4 only); the returned points are flagged non-exhaustive
    :param workers: Number of worker processes. The result does not depend on it
    :param verbose: Show progress
    :param seed: Seed of the random restarts of the heuristic
    :param restarts: Number of restarts of the heuristic
    :return: list of FrontierPoint sorted by increasing D
    """
    if M < 1 or n < 1:
        raise ValueError('Need n >= 1 and M >= 1, got n={}, M={}'.format(n, M))
    M = int(M)
    if heuristic:
        if n != HEURISTIC_LENGTH:
            raise ResourceLimitError('The heuristic oracle is only available at n={}, got n={}'
                                     .format(HEURISTIC_LENGTH, n))
        points = _heuristic(model, n, M, workers, verbose, seed, restarts)
    else:
        if n > MAX_EXHAUSTIVE_LENGTH:
            raise ResourceLimitError('Exhaustive oracle needs n <= {}, got n={} (n={} needs the heuristic flag)'
                                     .format(MAX_EXHAUSTIVE_LENGTH, n, HEURISTIC_LENGTH))
        points = _exhaustive(model, n, M, workers, verbose)
    frontier = pareto_filter(points)
    logger.info('Frontier at n=%d, M=%d has %d points', n, M, len(frontier))
    return frontier
