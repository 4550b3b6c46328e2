"""
    Exact and Monte Carlo evaluation of two-stage codes: rate, per-symbol Hamming distortion, variational
    distance sigma between the reconstruction law and the source law, and the lossy branch probability
    epsilon.
"""
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import partial
import logging
import math
import numpy as np
from tqdm import tqdm
from rdp.sources.block import all_blocks, hamming_distance
from rdp.sources.sampling import sample_blocks
from rdp.sources.types import build_type_table, block_log_probs
from rdp.spectra.plimsup import plimsup_estimate
from rdp.utils.errors import ResourceLimitError
from rdp.utils.logmath import below_log2_int, log2_int, log2_sum
from rdp.utils.random import get_rng, chunk_sizes

logger = logging.getLogger(__name__)

# Largest block length evaluated by full enumeration of all 2^n blocks
EXACT_CAP = 20

# Monte Carlo chunk size. Chunk i always uses substream i, independent of the number of workers
CHUNK_SIZE = 4096


@dataclass(frozen=True)
class CodecMetrics:
    """
        Evaluation of a two-stage code. distortion_exact tells whether distortion and distortion_tail were
        obtained by enumeration (distortion_stderr is 0 then); sigma is None if the block length exceeds
        the exact cap; epsilon is always exact.
    """
    n: int
    M: int
    rate: float
    distortion: float
    distortion_stderr: float
    distortion_exact: bool
    distortion_tail: float
    sigma: float
    epsilon: float
    samples: int

    @property
    def sigma_exact(self):
        return self.sigma is not None

    def as_row(self):
        """
            Flat dict for CSV output
        """
        return dict(n=self.n, M=self.M, rate=self.rate, distortion=self.distortion,
                    distortion_stderr=self.distortion_stderr, distortion_exact=int(self.distortion_exact),
                    distortion_tail=self.distortion_tail,
                    sigma='' if self.sigma is None else self.sigma, sigma_exact=int(self.sigma_exact),
                    epsilon=self.epsilon, samples=self.samples)


def rate_for(M, n):
    """
        Rate log2(2M)/n in bits per symbol of a two-stage code with per-stage budget M
    """
    if M < 1 or n < 1:
        raise ValueError('Need M >= 1 and n >= 1, got M={}, n={}'.format(M, n))
    return (1 + log2_int(int(M))) / n


def m_for_rate(R, n):
    """
        Per-stage budget M = floor(2^(nR)) (at least 1). Exact integer arithmetic for large nR
    """
    if R < 0 or n < 1:
        raise ValueError('Need R >= 0 and n >= 1, got R={}, n={}'.format(R, n))
    exponent = n * R
    whole = math.floor(exponent)
    # 2^frac with 52 fractional bits, so 2^(nR) beyond the float range stays an exact integer
    mantissa = int(2**(exponent - whole) * 2**52)
    return max(1, ((1 << whole) * mantissa) >> 52)


def epsilon_exact(model, n, M):
    """
        Exact probability that a block takes the lossy branch: Pr[-log2 P(X^n) >= log2 M], summed over the
        type classes (any n)
    :param model: SourceModel
    :param n: Block length
    :param M: Per-stage budget (Python integer >= 1)
    :return: probability
    """
    if M < 1:
        raise ValueError('Codeword budget must be >= 1, got {}'.format(M))
    table = build_type_table(model, n)
    return _mass_outside(table, below_log2_int(-table.log2_atom_probs, M))


def _mass_outside(table, class_mask):
    lossy = ~class_mask
    if not lossy.any():
        return 0.0
    return float(min(1.0, np.exp2(log2_sum(table.log2_class_masses[lossy]))))


def lossy_branch_probability(codec, model):
    """
        Probability under model that a block takes the lossy branch of codec. Equals
        epsilon_exact(model, n, M) when model is the source the code was built for.
    :param codec: TwoStageCodec
    :param model: SourceModel the blocks are drawn from
    :return: probability
    """
    return _mass_outside(build_type_table(model, codec.n), codec.lossless.class_mask)


def _enumerate(codec, model, exact_cap):
    if codec.n > exact_cap:
        raise ResourceLimitError('Exact evaluation enumerates 2^n blocks and needs n <= {}, got n={}. '
                                 'Use epsilon as an upper bound on sigma instead'.format(exact_cap, codec.n))
    blocks = all_blocks(codec.n)
    probs = np.exp2(block_log_probs(model, blocks, codec.n))
    return blocks, probs, codec.reconstruct(blocks)


def _sigma(blocks, probs, recon):
    # One-sided sum identity: sigma = sum_y max(0, Q(y) - P(y))
    pushforward = np.bincount(recon, weights=probs, minlength=len(blocks))
    return float(np.maximum(0.0, pushforward - probs).sum())


def sigma_exact(codec, model, exact_cap=EXACT_CAP):
    """
        Exact variational distance between the law of the reconstruction and the source law, by full
        enumeration of the blocks
    :param codec: TwoStageCodec
    :param model: SourceModel of the source
    :param exact_cap: Largest n enumerated
    :return: sigma
    :raises ResourceLimitError: n above exact_cap
    """
    return _sigma(*_enumerate(codec, model, exact_cap))


def _weighted_quantile(values, weights, level):
    order = np.argsort(values, kind='stable')
    cdf = np.cumsum(weights[order])
    position = min(int(np.searchsorted(cdf, level * cdf[-1], side='left')), len(values) - 1)
    return float(values[order][position])


def _simulate_chunk(codec, model, seed, item):
    stream, size = item
    codes, _ = sample_blocks(model, codec.n, size, get_rng(seed, stream))
    return hamming_distance(codes, codec.reconstruct(codes), codec.n) / codec.n


def _monte_carlo(codec, model, samples, seed, workers, verbose):
    items = list(enumerate(chunk_sizes(samples, CHUNK_SIZE)))
    task = partial(_simulate_chunk, codec, model, seed)
    with tqdm(total=len(items), disable=not verbose, desc='monte-carlo') as progress:
        if workers > 1:
            with ProcessPoolExecutor(max_workers=workers) as executor:
                chunks = []
                for chunk in executor.map(task, items):
                    chunks.append(chunk)
                    progress.update(1)
        else:
            chunks = []
            for item in items:
                chunks.append(task(item))
                progress.update(1)
    return np.concatenate(chunks)


def evaluate(codec, model, samples=10000, seed=102, exact_cap=EXACT_CAP, tail=0.01, workers=1, verbose=False):
    """
        Evaluates a two-stage code against a source
    :param codec: TwoStageCodec
    :param model: SourceModel of the source (usually codec.model)
    :param samples: Number of Monte Carlo blocks, used when n > exact_cap
    :param seed: Seed for the Monte Carlo substreams
    :param exact_cap: Distortion and sigma are exact by enumeration for n <= exact_cap
    :param tail: Tail probability of the reported distortion quantile
    :param workers: Number of worker processes for Monte Carlo chunks. Results do not depend on it
    :param verbose: Show Monte Carlo progress
    :return: CodecMetrics
    """
    if not 0 < tail < 0.5:
        raise ValueError('Tail probability must lie in (0, 0.5), got {}'.format(tail))
    epsilon = lossy_branch_probability(codec, model)
    if codec.n <= exact_cap:
        blocks, probs, recon = _enumerate(codec, model, exact_cap)
        per_block = hamming_distance(blocks, recon, codec.n) / codec.n
        metrics = CodecMetrics(n=codec.n, M=codec.M, rate=codec.rate, distortion=float(probs @ per_block),
                               distortion_stderr=0.0, distortion_exact=True,
                               distortion_tail=_weighted_quantile(per_block, probs, 1 - tail),
                               sigma=_sigma(blocks, probs, recon), epsilon=epsilon, samples=0)
    else:
        if samples < 1:
            raise ValueError('Monte Carlo evaluation needs samples >= 1, got {}'.format(samples))
        per_block = _monte_carlo(codec, model, samples, seed, workers, verbose)
        stderr = float(per_block.std(ddof=1) / np.sqrt(samples)) if samples > 1 else float('nan')
        tail_value = plimsup_estimate([(codec.n, per_block)], tail) if samples >= 100 \
            else float(np.quantile(per_block, 1 - tail))
        metrics = CodecMetrics(n=codec.n, M=codec.M, rate=codec.rate, distortion=float(per_block.mean()),
                               distortion_stderr=stderr, distortion_exact=False, distortion_tail=tail_value,
                               sigma=None, epsilon=epsilon, samples=samples)
    if metrics.sigma is not None and metrics.sigma > metrics.epsilon + 1e-12:
        raise AssertionError('sigma {} exceeds epsilon {}'.format(metrics.sigma, metrics.epsilon))
    logger.info('Evaluated %r: D=%.6g, sigma=%s, epsilon=%.6g', codec, metrics.distortion, metrics.sigma,
                epsilon)
    return metrics
