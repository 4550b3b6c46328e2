"""
    Greedy Hamming ball covering codebook. Codewords are chosen one at a time, each maximizing the
    probability mass newly covered by its Hamming ball. The radius starts at the smallest value for which a
    ball holds half of all blocks and shrinks by one whenever every block is covered. The codeword
    sequence does not depend on M, so codebooks for increasing M are nested.
"""
import math
import numpy as np
from tqdm import tqdm
from rdp.codec.lossy.base import LossyStageBase
from rdp.sources.block import all_blocks, ones_count
from rdp.sources.types import block_log_probs
from rdp.utils.errors import ResourceLimitError

MAX_LENGTH = 24
MAX_CODEWORDS = 2**16


def fwht(values):
    """
        Unnormalized fast Walsh-Hadamard transform of a vector of length 2^n (applying it twice
        multiplies by 2^n)
    """
    a = np.array(values, dtype=float)
    size = a.size
    h = 1
    while h < size:
        a = a.reshape(-1, 2, h)
        a = np.concatenate((a[:, :1] + a[:, 1:], a[:, :1] - a[:, 1:]), axis=1)
        h *= 2
    return a.reshape(size)


def ball_sums(weights, radius, n):
    """
        For every center y: sum of weights[x] over all x with Hamming distance d(x, y) <= radius
        (XOR convolution with the ball indicator)
    """
    indicator = (ones_count(all_blocks(n), n) <= radius).astype(float)
    return fwht(fwht(weights) * fwht(indicator)) / 2**n


def initial_radius(n):
    """
        Smallest radius whose Hamming ball holds at least half of all blocks
    """
    volume = 0
    for radius in range(n + 1):
        volume += math.comb(n, radius)
        if 2 * volume >= 2**n:
            return radius
    return n


class GreedyCoverCodebook(LossyStageBase):
    method = 'greedy-cover'

    def _build_codebook(self, size):
        n = self.n
        if n > MAX_LENGTH or self.M > MAX_CODEWORDS:
            raise ResourceLimitError('greedy-cover enumerates all blocks and needs n <= {} and M <= {}, '
                                     'got n={}, M={}'.format(MAX_LENGTH, MAX_CODEWORDS, n, self.M))
        blocks = all_blocks(n)
        probs = np.exp2(block_log_probs(self.model, blocks, n))
        size = min(size, 2**n)
        radius = initial_radius(n)
        masks = blocks[ones_count(blocks, n) <= radius]
        covered = np.zeros(2**n, dtype=bool)
        gain = ball_sums(probs, radius, n)
        codebook = []
        progress = tqdm(total=size, disable=not self.verbose, desc='greedy-cover')
        while len(codebook) < size:
            if covered.all():
                radius -= 1
                masks = blocks[ones_count(blocks, n) <= radius]
                covered = self._distance_to(codebook, blocks) <= radius
                gain = ball_sums(np.where(covered, 0.0, probs), radius, n)
                continue
            candidates = gain.copy()
            candidates[codebook] = -np.inf
            center = int(np.argmax(candidates))
            codebook.append(center)
            progress.update(1)
            ball = np.bitwise_xor(center, masks)
            new = ball[~covered[ball]]
            covered[new] = True
            if len(new) * len(masks) <= n * 2**n:
                np.subtract.at(gain, np.bitwise_xor(new[:, None], masks[None, :]).ravel(),
                               np.repeat(probs[new], len(masks)))
            else:
                gain = ball_sums(np.where(covered, 0.0, probs), radius, n)
        progress.close()
        return codebook

    def _distance_to(self, codebook, blocks):
        """
            Distance of every block to the nearest codeword chosen so far
        """
        distance = np.full(len(blocks), self.n + 1, dtype=np.int64)
        for codeword in codebook:
            distance = np.minimum(distance, ones_count(np.bitwise_xor(blocks, codeword), self.n))
        return distance
