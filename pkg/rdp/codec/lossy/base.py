"""
    Base class for the lossy stage of the two-stage code: an explicit codebook of blocks with nearest
    codeword (Hamming distance) encoding
"""
import logging
import numpy as np
from rdp.sources.block import to_bits, check_length

logger = logging.getLogger(__name__)

# Default cap on the number of codewords of a lossy codebook
MAX_CODEBOOK = 2**16

# Maximum number of entries of one block of the distance matrix
_DISTANCE_BLOCK = 2**22


class LossyStageBase:
    method = None

    def __init__(self, model, n, M, seed=102, max_codebook=MAX_CODEBOOK, verbose=False):
        """
            Constructor for the LossyStageBase class. Builds the codebook via _build_codebook, which is
            overridden by the child classes.
        :param model: SourceModel the codebook is designed for
        :param n: Block length (dense, n <= 63)
        :param M: Per-stage codeword budget. The codebook has at most min(M, max_codebook) codewords
        :param seed: Seed for randomized constructions
        :param max_codebook: Cap on the codebook size
        :param verbose: Show progress of slow constructions
        """
        check_length(n)
        if M < 1:
            raise ValueError('Codeword budget must be >= 1, got {}'.format(M))
        self.model = model
        self.n = n
        self.M = int(M)
        self.seed = seed
        self.verbose = verbose
        size = min(self.M, max_codebook)
        if size < self.M:
            logger.warning('Lossy codebook truncated from %s to %d codewords', self.M, size)
        codebook = np.asarray(self._build_codebook(size), dtype=np.int64).reshape(-1)
        if not 1 <= len(codebook) <= self.M:
            raise AssertionError('Lossy codebook has {} codewords for budget {}'.format(len(codebook), self.M))
        codebook.setflags(write=False)
        self.codebook = codebook
        self._codebook_bits = to_bits(codebook, n).astype(float)
        self._codebook_ones = self._codebook_bits.sum(axis=1)
        logger.debug('Built %s codebook with %d codewords at n=%d', self.method, len(codebook), n)

    def __len__(self):
        return len(self.codebook)

    def _build_codebook(self, size):
        """
            Overridden by the child classes
        :param size: Maximum number of codewords
        :return: array-like of block codes
        """
        return []

    def distances(self, codes):
        """
            Hamming distance matrix between the blocks (rows) and all codewords (columns)
        """
        bits = to_bits(codes, self.n).astype(float).reshape(-1, self.n)
        cross = bits @ self._codebook_bits.T
        return np.rint(bits.sum(axis=1)[:, None] + self._codebook_ones[None, :] - 2 * cross).astype(np.int64)

    def nearest(self, codes):
        """
            Zero based index of the nearest codeword of each block; ties go to the lowest index
        """
        codes = np.asarray(codes, dtype=np.int64)
        flat = codes.reshape(-1)
        step = max(1, _DISTANCE_BLOCK // len(self.codebook))
        result = np.empty(len(flat), dtype=np.int64)
        for start in range(0, len(flat), step):
            result[start:start + step] = np.argmin(self.distances(flat[start:start + step]), axis=1)
        return result.reshape(codes.shape)

    def reconstruct(self, codes):
        return self.codebook[self.nearest(codes)]

    def lookup(self, index):
        """
            Codeword with the zero based index
        """
        return int(self.codebook[index])
