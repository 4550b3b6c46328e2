"""
    Two-stage fixed-length code. Blocks of the high-probability set T_n get one of the lossless indices
    1..M, all other blocks get the index M + 1 + j of their nearest lossy codeword j. The total index space
    is therefore 2M and the rate log2(2M)/n.
"""
import logging
import numpy as np
from rdp.codec.lossless import LosslessStage
from rdp.codec.lossy import get_lossy_stage, ExplicitCodebook, MAX_CODEBOOK
from rdp.sources.block import check_length
from rdp.sources.types import build_type_table
from rdp.utils.logmath import log2_int

logger = logging.getLogger(__name__)


class DecodeError(ValueError):
    """
        Raised for indices outside 1..2M or indices that are not assigned to any block
    """
    pass


class TwoStageCodec:
    tie_rule = 'lowest-index'

    def __init__(self, model, n, M, lossy_stage):
        """
            Constructor for the TwoStageCodec class. Use the factory classmethods from_method and
            from_codebook (or rdp.codec.build_codec) instead of calling it directly.
        :param model: SourceModel the code is designed for
        :param n: Block length (dense, n <= 63)
        :param M: Per-stage codeword budget (Python integer >= 1)
        :param lossy_stage: Lossy stage object (child of LossyStageBase) with the same n and M
        """
        check_length(n)
        if M < 1:
            raise ValueError('Codeword budget must be >= 1, got {}'.format(M))
        if lossy_stage.n != n or lossy_stage.M != M:
            raise ValueError('Lossy stage was built for n={}, M={}, not n={}, M={}'
                             .format(lossy_stage.n, lossy_stage.M, n, M))
        self.model = model
        self.n = n
        self.M = int(M)
        self.lossless = LosslessStage(build_type_table(model, n), self.M)
        self.lossy = lossy_stage
        logger.debug('Two-stage code n=%d, M=%s: %d lossless classes, %d lossy codewords', n, self.M,
                     len(self.lossless.classes), len(self.lossy))

    @classmethod
    def from_method(cls, model, n, M, lossy_method='random', seed=102, max_codebook=MAX_CODEBOOK,
                    verbose=False):
        """
            Builds the code with one of the lossy codebook constructions
            ('random', 'greedy-cover', 'type-quantize'), see rdp.codec.lossy.get_lossy_stage
        """
        lossy_stage = get_lossy_stage(lossy_method, model, n, M, seed=seed, max_codebook=max_codebook,
                                      verbose=verbose)
        return cls(model, n, M, lossy_stage)

    @classmethod
    def from_codebook(cls, model, n, M, codebook):
        """
            Builds the code with an explicit lossy codebook (at most M block codes)
        """
        return cls(model, n, M, ExplicitCodebook(model, n, M, codebook, max_codebook=max(int(M), 1)))

    @property
    def rate(self):
        return (1 + log2_int(self.M)) / self.n

    @property
    def lossless_classes(self):
        return self.lossless.classes

    @property
    def lossless_set_size(self):
        return self.lossless.size

    @property
    def lossy_codebook(self):
        return self.lossy.codebook

    @property
    def lossy_method(self):
        return self.lossy.method

    def _check_codes(self, codes):
        codes = np.asarray(codes, dtype=np.int64)
        if np.any(codes < 0) or np.any(codes >= 2**self.n):
            raise ValueError('Blocks must be integer codes in [0, 2^{})'.format(self.n))
        return codes

    def is_lossless(self, codes):
        """
            Whether the blocks take the lossless branch (x in T_n)
        """
        return self.lossless.contains(self._check_codes(codes))

    def branch(self, code):
        return 'lossless' if self.is_lossless(code) else 'lossy'

    def encode(self, code):
        """
            Index in 1..2M for a single block: 1 + lossless index on the lossless branch, M + 1 + index of
            the nearest codeword otherwise
        :param code: Integer block code
        :return: Python integer index
        """
        code = int(self._check_codes(code))
        if self.lossless.contains(code):
            return 1 + self.lossless.index(code)
        return self.M + 1 + int(self.lossy.nearest(code))

    def encode_many(self, codes):
        """
            Vectorized encode. Returns a list of Python integers, since indices may exceed int64 for
            large M.
        """
        codes = self._check_codes(codes).reshape(-1)
        mask = self.lossless.contains(codes)
        nearest = self.lossy.nearest(codes)
        return [1 + self.lossless.index(c) if m else self.M + 1 + int(j)
                for c, m, j in zip(codes.tolist(), mask.tolist(), nearest.tolist())]

    def decode(self, index):
        """
            Inverse ranking for lossless indices, codebook lookup for lossy ones
        :param index: Integer in 1..2M
        :return: Integer block code
        :raises DecodeError: index out of range or unassigned
        """
        index = int(index)
        if not 1 <= index <= 2 * self.M:
            raise DecodeError('Index {} outside 1..{}'.format(index, 2 * self.M))
        if index <= self.M:
            if index > self.lossless.size:
                raise DecodeError('Lossless index {} is unassigned (|T_n| = {})'.format(index, self.lossless.size))
            return self.lossless.block(index - 1)
        j = index - self.M - 1
        if j >= len(self.lossy):
            raise DecodeError('Lossy index {} is unassigned ({} codewords)'.format(index, len(self.lossy)))
        return self.lossy.lookup(j)

    def reconstruct(self, codes):
        """
            g(f(x)) for an array of blocks, without materializing the indices
        """
        codes = self._check_codes(codes)
        return np.where(self.lossless.contains(codes), codes, self.lossy.reconstruct(codes))

    def __repr__(self):
        return 'TwoStageCodec(n={}, M={}, lossy_method={!r}, lossless_classes={}, codewords={})' \
            .format(self.n, self.M, self.lossy_method, list(self.lossless_classes), len(self.lossy))
