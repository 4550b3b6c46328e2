"""
    Lossless stage of the two-stage code: enumerative indexing of the high-probability set
    T_n = {x^n : -log2 P(x^n) < log2 M}. Since probabilities only depend on the ones count, T_n is a union
    of whole type classes; blocks are indexed by (class, lexicographic rank within the class).
"""
from bisect import bisect_right
import math
import numpy as np
from rdp.sources.block import to_bits, check_length
from rdp.utils.logmath import below_log2_int


def _binomial_table(n):
    """
        table[m, j] = C(m, j) for 0 <= m, j <= n as int64 (C(63, 31) < 2^63)
    """
    table = np.zeros((n + 1, n + 2), dtype=np.int64)
    for m in range(n + 1):
        for j in range(m + 1):
            table[m, j] = math.comb(m, j)
    return table


class LosslessStage:

    def __init__(self, table, M):
        """
            Constructor for the LosslessStage class. Selects the type classes whose atoms have
            self-information strictly below log2 M (ties go to the lossy stage) and computes the
            cumulative ranking offsets in order of increasing ones count.
        :param table: TypeClassTable of the source at the block length of the code
        :param M: Per-stage codeword budget (Python integer >= 1)
        """
        self.n = table.n
        check_length(self.n)
        self.M = int(M)
        lossless = below_log2_int(-table.log2_atom_probs, self.M)
        self.classes = tuple(int(k) for k in np.flatnonzero(lossless))
        self._binomials = _binomial_table(self.n)
        self.offsets = {}
        size = 0
        for k in self.classes:
            self.offsets[k] = size
            size += math.comb(self.n, k)
        self.size = size
        # Every atom of T_n has probability > 1/M, so |T_n| < M
        if not self.size < self.M:
            raise AssertionError('High-probability set of size {} does not fit into {} indices'
                                 .format(self.size, self.M))
        self._class_mask = lossless
        self._start_list = [self.offsets[k] for k in self.classes]

    @property
    def class_mask(self):
        """
            Boolean array over k = 0..n: which type classes are coded losslessly
        """
        return self._class_mask.copy()

    def contains(self, codes):
        """
            Boolean mask: which blocks belong to T_n
        """
        return self._class_mask[to_bits(codes, self.n).sum(axis=-1)]

    def rank(self, codes):
        """
            Lexicographic rank of each block within its type class (vectorized, int64)
        """
        bits = to_bits(codes, self.n).astype(np.int64)
        k = bits.sum(axis=-1, keepdims=True)
        # Ones remaining at each position, including the current one
        remaining = k - np.cumsum(bits, axis=-1) + bits
        positions = np.arange(self.n - 1, -1, -1)
        return (bits * self._binomials[positions, remaining]).sum(axis=-1)

    def unrank(self, k, rank):
        """
            Block with k ones and the given lexicographic rank within its class
        """
        code = 0
        remaining = k
        for i in range(self.n):
            position = self.n - 1 - i
            below = math.comb(position, remaining)
            if remaining > 0 and rank >= below:
                code |= 1 << position
                rank -= below
                remaining -= 1
        return code

    def index(self, code):
        """
            Zero based lossless index of a block in T_n
        """
        k = bin(int(code)).count('1')
        if not self._class_mask[k]:
            raise ValueError('Block {} is not in the high-probability set'.format(code))
        return self.offsets[k] + int(self.rank(code))

    def block(self, index):
        """
            Inverse of index
        """
        if not 0 <= index < self.size:
            raise ValueError('Lossless index {} outside [0, {})'.format(index, self.size))
        k = self.classes[bisect_right(self._start_list, index) - 1]
        return self.unrank(k, index - self.offsets[k])
