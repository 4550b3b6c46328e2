"""
    Type quantizing codebook: one balanced representative block per quantized ones count
"""
import numpy as np
from rdp.codec.lossy.base import LossyStageBase
from rdp.sources.block import from_bits
from rdp.sources.types import build_type_table


def balanced_block(k, n):
    """
        Block with k ones spread as evenly as possible over the n positions
    """
    bits = np.zeros(n, dtype=np.uint8)
    if k > 0:
        bits[np.floor((np.arange(k) + 0.5) * n / k).astype(int)] = 1
    return int(from_bits(bits))


class TypeQuantizeCodebook(LossyStageBase):
    method = 'type-quantize'

    def _build_codebook(self, size):
        """
            The ones counts are the quantiles of the ones count distribution at levels (i + 1/2)/q for
            q = min(size, n + 1) (duplicates removed), each represented by its balanced block
        """
        q = min(size, self.n + 1)
        cdf = np.cumsum(build_type_table(self.model, self.n).class_masses)
        levels = (np.arange(q) + 0.5) / q
        ones_counts = np.unique(np.minimum(np.searchsorted(cdf, levels, side='left'), self.n))
        return [balanced_block(int(k), self.n) for k in ones_counts]
