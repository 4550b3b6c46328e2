"""
    Random codebook: codewords drawn iid from the dominant component of the source
"""
import numpy as np
from rdp.codec.lossy.base import LossyStageBase
from rdp.sources.block import from_bits
from rdp.utils.random import get_rng


class RandomCodebook(LossyStageBase):
    method = 'random'

    def _build_codebook(self, size):
        rng = get_rng(self.seed)
        p = self.model.components[self.model.dominant_component()][1]
        bits = (rng.random((size, self.n)) < p).astype(np.uint8)
        return from_bits(bits)
