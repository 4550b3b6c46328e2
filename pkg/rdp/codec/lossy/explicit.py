"""
    Lossy stage with a codebook passed in by the caller
"""
import numpy as np
from rdp.codec.lossy.base import LossyStageBase


class ExplicitCodebook(LossyStageBase):
    method = 'explicit'

    def __init__(self, model, n, M, codebook, **kwargs):
        self._given = np.asarray(codebook, dtype=np.int64).reshape(-1)
        if len(self._given) == 0:
            raise ValueError('An explicit codebook needs at least one codeword')
        if np.any(self._given < 0) or np.any(self._given >= 2**n):
            raise ValueError('Codewords must be blocks of length {}'.format(n))
        super().__init__(model, n, M, **kwargs)

    def _build_codebook(self, size):
        if len(self._given) > size:
            raise ValueError('Codebook with {} codewords exceeds the budget {}'.format(len(self._given), size))
        return self._given
