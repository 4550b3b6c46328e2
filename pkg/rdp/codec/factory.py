"""
    Factory function for two-stage codes
"""
from rdp.codec.twostage import TwoStageCodec
from rdp.codec.lossy.base import MAX_CODEBOOK


def build_codec(model, n, M, lossy_method='random', seed=102, max_codebook=MAX_CODEBOOK, verbose=False):
    """
        Builds a two-stage code: enumerative lossless stage on T_n = {x : -log2 P(x) < log2 M} plus a lossy
        codebook of at most M codewords
    :param model: SourceModel
    :param n: Block length (1 <= n <= 63)
    :param M: Per-stage codeword budget (Python integer >= 1), the index space has 2M entries
    :param lossy_method: 'random', 'greedy-cover' or 'type-quantize'
    :param seed: Seed for the random codebook
    :param max_codebook: Cap on the number of lossy codewords
    :param verbose: Show progress of slow codebook constructions
    :return: TwoStageCodec
    """
    return TwoStageCodec.from_method(model, n, M, lossy_method=lossy_method, seed=seed,
                                     max_codebook=max_codebook, verbose=verbose)
