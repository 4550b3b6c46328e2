"""
    Factory function for the lossy stage of the two-stage code
"""
from rdp.codec.lossy.random import RandomCodebook
from rdp.codec.lossy.greedy import GreedyCoverCodebook
from rdp.codec.lossy.typequant import TypeQuantizeCodebook
from rdp.codec.lossy.base import MAX_CODEBOOK

LOSSY_METHODS = ('random', 'greedy-cover', 'type-quantize')


def get_lossy_stage(lossy_method, model, n, M, seed=102, max_codebook=MAX_CODEBOOK, verbose=False):
    """
        Factory function for lossy stage objects
    :param lossy_method: 'random' (codewords drawn iid from the dominant source component),
                         'greedy-cover' (greedy Hamming ball covering over all enumerated blocks, n <= 24,
                         M <= 2^16) or 'type-quantize' (balanced representatives of quantized ones counts)
    :param model: SourceModel
    :param n: Block length
    :param M: Per-stage codeword budget
    :param seed: Seed for the random codebook
    :param max_codebook: Cap on the number of codewords
    :param verbose: Show progress of slow constructions
    :return: RandomCodebook, GreedyCoverCodebook or TypeQuantizeCodebook object
    """
    kwargs = dict(seed=seed, max_codebook=max_codebook, verbose=verbose)
    if lossy_method == 'random':
        return RandomCodebook(model, n, M, **kwargs)
    elif lossy_method == 'greedy-cover':
        return GreedyCoverCodebook(model, n, M, **kwargs)
    elif lossy_method == 'type-quantize':
        return TypeQuantizeCodebook(model, n, M, **kwargs)
    else:
        raise ValueError('Unrecognized lossy_method {!r}, expected one of {}'.format(lossy_method, LOSSY_METHODS))
