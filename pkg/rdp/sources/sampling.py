"""
    Sampling of blocks from mixture sources. All functions take an explicit numpy Generator, so callers
    own the random state (and the parallelism).
"""
import numpy as np
from rdp.sources.block import from_bits, check_length


def sample_block(model, n, rng):
    """
        Draws one block: first the latent component by weight, then n iid bits with P(1) = p_j.
    :param model: SourceModel
    :param n: Block length >= 1 (any size, the block is returned as a bit vector)
    :param rng: numpy Generator
    :return: bit vector (numpy uint8 array of length n), component index (for diagnostics only)
    """
    if n < 1:
        raise ValueError('Block length must be >= 1, got {}'.format(n))
    component = int(rng.choice(len(model.components), p=model.weights))
    p = model.components[component][1]
    bits = (rng.random(n) < p).astype(np.uint8)
    return bits, component


def sample_blocks(model, n, size, rng):
    """
        Vectorized sampler for dense blocks (n <= 63)
    :return: integer block codes (int64 array of length size), latent component indices
    """
    check_length(n)
    components = rng.choice(len(model.components), size=size, p=model.weights)
    p = model.probabilities[components]
    bits = (rng.random((size, n)) < p[:, None]).astype(np.uint8)
    return from_bits(bits), components


def sample_ones_counts(model, n, size, rng):
    """
        Draws ones counts k of blocks of any length n (type only sampling, no dense representation)
    :return: ones counts (int64 array of length size), latent component indices
    """
    if n < 1:
        raise ValueError('Block length must be >= 1, got {}'.format(n))
    components = rng.choice(len(model.components), size=size, p=model.weights)
    counts = rng.binomial(n, model.probabilities[components])
    return counts.astype(np.int64), components
