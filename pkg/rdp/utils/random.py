"""
    Seeded random number generators. Substreams are derived from (seed, stream index) so that results
    which are merged over substreams do not depend on how the streams are distributed over workers.
"""
import numpy as np


def get_rng(seed=102, stream=None):
    """
        Returns a numpy Generator for the specified 64 bit seed and optional substream index
    :param seed: Non-negative integer seed
    :param stream: Optional substream index (integer >= 0). Different indices yield independent streams
    :return: numpy.random.Generator
    """
    if seed < 0:
        raise ValueError('Seed must be non-negative, got {}'.format(seed))
    if stream is None:
        return np.random.default_rng(np.random.SeedSequence(seed))
    return np.random.default_rng(np.random.SeedSequence(seed, spawn_key=(stream, )))


def chunk_sizes(total, chunk):
    """
        Splits total into consecutive chunks of size chunk (the last one may be smaller).
        The split only depends on total and chunk, never on the number of workers.
    """
    if total < 0 or chunk < 1:
        raise ValueError('Invalid chunking of {} into chunks of {}'.format(total, chunk))
    sizes = [chunk] * (total // chunk)
    if total % chunk:
        sizes.append(total % chunk)
    return sizes
