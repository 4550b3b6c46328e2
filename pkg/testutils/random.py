"""
    Convenience functions to generate random source models and two-stage code configurations for the
    property tests. Everything is seeded, so a failing configuration can be reproduced from its index.
"""
import numpy as np
from rdp.sources.model import SourceModel
from rdp.codec.lossy import LOSSY_METHODS


def generate_random_model(rng, max_components=3, single=False):
    """
        Random mixture of Bernoulli components with probabilities away from 0 and 1
    :param rng: numpy Generator
    :param max_components: Maximum number of mixture components
    :param single: Return a single Bernoulli source
    :return: SourceModel
    """
    nof_components = 1 if single else int(rng.integers(1, max_components + 1))
    weights = rng.dirichlet(np.ones(nof_components))
    weights[-1] = 1 - weights[:-1].sum()
    probabilities = rng.uniform(0.05, 0.95, size=nof_components)
    return SourceModel(tuple(zip(weights.tolist(), probabilities.tolist())))


def generate_random_codec_configs(nof_configs, seed=102, max_n=16, methods=LOSSY_METHODS):
    """
        Random (model, n, M, lossy_method, seed) tuples with n <= max_n and M <= 2^n
    :param nof_configs: Number of configurations
    :param seed: Seed of the generator
    :param max_n: Largest block length
    :param methods: Lossy methods to draw from
    :return: list of configuration tuples
    """
    rng = np.random.default_rng(seed)
    configs = []
    for index in range(nof_configs):
        model = generate_random_model(rng, single=bool(index % 2))
        n = int(rng.integers(1, max_n + 1))
        M = int(rng.integers(1, min(2**n, 2**10) + 1))
        method = methods[int(rng.integers(len(methods)))]
        configs.append((model, n, M, method, index))
    return configs
