"""
    Two-stage code (lossless type classes + lossy codebook) for the canonical mixed source: distortion,
    variational distance and lossy branch probability as the block length grows at a fixed rate
"""

import rdp


# Source
model = rdp.sources.SourceModel.paper()

# Rate in bits per symbol, the per-stage budget is M = floor(2^(nR)):
R = 0.9

# Block lengths (exact evaluation up to n = exact_cap, Monte Carlo beyond):
n_list = [8, 12, 16, 20, 40, 80]
exact_cap = rdp.codec.EXACT_CAP

# Lossy stage ('random', 'greedy-cover' or 'type-quantize'):
lossy_method = 'type-quantize'

# Monte Carlo properties
samples = 20000
seed = 102
workers = 2

for n in n_list:
    M = rdp.codec.m_for_rate(R, n)
    codec = rdp.codec.build_codec(model, n, M, lossy_method=lossy_method, seed=seed)
    metrics = rdp.codec.evaluate(codec, model, samples=samples, seed=seed, exact_cap=exact_cap, workers=workers)
    print('n={}: rate {:.4f}, D={:.4f} +- {:.4f}, sigma={}, epsilon={:.4f}'
          .format(n, metrics.rate, metrics.distortion, metrics.distortion_stderr, metrics.sigma, metrics.epsilon))

# The exact frontier for tiny block lengths shows what any code with 2M reconstruction values can reach:
# frontier = rdp.oracle.enumerate_frontier(model, 3, 4)
