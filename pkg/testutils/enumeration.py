"""
    Brute force references over all 2^n blocks, written without the type class machinery of the package.
    Only usable for small n.
"""
import itertools
import math
import numpy as np


def all_bit_tuples(n):
    """
        All blocks as tuples of bits, in lexicographic order (matching the integer codes 0..2^n-1)
    """
    return list(itertools.product((0, 1), repeat=n))


def block_probability(model, bits):
    """
        Mixture probability of a single block, multiplied out symbol by symbol
    """
    total = 0.0
    for w, p in model.components:
        prob = w
        for bit in bits:
            prob *= p if bit else 1 - p
        total += prob
    return total


def block_probabilities(model, n):
    return np.array([block_probability(model, bits) for bits in all_bit_tuples(n)])


def spectral_cdf(model, n, R):
    """
        Pr[-log2 P(X^n) / n >= R] by summing over all blocks
    """
    probs = block_probabilities(model, n)
    positive = probs > 0
    info = -np.log2(probs[positive]) / n
    return float(probs[positive][info >= R - 1e-12].sum())


def top_mass(model, n, M):
    """
        Mass of the M most probable blocks
    """
    probs = np.sort(block_probabilities(model, n))[::-1]
    return float(probs[:M].sum())


def hamming(a, b):
    return bin(int(a) ^ int(b)).count('1')


def distortion(probs, recon, n):
    """
        Expected per-symbol Hamming distortion of the map x -> recon[x]
    """
    return sum(p * hamming(x, y) for x, (p, y) in enumerate(zip(probs, recon))) / n


def variational_distance(p, q):
    """
        Half the L1 distance between two distributions on the same blocks
    """
    return 0.5 * float(np.abs(np.asarray(p) - np.asarray(q)).sum())


def pushforward(probs, recon):
    q = np.zeros(len(probs))
    for x, y in enumerate(recon):
        q[y] += probs[x]
    return q


def nearest_reconstruction(codebook, n):
    """
        Nearest codeword (lowest index on ties) of every block
    """
    recon = []
    for x in range(2**n):
        distances = [hamming(x, c) for c in codebook]
        recon.append(codebook[distances.index(min(distances))])
    return recon


def binary_entropy(u):
    if u in (0, 1):
        return 0.0
    return -u * math.log2(u) - (1 - u) * math.log2(1 - u)
