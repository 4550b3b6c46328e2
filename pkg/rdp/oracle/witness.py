"""
    Deterministic codes given by a witness (codebook, encoder map): the codebook is a tuple of block codes,
    the encoder map assigns every block x = 0..2^n-1 the position of its reconstruction in the codebook.
"""
import numpy as np
from rdp.sources.block import all_blocks, format_block, hamming_distance
from rdp.sources.types import block_log_probs

# Digits of the encoder map strings (codebooks have at most 2^4 = 16 entries in the oracle)
MAP_DIGITS = '0123456789abcdefghijklmnopqrstuvwxyz'


def block_probabilities(model, n):
    return np.exp2(block_log_probs(model, all_blocks(n), n))


def distance_matrix(n):
    """
        Per-symbol Hamming distance between all pairs of blocks
    """
    blocks = all_blocks(n)
    return hamming_distance(blocks[:, None], blocks[None, :], n) / n


def witness_metrics(probs, distances, codebook, encoder):
    """
        (D, sigma) of a code from the block probabilities and the distance matrix
    """
    codebook = np.asarray(codebook, dtype=np.int64)
    recon = codebook[np.asarray(encoder, dtype=np.int64)]
    D = float(probs @ distances[np.arange(len(probs)), recon])
    pushforward = np.bincount(recon, weights=probs, minlength=len(probs))
    return D, float(np.maximum(0.0, pushforward - probs).sum())


def evaluate_witness(model, n, witness):
    """
        Exact expected per-symbol distortion and variational distance of a witness code
    :param model: SourceModel
    :param n: Block length
    :param witness: (codebook, encoder map) pair
    :return: D, sigma
    """
    codebook, encoder = witness
    if len(encoder) != 2**n:
        raise ValueError('Encoder map needs 2^n = {} entries, got {}'.format(2**n, len(encoder)))
    if len(codebook) == 0 or min(encoder) < 0 or max(encoder) >= len(codebook):
        raise ValueError('Encoder map refers to positions outside the codebook')
    return witness_metrics(block_probabilities(model, n), distance_matrix(n), codebook, encoder)


def canonical_witness(codebook, encoder):
    """
        Witness with the codebook sorted and the encoder map relabeled accordingly
    """
    codebook = np.asarray(codebook, dtype=np.int64)
    order = np.argsort(codebook, kind='stable')
    position = np.empty(len(order), dtype=np.int64)
    position[order] = np.arange(len(order))
    return tuple(int(c) for c in codebook[order]), tuple(int(j) for j in position[np.asarray(encoder)])


def format_witness(witness, n):
    """
        One line: codebook blocks in binary, then the encoder map as a digit string
    """
    codebook, encoder = witness
    return '{} | {}'.format(' '.join(format_block(c, n) for c in codebook),
                            ''.join(MAP_DIGITS[j] for j in encoder))
