"""
    Dense binary blocks of length n <= 63, stored as integer codes with the first symbol in the most
    significant bit. Integer order of the codes therefore equals lexicographic order of the blocks.
"""
import numpy as np

MAX_DENSE_LENGTH = 63


def check_length(n):
    if not 1 <= n <= MAX_DENSE_LENGTH:
        raise ValueError('Dense blocks need 1 <= n <= {}, got {}'.format(MAX_DENSE_LENGTH, n))


def all_blocks(n):
    """
        All 2^n block codes in lexicographic order
    """
    check_length(n)
    return np.arange(2**n, dtype=np.int64)


def to_bits(codes, n):
    """
        Bit matrix (one row per code, first symbol first) for scalar or array codes
    """
    codes = np.asarray(codes, dtype=np.int64)
    shifts = np.arange(n - 1, -1, -1, dtype=np.int64)
    return ((codes[..., None] >> shifts) & 1).astype(np.uint8)


def from_bits(bits):
    """
        Integer codes for a bit vector or matrix (rows are blocks)
    """
    bits = np.asarray(bits, dtype=np.int64)
    n = bits.shape[-1]
    check_length(n)
    weights = np.int64(1) << np.arange(n - 1, -1, -1, dtype=np.int64)
    return bits @ weights


def ones_count(codes, n):
    """
        Number of ones (type class index k) of each code
    """
    return to_bits(codes, n).sum(axis=-1, dtype=np.int64)


def hamming_distance(a, b, n):
    """
        Elementwise Hamming distance between codes a and b (broadcasting)
    """
    return ones_count(np.bitwise_xor(np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64)), n)


def format_block(code, n):
    """
        Block as a string of n binary digits
    """
    return format(int(code), '0{}b'.format(n))
