"""Small-universe subsets as int bitmasks (element i <-> bit i, i < 64)."""

from itertools import combinations


def mask_of(elements):
    m = 0
    for e in elements:
        m |= 1 << e
    return m


def bits(mask):
    """Yield set bit positions in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def subset_tuple(mask):
    return tuple(bits(mask))


def popcount(mask):
    return mask.bit_count()


def k_subset_masks(n, k):
    """All k-subsets of {0..n-1} as masks, in lex order of the sorted tuples."""
    for combo in combinations(range(n), k):
        yield mask_of(combo)
