"""Enumerate small dominant weights for the GT tests."""

from itertools import product

from stiefeldeg.weights import is_dominant, rank


def dominant_weights(n, size):
    """All dominant weights of SO(n) with sum of absolute parts <= size."""
    r = rank(n)
    out = []
    for lam in product(range(-size, size + 1), repeat=r):
        if sum(abs(x) for x in lam) <= size and is_dominant(n, lam):
            out.append(lam)
    return out
