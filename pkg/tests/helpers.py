"""Small matrix builders shared by the test modules."""

import random

from heptacyc.core import FAMILIES, from_bands
from heptacyc.generate import random_bands

# criterion label -> (passed, detail); filled by test_acceptance.py
ACCEPTANCE = {}


def identity_bands(n, scale=1):
    zero = [0] * n
    return from_bands(n, [scale] * n, zero, zero, zero, zero, zero, zero)


def diagonal(n, values):
    zero = [0] * n
    return from_bands(n, list(values), zero, zero, zero, zero, zero, zero)


def random_hepta(n, seed, low=-9, high=9):
    bands = random_bands(n, random.Random(seed), low=low, high=high)
    return from_bands(n, *(bands[f] for f in FAMILIES))
