"""Deterministic random streams.

All randomness in the package flows through Philox, a counter-based
generator with a 64-bit key. Stream splitting is by jump index, so
trial i of an experiment owns stream i of the master seed and results
are reproducible whether trials run serially or in parallel.
"""

import numpy as np


def rng_stream(seed: int, stream: int = 0) -> np.random.Generator:
    """Return the generator for (seed, stream); streams never overlap."""
    bits = np.random.Philox(key=np.uint64(seed & 0xFFFFFFFFFFFFFFFF))
    if stream:
        bits = bits.jumped(stream)
    return np.random.Generator(bits)


def random_below(rng: np.random.Generator, bound: int) -> int:
    """Uniform integer in [0, bound) for arbitrary-precision bounds.

    numpy generators cap out at 64 bits; this rejection-samples from raw
    bytes so exact big-integer distributions stay exact.
    """
    if bound <= 0:
        raise ValueError("bound must be positive")
    nbits = bound.bit_length()
    nbytes = (nbits + 7) // 8
    mask = (1 << nbits) - 1
    while True:
        value = int.from_bytes(rng.bytes(nbytes), "little") & mask
        if value < bound:
            return value
