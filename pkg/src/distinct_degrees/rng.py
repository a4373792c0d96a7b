"""Reproducible random streams.

Every randomized routine takes a master seed and draws trial ``t`` from a
Philox generator keyed by ``(t << 64) | seed``.  The stream of a trial depends
only on the pair, so trials can be evaluated in any order or split across
workers without changing what is drawn.
"""

import numpy as np

_MASK64 = (1 << 64) - 1


def trial_rng(seed: int, trial: int = 0) -> np.random.Generator:
    if seed < 0 or seed > _MASK64:
        raise ValueError(f"seed must lie in [0, 2**64), got {seed}")
    if trial < 0 or trial > _MASK64:
        raise ValueError(f"trial index must lie in [0, 2**64), got {trial}")
    return np.random.Generator(np.random.Philox(key=(trial << 64) | seed))


def bits_to_mask(bits: np.ndarray) -> int:
    """Pack a 0/1 vector (index = vertex) into an integer bitmask."""
    if bits.size == 0:
        return 0
    packed = np.packbits(bits.astype(np.uint8), bitorder="little")
    return int.from_bytes(packed.tobytes(), "little")


def half_subset(rng: np.random.Generator, n: int) -> int:
    """One fair coin per vertex; returns the mask of the selected vertices."""
    return bits_to_mask(rng.integers(0, 2, size=n, dtype=np.uint8))
