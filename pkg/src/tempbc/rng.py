"""Counter-based random substreams.

Every sample index gets its own Philox stream keyed by (seed, index), so a
sample's draws do not depend on execution order. Serial and parallel runs of
the same seeded experiment therefore produce identical output.
"""

from __future__ import annotations

import numpy as np

__all__ = ["substream", "draw_source", "draw_pair", "randbelow"]

_MASK64 = (1 << 64) - 1


def substream(seed: int, index: int) -> np.random.Generator:
    key = np.array([seed & _MASK64, index & _MASK64], dtype=np.uint64)
    return np.random.Generator(np.random.Philox(key=key))


def draw_source(rng: np.random.Generator, n: int) -> int:
    return int(rng.integers(n))


def draw_pair(rng: np.random.Generator, n: int) -> tuple[int, int]:
    """Uniform ordered pair (s, z) with s != z."""
    s = int(rng.integers(n))
    z = int(rng.integers(n - 1))
    if z >= s:
        z += 1
    return s, z


def randbelow(rng: np.random.Generator, bound: int) -> int:
    """Uniform integer in [0, bound) for arbitrary-precision bounds."""
    if bound <= 0:
        raise ValueError("bound must be positive")
    if bound <= 1 << 62:
        return int(rng.integers(bound))
    bits = bound.bit_length()
    words = (bits + 31) // 32
    excess = words * 32 - bits
    while True:
        value = 0
        for _ in range(words):
            value = (value << 32) | int(rng.integers(1 << 32))
        value >>= excess
        if value < bound:
            return value
