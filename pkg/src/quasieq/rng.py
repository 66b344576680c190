"""Reproducible uniform random stream: splitmix64 seeding + xoshiro256**.

The 64-bit seed is expanded into the four xoshiro256** state words with
splitmix64.  Uniform doubles in [0, 1) take the top 53 bits of each
output word, so the stream is bit-identical for equal seeds on any
platform.
"""

from __future__ import annotations

import numpy as np

_MASK64 = (1 << 64) - 1


def splitmix64_next(state: int) -> tuple[int, int]:
    """One splitmix64 step; returns (new_state, output)."""
    state = (state + 0x9E3779B97F4A7C15) & _MASK64
    z = state
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return state, z ^ (z >> 31)


def _rotl(x: int, k: int) -> int:
    return ((x << k) | (x >> (64 - k))) & _MASK64


class UniformStream:
    """xoshiro256** generator yielding uniforms in [0, 1)."""

    def __init__(self, seed: int):
        state = int(seed) & _MASK64
        s = []
        for _ in range(4):
            state, word = splitmix64_next(state)
            s.append(word)
        self._s = s

    def next_uint64(self) -> int:
        s = self._s
        result = (_rotl((s[1] * 5) & _MASK64, 7) * 9) & _MASK64
        t = (s[1] << 17) & _MASK64
        s[2] ^= s[0]
        s[3] ^= s[1]
        s[1] ^= s[2]
        s[0] ^= s[3]
        s[2] ^= t
        s[3] = _rotl(s[3], 45)
        return result

    def uniform(self) -> float:
        return (self.next_uint64() >> 11) * 2.0**-53

    def uniforms(self, count: int) -> np.ndarray:
        return np.array([self.uniform() for _ in range(count)])


def rng_stream(seed: int) -> UniformStream:
    """Deterministic uniform stream for the given 64-bit seed."""
    return UniformStream(seed)
