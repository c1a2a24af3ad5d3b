"""Portable 64-bit generator for instance weights.

xoshiro256** (Blackman & Vigna) seeded by four successive SplitMix64 outputs.
Uniform integers in ``[lo, hi]`` use rejection on the top of the 64-bit range,
so the stream is unbiased and easy to reproduce in any language:

    span  = hi - lo + 1
    limit = 2**64 - (2**64 % span)
    draw x until x < limit; return lo + x % span
"""
from __future__ import annotations

MASK64 = (1 << 64) - 1


def splitmix64(state: int):
    """Yields the SplitMix64 sequence for ``state``."""
    while True:
        state = (state + 0x9E3779B97F4A7C15) & MASK64
        z = state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        yield z ^ (z >> 31)


def _rotl(x: int, k: int) -> int:
    return ((x << k) | (x >> (64 - k))) & MASK64


class Xoshiro256:
    def __init__(self, seed: int):
        sm = splitmix64(seed & MASK64)
        self.s = [next(sm) for _ in range(4)]

    def next_u64(self) -> int:
        s = self.s
        result = (_rotl((s[1] * 5) & MASK64, 7) * 9) & MASK64
        t = (s[1] << 17) & MASK64
        s[2] ^= s[0]
        s[3] ^= s[1]
        s[1] ^= s[2]
        s[0] ^= s[3]
        s[2] ^= t
        s[3] = _rotl(s[3], 45)
        return result

    def randint(self, lo: int, hi: int) -> int:
        span = hi - lo + 1
        limit = (1 << 64) - ((1 << 64) % span)
        while True:
            x = self.next_u64()
            if x < limit:
                return lo + x % span

    def random(self) -> float:
        """Uniform float in [0, 1) from the top 53 bits."""
        return (self.next_u64() >> 11) * (1.0 / (1 << 53))
