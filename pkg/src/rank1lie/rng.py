"""Deterministic 64-bit PRNG for reproducible random sampling.

SplitMix64: the same seed always yields the same stream, independent of
platform and Python version.  Used for all randomized verification so that
reports are byte-reproducible.
"""

from __future__ import annotations

_MASK64 = (1 << 64) - 1


class SplitMix64:
    """SplitMix64 generator over unsigned 64-bit state."""

    def __init__(self, seed: int):
        self.state = seed & _MASK64

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def randint(self, lo: int, hi: int) -> int:
        """Uniform integer in [lo, hi], via rejection sampling (no modulo bias)."""
        span = hi - lo + 1
        limit = (1 << 64) - ((1 << 64) % span)
        while True:
            v = self.next_u64()
            if v < limit:
                return lo + (v % span)

    def coords(self, n: int, lo: int = -9, hi: int = 9) -> list[int]:
        """n integer coordinates, uniform in [lo, hi]."""
        return [self.randint(lo, hi) for _ in range(n)]

    def nonzero_coords(self, n: int, lo: int = -9, hi: int = 9) -> list[int]:
        """Like coords() but resampled until not identically zero."""
        while True:
            v = self.coords(n, lo, hi)
            if any(v):
                return v
