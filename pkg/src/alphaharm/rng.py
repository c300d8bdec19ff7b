"""Deterministic pseudo-random generator for seeded verification runs.

SplitMix64 (Sebastiano Vigna, public domain; the seeding generator of
xoroshiro/xoshiro).  Chosen over library generators because the verify
reports must be byte-identical for identical flags and seed, across
library versions and reimplementations: the whole state transition is
three shift-xor-multiply lines.
"""

from __future__ import annotations

_MASK = (1 << 64) - 1


class SplitMix64:
    def __init__(self, seed: int):
        self._state = seed & _MASK

    def next_u64(self) -> int:
        self._state = (self._state + 0x9E3779B97F4A7C15) & _MASK
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def random(self) -> float:
        """Uniform in [0, 1) with 53 bits."""
        return (self.next_u64() >> 11) * (1.0 / (1 << 53))

    def uniform(self, lo: float, hi: float) -> float:
        return lo + (hi - lo) * self.random()

    def randint(self, lo: int, hi: int) -> int:
        """Uniform integer in [lo, hi] (inclusive), rejection-free modulo bias is negligible here."""
        span = hi - lo + 1
        return lo + self.next_u64() % span

    def complex_uniform(self, lo: float, hi: float) -> complex:
        return complex(self.uniform(lo, hi), self.uniform(lo, hi))

    def complex_in_disc(self, radius: float) -> complex:
        """Uniform over the disc of given radius; always consumes two draws."""
        import cmath
        import math
        r = radius * math.sqrt(self.random())
        return r * cmath.exp(2j * math.pi * self.random())

    def choice(self, seq):
        return seq[self.randint(0, len(seq) - 1)]
