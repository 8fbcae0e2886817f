"""Deterministic 64-bit sampling stream used by every sampled check.

The generator is the splitmix64 finalizer applied to a counter:

    draw(seed, i) = mix64((seed + (i + 1) * 0x9E3779B97F4A7C15) mod 2^64)

    mix64(z): z ^= z >> 30; z *= 0xBF58476D1CE4E5B9;
              z ^= z >> 27; z *= 0x94D049BB133111EB;
              z ^= z >> 31      (all mod 2^64)

Being a pure function of (seed, index) it replays identically for equal
seeds, can be evaluated for any index range independently (associative
work splitting), and is trivial to reimplement in any language.  Bounded
draws reduce by plain modulo, which is documented and close enough to
uniform for the ranges used here (all < 2^22).
"""

from __future__ import annotations

import numpy as np

GOLDEN = 0x9E3779B97F4A7C15
MIX1 = 0xBF58476D1CE4E5B9
MIX2 = 0x94D049BB133111EB
MASK = (1 << 64) - 1


def splitmix64(seed: int, index: int) -> int:
    """The index-th raw 64-bit draw of the stream started at `seed`."""
    z = (seed + (index + 1) * GOLDEN) & MASK
    z = ((z ^ (z >> 30)) * MIX1) & MASK
    z = ((z ^ (z >> 27)) * MIX2) & MASK
    return z ^ (z >> 31)


def draw_block(seed: int, start: int, count: int) -> np.ndarray:
    """Vectorized draws for stream indexes start .. start+count-1 (uint64)."""
    idx = np.arange(start + 1, start + count + 1, dtype=np.uint64)
    z = (np.uint64(seed & MASK) + idx * np.uint64(GOLDEN))
    z = (z ^ (z >> np.uint64(30))) * np.uint64(MIX1)
    z = (z ^ (z >> np.uint64(27))) * np.uint64(MIX2)
    return z ^ (z >> np.uint64(31))


def bounded(raw: np.ndarray, n: int) -> np.ndarray:
    """Reduce raw 64-bit draws to the range [0, n) by modulo."""
    return (raw % np.uint64(n)).astype(np.int64)


class SampleStream:
    """Sequential convenience wrapper over the counter-based stream."""

    def __init__(self, seed: int, start: int = 0):
        self.seed = seed & MASK
        self.index = start

    def next_raw(self) -> int:
        v = splitmix64(self.seed, self.index)
        self.index += 1
        return v

    def next_below(self, n: int) -> int:
        return self.next_raw() % n
