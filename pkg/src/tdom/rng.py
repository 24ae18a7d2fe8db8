"""SplitMix64, the portable generator behind every seeded corpus.

The state is a single unsigned 64-bit word. Each draw adds the golden
gamma 0x9E3779B97F4A7C15 to the state and mixes it:

    z = state
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB
    z = z ^ (z >> 31)

all arithmetic modulo 2**64. Bounded integers use rejection sampling on
the low end so that ``below(b)`` is exactly uniform; shuffles are
Fisher-Yates from the last index down. Any language with 64-bit unsigned
arithmetic reproduces the same streams.
"""

from __future__ import annotations

MASK64 = (1 << 64) - 1
GAMMA = 0x9E3779B97F4A7C15


class SplitMix64:
    def __init__(self, seed: int) -> None:
        self.state = seed & MASK64

    def next_u64(self) -> int:
        self.state = (self.state + GAMMA) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def below(self, bound: int) -> int:
        """Uniform integer in ``[0, bound)``."""
        if bound <= 0:
            raise ValueError("bound must be positive")
        threshold = ((1 << 64) - bound) % bound
        while True:
            r = self.next_u64()
            if r >= threshold:
                return r % bound

    def coin(self) -> bool:
        return self.next_u64() >> 63 == 1

    def shuffle(self, items: list) -> None:
        for i in range(len(items) - 1, 0, -1):
            j = self.below(i + 1)
            items[i], items[j] = items[j], items[i]

    def derive(self, tag: int) -> "SplitMix64":
        """Independent child stream, used to decouple sub-generators."""
        return SplitMix64(self.next_u64() ^ (tag * GAMMA & MASK64))
