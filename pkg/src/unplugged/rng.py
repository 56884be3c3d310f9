"""Portable seeded randomness.

Everything randomized in this package (peg keys, random mosaics) draws from
this generator so output is reproducible byte-for-byte from a seed, and
can be reproduced in any language:

* State: one unsigned 64-bit integer, initialised to ``seed mod 2**64``.
* ``next_u64``: SplitMix64 --
  ``state += 0x9E3779B97F4A7C15; z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9; z = (z ^ (z >> 27)) * 0x94D049BB133111EB;
  return z ^ (z >> 31)`` (all arithmetic mod 2**64).
* ``below(n)``: unbiased integer in ``[0, n)`` by rejection: draw ``x``
  until ``x < 2**64 - (2**64 mod n)``, return ``x mod n``.
* ``shuffle(seq)``: Fisher-Yates from the end, for ``i = len-1 .. 1``
  swap ``seq[i]`` with ``seq[below(i + 1)]``.
"""

from __future__ import annotations

from typing import MutableSequence, TypeVar

T = TypeVar("T")

MASK64 = (1 << 64) - 1


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def below(self, n: int) -> int:
        if n < 1:
            raise ValueError("n must be positive")
        limit = (1 << 64) - ((1 << 64) % n)
        while True:
            x = self.next_u64()
            if x < limit:
                return x % n

    def shuffle(self, seq: MutableSequence[T]) -> MutableSequence[T]:
        for i in range(len(seq) - 1, 0, -1):
            j = self.below(i + 1)
            seq[i], seq[j] = seq[j], seq[i]
        return seq
