"""SplitMix64, the fixed generator behind every seeded instance stream.

Update (all arithmetic mod 2^64)::

    state += 0x9E3779B97F4A7C15
    z = state
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB
    return z ^ (z >> 31)

``below(m)`` returns ``next() % m``.  Trial ``t`` of a run seeded with ``s``
draws from a fresh generator seeded with ``SplitMix64(s).jump(t)``, so trials
are independent of evaluation order.
"""

from __future__ import annotations

from typing import MutableSequence, Sequence, TypeVar

MASK = (1 << 64) - 1
GAMMA = 0x9E3779B97F4A7C15

T = TypeVar("T")


def _mix(z: int) -> int:
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK
    return z ^ (z >> 31)


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & MASK

    def next(self) -> int:
        self.state = (self.state + GAMMA) & MASK
        return _mix(self.state)

    def jump(self, k: int) -> int:
        """Output number ``k`` (0-based) of this stream without advancing it."""
        return _mix((self.state + (k + 1) * GAMMA) & MASK)

    def below(self, m: int) -> int:
        if m <= 0:
            raise ValueError("below() needs a positive bound")
        return self.next() % m

    def randint(self, lo: int, hi: int) -> int:
        """Uniform-ish integer in the closed range [lo, hi]."""
        return lo + self.below(hi - lo + 1)

    def chance(self, num: int, den: int) -> bool:
        return self.below(den) < num

    def choice(self, seq: Sequence[T]) -> T:
        return seq[self.below(len(seq))]

    def shuffle(self, seq: MutableSequence) -> None:
        for i in range(len(seq) - 1, 0, -1):
            j = self.below(i + 1)
            seq[i], seq[j] = seq[j], seq[i]

    def permutation(self, n: int) -> list[int]:
        p = list(range(n))
        self.shuffle(p)
        return p


def trial_rng(seed: int, trial: int) -> SplitMix64:
    return SplitMix64(SplitMix64(seed).jump(trial))
