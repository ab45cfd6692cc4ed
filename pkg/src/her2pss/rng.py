"""Deterministic 64-bit randomness used everywhere in the pipeline.

All sampling (patch coordinates, augmentation picks, Monte Carlo draws)
is driven by splitmix64 so that independent implementations can reproduce
the exact value streams. Nothing in the package touches ambient entropy.
"""

from __future__ import annotations

import numpy as np

MASK64 = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB


def splitmix64(x: int) -> int:
    """One-step splitmix64 output for state ``x``.

    Equals the first value a ``SplitMix64(x)`` stream emits. Used as the
    seed-derivation hash (e.g. per-element seeds in batch PSS building).
    """
    z = (x + _GOLDEN) & MASK64
    z = ((z ^ (z >> 30)) * _MIX1) & MASK64
    z = ((z ^ (z >> 27)) * _MIX2) & MASK64
    return z ^ (z >> 31)


def derive_seed(seed: int, *args: int) -> int:
    """Fold integer arguments into ``seed``: ``s = splitmix64(s ^ arg)`` per arg.

    Canonical way to derive independent sub-seeds from a run seed plus
    structural coordinates (epoch, core index, trial index, ...).
    """
    s = seed & MASK64
    for a in args:
        s = splitmix64(s ^ (a & MASK64))
    return s


class SplitMix64:
    """Sequential splitmix64 stream.

    state advances by the 64-bit golden gamma per draw; output k of a
    stream seeded with s is ``mix(s + (k+1)*gamma)``, which is what
    :meth:`next_array` exploits to produce the identical sequence in bulk.
    """

    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next_u64(self) -> int:
        self.state = (self.state + _GOLDEN) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * _MIX1) & MASK64
        z = ((z ^ (z >> 27)) * _MIX2) & MASK64
        return z ^ (z >> 31)

    def next_below(self, bound: int) -> int:
        """Draw uniformly from {0, ..., bound-1} as ``next_u64() % bound``.

        Modulo mapping is part of the documented wire behaviour: the bias
        is < bound / 2**64, negligible for image-sized bounds, and trivial
        for an independent implementation to reproduce.
        """
        if bound <= 0:
            raise ValueError(f"bound must be positive, got {bound}")
        return self.next_u64() % bound

    def next_array(self, count: int) -> np.ndarray:
        """Vectorized draw of ``count`` u64s, bit-identical to repeated next_u64."""
        if count < 0:
            raise ValueError("count must be >= 0")
        base = np.uint64(self.state)
        steps = (np.arange(1, count + 1, dtype=np.uint64)) * np.uint64(_GOLDEN)
        with np.errstate(over="ignore"):
            z = base + steps
            z = (z ^ (z >> np.uint64(30))) * np.uint64(_MIX1)
            z = (z ^ (z >> np.uint64(27))) * np.uint64(_MIX2)
            z = z ^ (z >> np.uint64(31))
        self.state = (self.state + count * _GOLDEN) & MASK64
        return z

    def numpy_generator(self) -> np.random.Generator:
        """A numpy Generator seeded from this stream (consumes one draw)."""
        return np.random.default_rng(self.next_u64())
