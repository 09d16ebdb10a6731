"""Deterministic PRNG for reproducible verification runs.

Streams come from numpy's PCG64 bit generator. Child sources are derived
from (seed, *keys) through a SeedSequence, so a trial's stream depends
only on its keys and never on execution order.
"""

from __future__ import annotations

import numpy as np

from app.core.exceptions import VerificationInputError

UINT64_LIMIT = 2 ** 64

class RandomSource:
    """Seeded PCG64 stream"""

    ALGORITHM = "PCG64"

    def __init__(self, seed: int):
        if not 0 <= int(seed) < UINT64_LIMIT:
            raise VerificationInputError(f"Seed must be an unsigned 64-bit integer, got {seed}")
        self.seed = int(seed)
        self.generator = np.random.Generator(np.random.PCG64(self.seed))

    def child(self, *keys: int) -> "RandomSource":
        """Independent stream for (seed, *keys)"""
        sequence = np.random.SeedSequence([self.seed, *[int(k) for k in keys]])
        return RandomSource(int(sequence.generate_state(1, np.uint64)[0]))

    def complex_gaussian(self, *shape: int) -> np.ndarray:
        """Independent standard complex Gaussians (real and imaginary parts N(0, 1/2))"""
        real = self.generator.standard_normal(shape)
        imag = self.generator.standard_normal(shape)
        return (real + 1j * imag) / np.sqrt(2.0)

    def integers(self, low: int, high: int) -> int:
        """Uniform integer in [low, high]"""
        return int(self.generator.integers(low, high + 1))

    def uniform(self, low: float, high: float) -> float:
        return float(self.generator.uniform(low, high))

    def __repr__(self) -> str:
        return f"RandomSource(seed={self.seed}, algorithm={self.ALGORITHM})"
