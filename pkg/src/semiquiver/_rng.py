"""Splittable deterministic randomness: one seed, many independent streams."""
from __future__ import annotations

import numpy as np


def stream(seed: int, *key: int) -> np.random.Generator:
    """Generator for the child stream ``key`` of ``seed``.

    Streams with different keys are statistically independent; the same
    ``(seed, key)`` always reproduces the same draws.
    """
    ss = np.random.SeedSequence(entropy=int(seed) % (1 << 64), spawn_key=tuple(int(k) for k in key))
    return np.random.default_rng(ss)


def randint(g: np.random.Generator, lo: int, hi: int) -> int:
    """Uniform integer in the closed range ``[lo, hi]``."""
    return int(g.integers(lo, hi + 1))


def randmatrix(g: np.random.Generator, rows: int, cols: int, bound: int) -> list[list[int]]:
    if rows == 0 or cols == 0:
        return [[] for _ in range(rows)]
    return g.integers(-bound, bound + 1, size=(rows, cols)).tolist()


def derive_seed(seed: int, *key: int) -> int:
    """A 63-bit integer seed for the child stream ``key`` of ``seed``."""
    ss = np.random.SeedSequence(entropy=int(seed) % (1 << 64), spawn_key=tuple(int(k) for k in key))
    hi, lo = ss.generate_state(2, dtype=np.uint32).tolist()
    return ((hi << 32) | lo) & ((1 << 63) - 1)
