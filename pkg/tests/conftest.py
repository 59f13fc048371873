"""Shared oracles and generators for the test suite.

The oracles here deliberately avoid the library's bitmask kernels: families
are plain frozensets and intersection parity is computed with len().  Tests
compare library output against these slow-but-obvious reference values.
"""

from __future__ import annotations

import itertools
import random

from oelab import SetFamily


def op_oracle(sets) -> int:
    """Odd-intersection pair count from frozensets, the long way."""
    fs = list(sets)
    return sum(
        1 for a, b in itertools.combinations(fs, 2) if len(a & b) % 2 == 1
    )


def as_sets(family: SetFamily) -> list[frozenset[int]]:
    return [frozenset(v.elements()) for v in family.members]


def parity_masks(n: int, parity: int | None) -> list[int]:
    """All masks on [n], or only those of odd (1) / even (0) popcount."""
    return [
        m for m in range(1 << n)
        if parity is None or m.bit_count() % 2 == parity
    ]


def random_family(rng: random.Random, n: int, size: int, parity: int | None = None) -> SetFamily:
    pool = parity_masks(n, parity)
    return SetFamily.from_masks(sorted(rng.sample(pool, size)), n)
