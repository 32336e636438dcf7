"""Bit conventions shared by the game, set, and dynamics modules.

Bitstrings are big-endian in node order: node 0 is the leftmost character
(most significant bit) and '1' marks a contributing agent or Rydberg-excited
atom. Integer basis indices use the same convention, so ``int(bits, 2)`` and
``format(index, f"0{n}b")`` convert both ways.
"""

from __future__ import annotations

import numpy as np


def node_mask(node: int, n: int) -> int:
    """Integer with only ``node``'s bit set."""
    return 1 << (n - 1 - node)


def bit_is_set(index: int, node: int, n: int) -> bool:
    return (index >> (n - 1 - node)) & 1 == 1


def to_bitstring(index: int, n: int) -> str:
    return format(index, f"0{n}b")


def from_bitstring(bits: str) -> int:
    return int(bits, 2)


def support_of(index: int, n: int) -> frozenset[int]:
    """Node indices whose bit is set in ``index``."""
    return frozenset(i for i in range(n) if bit_is_set(index, i, n))


def index_of(members, n: int) -> int:
    """Basis index with exactly the given nodes' bits set."""
    z = 0
    for i in members:
        z |= node_mask(i, n)
    return z


def popcounts(n: int) -> np.ndarray:
    """Number of set bits for every basis index ``0 .. 2**n - 1``."""
    return np.bitwise_count(np.arange(1 << n, dtype=np.uint64)).astype(np.int64)
