"""Index tables for S_kappa consumed by the product kernels."""
from __future__ import annotations

import functools
from dataclasses import dataclass

import numpy as np

from .perm import Permutation, all_permutations, left_multiply_simple, length, reduced_word


@dataclass(frozen=True, eq=False)
class GroupTables:
    """
    S_kappa indexed in lexicographic order of one-line notation.

    ``succ[g, r]`` is the index of s_{g+1} o perms[r]; ``rises[g, r]`` is 1 when
    that product is longer than perms[r]. Generators are 0-based here only.
    """
    kappa: int
    perms: list[Permutation]
    index: dict[Permutation, int]
    lengths: np.ndarray
    succ: np.ndarray
    rises: np.ndarray

    @property
    def size(self) -> int:
        return len(self.perms)

    def word(self, r: int) -> np.ndarray:
        """Reduced word of perms[r] as 0-based generator indices (int32)."""
        return np.asarray([i - 1 for i in reduced_word(self.perms[r]).letters], dtype=np.int32)


@functools.lru_cache(maxsize=8)
def group_tables(kappa: int) -> GroupTables:
    perms = all_permutations(kappa)
    index = {w: r for r, w in enumerate(perms)}
    n = len(perms)
    ngen = max(kappa - 1, 0)
    succ = np.zeros((ngen, n), dtype=np.int32)
    rises = np.zeros((ngen, n), dtype=np.uint8)
    for r, w in enumerate(perms):
        for g in range(ngen):
            t, up = left_multiply_simple(g + 1, w)
            succ[g, r] = index[t]
            rises[g, r] = up
    lengths = np.fromiter((length(w) for w in perms), dtype=np.int32, count=n)
    return GroupTables(kappa, perms, index, lengths, succ, rises)
