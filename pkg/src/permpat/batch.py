"""Vectorised enumeration of S_n and row-wise occurrence counting.

Permutations are rows of an int8 array with values 1..n.  The full S_n is
produced in lexicographic order, split into blocks by leading entries once
n! exceeds ``BLOCK_ROWS`` so that memory stays bounded.
"""
from __future__ import annotations

import math
from functools import lru_cache
from itertools import combinations
from typing import Iterator

import numpy as np

from .perm import ContainmentKind, Permutation, as_perm

BLOCK_ROWS = 4_000_000


@lru_cache(maxsize=12)
def _all_permutations(n: int) -> np.ndarray:
    if n == 0:
        return np.zeros((1, 0), dtype=np.int8)
    prev = _all_permutations(n - 1)
    rows = prev.shape[0]
    out = np.empty((n * rows, n), dtype=np.int8)
    for v in range(1, n + 1):
        block = out[(v - 1) * rows:v * rows]
        block[:, 0] = v
        block[:, 1:] = prev + (prev >= v)
    out.flags.writeable = False
    return out


def all_permutations(n: int) -> np.ndarray:
    """Every n-permutation as a row, lexicographic order."""
    if math.factorial(n) > BLOCK_ROWS:
        return np.concatenate(list(permutation_blocks(n)))
    return _all_permutations(n)


def permutation_blocks(n: int, block_rows: int | None = None) -> Iterator[np.ndarray]:
    """Yield S_n in lexicographic order as blocks sharing a common prefix."""
    block_rows = BLOCK_ROWS if block_rows is None else block_rows
    if math.factorial(n) <= block_rows:
        yield _all_permutations(n)
        return
    for v in range(1, n + 1):
        for sub in permutation_blocks(n - 1, block_rows):
            block = np.empty((sub.shape[0], n), dtype=np.int8)
            block[:, 0] = v
            block[:, 1:] = sub + (sub >= v)
            yield block


def _order(q: Permutation) -> list[int]:
    return [pos - 1 for pos in q.inverse().entries]


def count_increasing_rows(P: np.ndarray, k: int) -> np.ndarray:
    """Number of increasing subsequences of length k in each row."""
    rows, n = P.shape
    if k > n:
        return np.zeros(rows, dtype=np.int64)
    ways = np.ones((rows, n), dtype=np.int64)
    for _ in range(k - 1):
        nxt = np.zeros_like(ways)
        for j in range(1, n):
            below = P[:, :j] < P[:, j:j + 1]
            nxt[:, j] = (ways[:, :j] * below).sum(axis=1)
        ways = nxt
    return ways.sum(axis=1)


def count_occurrences_rows(P: np.ndarray, q, kind: ContainmentKind | str) -> np.ndarray:
    """Row-wise occurrence counts of q in each permutation row of P."""
    q, kind = as_perm(q), ContainmentKind.parse(kind)
    rows, n = P.shape
    k = len(q)
    counts = np.zeros(rows, dtype=np.int64)
    if k > n:
        return counts
    order = _order(q)
    if kind is ContainmentKind.CLASSIC:
        if q.is_monotone_increasing():
            return count_increasing_rows(P, k)
        for idx in combinations(range(n), k):
            cols = [idx[t] for t in order]
            hit = P[:, cols[0]] < P[:, cols[1]] if k > 1 else np.ones(rows, dtype=bool)
            for t in range(1, k - 1):
                hit &= P[:, cols[t]] < P[:, cols[t + 1]]
            counts += hit
        return counts
    for i in range(n - k + 1):
        cols = [i + t for t in order]
        hit = np.ones(rows, dtype=bool)
        for t in range(k - 1):
            hit &= P[:, cols[t]] < P[:, cols[t + 1]]
        if kind is ContainmentKind.VERY_TIGHT:
            # values at cols[0] and cols[-1] are the window's min and max
            hit &= (P[:, cols[-1]].astype(np.int16) - P[:, cols[0]]) == k - 1
        counts += hit
    return counts
