"""Permutations, the three containment notions, and the statistics used in the proofs.

Positions are 1-based in everything returned to callers.
"""
from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence


class ContainmentKind(enum.Enum):
    CLASSIC = "classic"
    TIGHT = "tight"
    VERY_TIGHT = "very-tight"

    @classmethod
    def parse(cls, text: str | ContainmentKind) -> ContainmentKind:
        if isinstance(text, cls):
            return text
        key = str(text).strip().lower().replace("_", "-")
        if key in ("verytight", "very"):
            key = "very-tight"
        for kind in cls:
            if kind.value == key:
                return kind
        raise ValueError(f"unknown containment kind {text!r}")


class Symmetry(enum.Enum):
    REVERSE = "reverse"
    COMPLEMENT = "complement"


@dataclass(frozen=True, order=True)
class Permutation:
    """A bijection on {1..n} in one-line notation."""

    entries: tuple[int, ...]

    def __post_init__(self):
        entries = tuple(int(x) for x in self.entries)
        object.__setattr__(self, "entries", entries)
        if sorted(entries) != list(range(1, len(entries) + 1)):
            raise ValueError(f"{entries} is not a permutation of 1..{len(entries)}")

    @classmethod
    def parse(cls, text: str | Sequence[int] | Permutation) -> Permutation:
        """Accept "3174625", "3 1 7 4 6 2 5", "3,1,7,4,6,2,5" or an int sequence."""
        if isinstance(text, Permutation):
            return text
        if not isinstance(text, str):
            return cls(tuple(text))
        s = text.strip()
        if re.fullmatch(r"\d*", s):
            if len(s) > 9:
                raise ValueError("compact digit notation is only allowed for n <= 9")
            return cls(tuple(int(c) for c in s))
        parts = [t for t in re.split(r"[,\s]+", s) if t]
        return cls(tuple(int(t) for t in parts))

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def decreasing(cls, n: int) -> Permutation:
        return cls(tuple(range(n, 0, -1)))

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[int]:
        return iter(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def __str__(self) -> str:
        if len(self) <= 9:
            return "".join(map(str, self.entries))
        return " ".join(map(str, self.entries))

    def __repr__(self) -> str:
        return f"Permutation({str(self)!r})"

    def inverse(self) -> Permutation:
        inv = [0] * len(self)
        for pos, val in enumerate(self.entries, start=1):
            inv[val - 1] = pos
        return Permutation(tuple(inv))

    def is_monotone_increasing(self) -> bool:
        return all(a < b for a, b in zip(self.entries, self.entries[1:]))


def as_perm(p) -> Permutation:
    return Permutation.parse(p)


def monotone(k: int) -> Permutation:
    """The increasing pattern 12...k."""
    return Permutation.identity(k)


def standardize(seq: Iterable[int]) -> tuple[int, ...]:
    """Pattern (order-isomorphic permutation) of a sequence of distinct numbers."""
    seq = list(seq)
    ranks = {v: r for r, v in enumerate(sorted(seq), start=1)}
    return tuple(ranks[v] for v in seq)


def apply_symmetry(p, which: Symmetry | str) -> Permutation:
    p = as_perm(p)
    which = Symmetry(which) if isinstance(which, str) else which
    if which is Symmetry.REVERSE:
        return Permutation(p.entries[::-1])
    n = len(p)
    return Permutation(tuple(n + 1 - x for x in p.entries))


def reverse(p) -> Permutation:
    return apply_symmetry(p, Symmetry.REVERSE)


def complement(p) -> Permutation:
    return apply_symmetry(p, Symmetry.COMPLEMENT)


def left_to_right_minima(p) -> list[tuple[int, int]]:
    out = []
    best = None
    for pos, val in enumerate(as_perm(p).entries, start=1):
        if best is None or val < best:
            out.append((pos, val))
            best = val
    return out


def right_to_left_maxima(p) -> list[tuple[int, int]]:
    """Right-to-left maxima, listed in position order (values decrease)."""
    entries = as_perm(p).entries
    out = []
    best = 0
    for pos in range(len(entries), 0, -1):
        val = entries[pos - 1]
        if val > best:
            out.append((pos, val))
            best = val
    return out[::-1]


def inversion_count(p) -> int:
    e = as_perm(p).entries
    return sum(1 for i, j in combinations(range(len(e)), 2) if e[i] > e[j])


def entry_ranks(p) -> list[int]:
    """Length of the longest increasing subsequence ending at each entry."""
    e = as_perm(p).entries
    ranks = []
    for j, v in enumerate(e):
        ranks.append(1 + max((ranks[i] for i in range(j) if e[i] < v), default=0))
    return ranks


def longest_increasing_length(p) -> int:
    return max(entry_ranks(p), default=0)


def _check_pattern(q: Permutation):
    if len(q) < 1:
        raise ValueError("pattern must have length >= 1")


def _window_matches(window: Sequence[int], order: Sequence[int], very_tight: bool) -> bool:
    # order[t] = index in the window that must hold the (t+1)-th smallest value
    if any(window[order[t]] > window[order[t + 1]] for t in range(len(order) - 1)):
        return False
    return not very_tight or max(window) - min(window) == len(window) - 1


def _pattern_order(q: Permutation) -> list[int]:
    return [pos - 1 for pos in q.inverse().entries]


def _classic_contains(e: tuple[int, ...], q: Permutation) -> bool:
    k = len(q)
    if q.is_monotone_increasing():
        return longest_increasing_length(Permutation(e)) >= k
    qe = q.entries
    chosen: list[int] = []

    def extend(start: int) -> bool:
        t = len(chosen)
        if t == k:
            return True
        for i in range(start, len(e) - (k - t) + 1):
            v = e[i]
            if all((e[c] < v) == (qe[s] < qe[t]) for s, c in enumerate(chosen)):
                chosen.append(i)
                if extend(i + 1):
                    return True
                chosen.pop()
        return False

    return extend(0)


def contains(p, q, kind: ContainmentKind | str = ContainmentKind.CLASSIC) -> bool:
    p, q, kind = as_perm(p), as_perm(q), ContainmentKind.parse(kind)
    _check_pattern(q)
    if len(q) > len(p):
        return False
    if kind is ContainmentKind.CLASSIC:
        return _classic_contains(p.entries, q)
    order = _pattern_order(q)
    k = len(q)
    vt = kind is ContainmentKind.VERY_TIGHT
    return any(_window_matches(p.entries[i:i + k], order, vt) for i in range(len(p) - k + 1))


def _count_increasing(e: Sequence[int], k: int) -> int:
    # ways[t][j]: increasing subsequences of length t+1 ending at j
    ways = [1] * len(e)
    for _ in range(k - 1):
        ways = [sum(ways[i] for i in range(j) if e[i] < e[j]) for j in range(len(e))]
    return sum(ways)


def count_occurrences(p, q, kind: ContainmentKind | str = ContainmentKind.CLASSIC) -> int:
    p, q, kind = as_perm(p), as_perm(q), ContainmentKind.parse(kind)
    _check_pattern(q)
    k, e = len(q), p.entries
    if k > len(e):
        return 0
    if kind is ContainmentKind.CLASSIC:
        if q.is_monotone_increasing():
            return _count_increasing(e, k)
        target = q.entries
        return sum(1 for idx in combinations(e, k) if standardize(idx) == target)
    order = _pattern_order(q)
    vt = kind is ContainmentKind.VERY_TIGHT
    return sum(1 for i in range(len(e) - k + 1) if _window_matches(e[i:i + k], order, vt))


def occurrences(p, q, kind: ContainmentKind | str = ContainmentKind.CLASSIC) -> list[tuple[int, ...]]:
    """All occurrences as 1-based position tuples, in lexicographic order."""
    p, q, kind = as_perm(p), as_perm(q), ContainmentKind.parse(kind)
    _check_pattern(q)
    k, e = len(q), p.entries
    if kind is ContainmentKind.CLASSIC:
        return [tuple(i + 1 for i in idx) for idx in combinations(range(len(e)), k)
                if standardize(e[i] for i in idx) == q.entries]
    order = _pattern_order(q)
    vt = kind is ContainmentKind.VERY_TIGHT
    return [tuple(range(i + 1, i + k + 1)) for i in range(len(e) - k + 1)
            if _window_matches(e[i:i + k], order, vt)]


def successions(p) -> int:
    """Number of i with p_i + 1 = p_{i+1}."""
    e = as_perm(p).entries
    return sum(1 for a, b in zip(e, e[1:]) if b == a + 1)
