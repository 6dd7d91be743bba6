"""Constructions from the proofs: Simion-Schmidt, class signatures, 1324 normalisation, extendibility."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import EmptyClass, LengthTooSmall, NotRising, PreconditionViolated
from .perm import (
    ContainmentKind,
    Permutation,
    as_perm,
    contains,
    inversion_count,
    left_to_right_minima,
    right_to_left_maxima,
    standardize,
)

P123 = Permutation((1, 2, 3))
P132 = Permutation((1, 3, 2))
P1234 = Permutation((1, 2, 3, 4))
P1324 = Permutation((1, 3, 2, 4))


def simion_schmidt(p) -> Permutation:
    """132-avoider -> 123-avoider: keep left-to-right minima, fill the rest decreasingly."""
    p = as_perm(p)
    if contains(p, P132):
        raise PreconditionViolated(f"{p} contains 132")
    minima = dict(left_to_right_minima(p))
    rest = sorted((v for pos, v in enumerate(p, 1) if pos not in minima), reverse=True)
    it = iter(rest)
    return Permutation(tuple(minima[pos] if pos in minima else next(it) for pos in range(1, len(p) + 1)))


def simion_schmidt_inverse(r) -> Permutation:
    """123-avoider -> 132-avoider: each free slot takes the smallest unused entry above the last minimum."""
    r = as_perm(r)
    if contains(r, P123):
        raise PreconditionViolated(f"{r} contains 123")
    minima = dict(left_to_right_minima(r))
    remaining = sorted(v for pos, v in enumerate(r, 1) if pos not in minima)
    out = []
    current_min = None
    for pos in range(1, len(r) + 1):
        if pos in minima:
            current_min = minima[pos]
            out.append(current_min)
            continue
        pick = next(v for v in remaining if v > current_min)
        remaining.remove(pick)
        out.append(pick)
    return Permutation(tuple(out))


@dataclass(frozen=True)
class ClassSignature:
    """Positions and values of left-to-right minima and right-to-left maxima."""

    n: int
    lr_minima: tuple[tuple[int, int], ...]
    rl_maxima: tuple[tuple[int, int], ...]

    def pattern_string(self) -> str:
        """Stars for middle positions, e.g. '3*1*7*5'."""
        fixed = dict(self.lr_minima) | dict(self.rl_maxima)
        return "".join(str(fixed[i]) if i in fixed else "*" for i in range(1, self.n + 1))

    def to_dict(self) -> dict:
        return {"n": self.n, "lr_minima": [list(t) for t in self.lr_minima],
                "rl_maxima": [list(t) for t in self.rl_maxima]}


def class_signature(p) -> ClassSignature:
    p = as_perm(p)
    return ClassSignature(len(p), tuple(left_to_right_minima(p)), tuple(right_to_left_maxima(p)))


def canonical_1234_avoider(sig: ClassSignature) -> Permutation:
    """The unique member of the class whose middle entries decrease left to right."""
    fixed = dict(sig.lr_minima)
    for pos, val in sig.rl_maxima:
        if fixed.get(pos, val) != val:
            raise EmptyClass(f"position {pos} assigned two values")
        fixed[pos] = val
    if len(set(fixed.values())) != len(fixed) or not all(1 <= v <= sig.n for v in fixed.values()):
        raise EmptyClass("fixed values are not distinct entries of 1..n")
    middle = iter(sorted(set(range(1, sig.n + 1)) - set(fixed.values()), reverse=True))
    try:
        p = Permutation(tuple(fixed[i] if i in fixed else next(middle) for i in range(1, sig.n + 1)))
    except (StopIteration, ValueError) as exc:
        raise EmptyClass(str(exc)) from exc
    if class_signature(p) != sig:
        raise EmptyClass(f"no permutation realises {sig.pattern_string()}")
    return p


def _special_1324(e: tuple[int, ...]) -> tuple[int, int, int, int] | None:
    """Lexicographically first 1324 occurrence starting at a LR minimum and ending at a RL maximum."""
    mins = [pos - 1 for pos, _ in left_to_right_minima(e)]
    maxs = set(pos - 1 for pos, _ in right_to_left_maxima(e))
    n = len(e)
    for i in mins:
        for j in range(i + 1, n):
            if e[j] <= e[i]:
                continue
            for l in range(j + 1, n):
                if not e[i] < e[l] < e[j]:
                    continue
                for m in range(l + 1, n):
                    if m in maxs and e[m] > e[j]:
                        return i, j, l, m
    return None


def normalize_to_1324_avoider(p, trace: list | None = None) -> Permutation:
    """Swap the middle two entries of special 1324 copies until none remain.

    Each step keeps the class signature and strictly lowers the inversion
    count; both are checked.  If ``trace`` is a list, each step appends
    (occurrence positions, permutation after the swap).
    """
    p = as_perm(p)
    sig = class_signature(p)
    e = list(p.entries)
    inv = inversion_count(p)
    while (occ := _special_1324(tuple(e))) is not None:
        _, j, l, _ = occ
        e[j], e[l] = e[l], e[j]
        q = Permutation(tuple(e))
        new_inv = inversion_count(q)
        if new_inv >= inv or class_signature(q) != sig:
            raise RuntimeError(f"swap at {occ} broke the class or inversion invariant")
        inv = new_inv
        if trace is not None:
            trace.append((tuple(i + 1 for i in occ), q))
    if contains(Permutation(tuple(e)), P1324):
        raise RuntimeError("normalisation stopped on a 1324-containing permutation")
    return Permutation(tuple(e))


def is_rising(q) -> bool:
    q = as_perm(q)
    if len(q) < 2:
        raise LengthTooSmall("rising is defined for length >= 2")
    return q[0] < q[-1]


def extendible_overlap(q) -> int | None:
    """Smallest s for which q is extendible, or None."""
    q = as_perm(q)
    if not is_rising(q):
        raise NotRising(f"{q} is not rising")
    k = len(q)
    e = q.entries
    for s in range(1, k):
        left, right = e[:s], e[k - s:]
        if (set(left) == set(range(1, s + 1)) and set(right) == set(range(k - s + 1, k + 1))
                and standardize(left) == standardize(right)):
            return s
    return None


def is_extendible(q) -> bool:
    return extendible_overlap(q) is not None


def rising_orientation(q) -> Permutation:
    """q itself if rising, else its reverse."""
    q = as_perm(q)
    return q if is_rising(q) else Permutation(q.entries[::-1])


def very_tight_copies_disjoint(p, q) -> bool:
    """True when no two very tight occurrences of q in p share a position."""
    from .perm import occurrences

    starts = [occ[0] for occ in occurrences(p, q, ContainmentKind.VERY_TIGHT)]
    k = len(as_perm(q))
    return all(b - a >= k for a, b in combinations(starts, 2))
