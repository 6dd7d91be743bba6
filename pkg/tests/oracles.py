"""Slow, obviously-correct reference implementations used only by the tests.

They deliberately share no code with the package: subsets are bitmasks,
patterns are compared pairwise, permutations come from itertools.
"""
from itertools import permutations



def same_order(a, b):
    return all((a[i] < a[j]) == (b[i] < b[j]) for i in range(len(a)) for j in range(len(a)))


def naive_occurrences(p, q, kind):
    p, q = tuple(p), tuple(q)
    n, k = len(p), len(q)
    found = 0
    if kind == "classic":
        for mask in range(1 << n):
            if bin(mask).count("1") != k:
                continue
            sub = [p[i] for i in range(n) if mask >> i & 1]
            found += same_order(sub, q)
        return found
    for i in range(n - k + 1):
        w = p[i:i + k]
        if same_order(w, q) and (kind == "tight" or sorted(w) == list(range(min(w), min(w) + k))):
            found += 1
    return found


def naive_avoiders(n, q, kind):
    return sum(1 for p in permutations(range(1, n + 1)) if naive_occurrences(p, q, kind) == 0)


def naive_ranks(p):
    """Rank of each entry by searching every increasing subsequence ending there."""
    n = len(p)
    ranks = []
    for j in range(n):
        best = 1
        for mask in range(1 << j):
            idx = [i for i in range(j) if mask >> i & 1] + [j]
            vals = [p[i] for i in idx]
            if all(a < b for a, b in zip(vals, vals[1:])):
                best = max(best, len(idx))
        ranks.append(best)
    return ranks


def catalan_recurrence(n):
    c = [1]
    for m in range(1, n + 1):
        c.append(sum(c[i - 1] * c[m - i] for i in range(1, m + 1)))
    return c[n]


def set_partitions(j):
    """Count set partitions via restricted growth strings."""
    def rec(pos, mx):
        if pos == j:
            return 1
        return sum(rec(pos + 1, max(mx, b)) for b in range(mx + 2))
    return 1 if j == 0 else rec(1, 0)


def binom_general(alpha, j):
    from fractions import Fraction
    out = Fraction(1)
    for i in range(j):
        out *= (Fraction(alpha) - i) / (i + 1)
    return out


def convolve(a, b, N):
    return [sum(a[i] * b[n - i] for i in range(n + 1)) for n in range(N + 1)]


def chi2(observed, expected):
    return sum((o - expected) ** 2 / expected for o in observed)


def inversions_variance(n):
    from fractions import Fraction
    return Fraction(n * (n - 1) * (2 * n + 5), 72)


