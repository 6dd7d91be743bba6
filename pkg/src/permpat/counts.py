"""Exact avoider counts S_n, T_n, V_n: closed forms, generating functions, brute force.

Every formula is evaluated with exact rationals.  A non-integral final value
is a bug and raises ``NonIntegerResult``; nothing is ever rounded.
"""
from __future__ import annotations

import enum
import math
import os
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

import numpy as np

from . import batch
from .errors import NoFormula, NonIntegerResult, SizeLimitExceeded
from .perm import ContainmentKind, Permutation, as_perm, complement, monotone, reverse
from .series import FormalPowerSeries, ps_binomial_power, ps_exp, ps_integrate, ps_reciprocal

DEFAULT_MAX_BRUTE_N = 11


class Method(enum.Enum):
    FORMULA = "formula"
    GF = "gf"
    BRUTE = "brute"


class GesselForm(enum.Enum):
    SUM = "sum"
    PRODUCT = "product"


@dataclass(frozen=True)
class CountReport:
    n: int
    pattern: Permutation
    kind: ContainmentKind
    count: int
    method: Method

    def __post_init__(self):
        if not 0 <= self.count <= factorial(self.n):
            raise ValueError(f"count {self.count} outside [0, {self.n}!]")

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "pattern": str(self.pattern),
            "kind": self.kind.value,
            "count": self.count,
            "method": self.method.value,
        }


def max_brute_n() -> int:
    """Enumeration guard; PPL_MAX_BRUTE_N raises it (minutes of CPU per +1)."""
    return int(os.environ.get("PPL_MAX_BRUTE_N", DEFAULT_MAX_BRUTE_N))


def _as_int(value: Fraction, what: str) -> int:
    if value.denominator != 1:
        raise NonIntegerResult(f"{what} evaluated to {value}")
    return value.numerator


def catalan(n: int) -> int:
    if n < 0:
        raise ValueError("n must be >= 0")
    return comb(2 * n, n) // (n + 1)


def s_1234(n: int, form: GesselForm | str = GesselForm.SUM) -> int:
    """S_n(1234) from Gessel's two expressions."""
    if n < 1:
        raise ValueError("n must be >= 1")
    form = GesselForm(form) if isinstance(form, str) else form
    if form is GesselForm.SUM:
        total = Fraction(0)
        for k in range(n + 1):
            num = comb(2 * k, k) * comb(n, k) ** 2 * (3 * k * k + 2 * k + 1 - n - 2 * n * k)
            total += Fraction(num, (k + 1) ** 2 * (k + 2) * (n - k + 1))
        return _as_int(2 * total, f"Gessel sum form at n={n}")
    total = sum(comb(2 * k, k) * comb(n + 1, k + 1) * comb(n + 2, k + 1) for k in range(n + 1))
    return _as_int(Fraction(total, (n + 1) ** 2 * (n + 2)), f"Gessel product form at n={n}")


def s_1342(n: int) -> int:
    """S_n(1342) from the alternating-sum closed form."""
    if n < 1:
        raise ValueError("n must be >= 1")
    total = Fraction((-1) ** (n - 1) * (7 * n * n - 3 * n - 2), 2)
    for i in range(2, n + 1):
        term = Fraction(2 ** (i + 1) * factorial(2 * i - 4), factorial(i) * factorial(i - 2))
        total += 3 * (-1) ** (n - i) * term * comb(n - i + 2, 2)
    return _as_int(total, f"S_{n}(1342) formula")


def gf_1342(N: int) -> FormalPowerSeries:
    """H(x) = 32x / (-8x^2 + 20x + 1 - (1-8x)^{3/2}) to order N.

    The denominator vanishes at x = 0, so both sides are divided by x before
    taking the reciprocal.  The resulting constant term is 32/32 = 1, i.e. the
    closed form itself encodes S_0 = 1 for the empty permutation.
    """
    if N < 1:
        raise ValueError("N must be >= 1")
    M = N + 1
    poly = FormalPowerSeries.from_coefficients([1, 20, -8], M)
    denom = poly - ps_binomial_power(-8, Fraction(3, 2), M)
    return 32 * ps_reciprocal(denom.shift_down(1))


def egf_to_counts(series: FormalPowerSeries, N: int | None = None) -> list[int]:
    N = series.order if N is None else N
    return [_as_int(series[n] * factorial(n), f"n!*[x^{n}]") for n in range(N + 1)]


def f_k_series(k: int, N: int) -> FormalPowerSeries:
    """sum x^{ik}/(ik)! - sum x^{ik+1}/(ik+1)! truncated at order N."""
    coeffs = [Fraction(0)] * (N + 1)
    for n in range(N + 1):
        if n % k == 0:
            coeffs[n] = Fraction(1, factorial(n))
        elif n % k == 1:
            coeffs[n] = Fraction(-1, factorial(n))
    return FormalPowerSeries(tuple(coeffs))


def tight_monotone_counts(k: int, N: int) -> list[int]:
    """T_n(12...k) for n = 0..N as n! [x^n] 1/f_k(x)."""
    if k < 3:
        raise ValueError("k must be >= 3")
    if N < 0:
        raise ValueError("N must be >= 0")
    return egf_to_counts(ps_reciprocal(f_k_series(k, N)))


def tight_132_counts(N: int) -> list[int]:
    """T_n(132) for n = 0..N from 1/(1 - int_0^x exp(-t^2/2) dt)."""
    if N < 0:
        raise ValueError("N must be >= 0")
    gauss = ps_exp(FormalPowerSeries.monomial(2, max(N - 1, 0), Fraction(-1, 2)))
    integral = ps_integrate(gauss).truncate(N)
    return egf_to_counts(ps_reciprocal(1 - integral))


def very_tight_monotone_counts(k: int, N: int) -> list[int]:
    """V_n(12...k) for n = 0..N: [x^n] sum_m m! x^m ((1-x^{k-1})/(1-x^k))^m."""
    if k < 2:
        raise ValueError("k must be >= 2")
    if N < 0:
        raise ValueError("N must be >= 0")
    one_minus = lambda j: FormalPowerSeries.from_coefficients([1] + [0] * (j - 1) + [-1], N)  # noqa: E731
    ratio = one_minus(k - 1) * ps_reciprocal(one_minus(k))
    x_ratio = FormalPowerSeries.monomial(1, N) * ratio
    total = FormalPowerSeries.constant(0, N)
    power = FormalPowerSeries.constant(1, N)
    # the m-th term has valuation m, so m > N contributes nothing
    for m in range(N + 1):
        total = total + factorial(m) * power
        power = power * x_ratio
    return [_as_int(c, "Jackson coefficient") for c in total.coefficients]


def rank_bound(n: int, k: int) -> int:
    """(k-1)^{2n}, an upper bound for S_n(12...k)."""
    if n < 1 or k <= 2:
        raise ValueError("need n >= 1 and k > 2")
    return (k - 1) ** (2 * n)


def _guard(n: int):
    limit = max_brute_n()
    if n > limit:
        raise SizeLimitExceeded(f"n={n} exceeds the enumeration guard {limit} (set PPL_MAX_BRUTE_N)")
    if n < 0:
        raise ValueError("n must be >= 0")


def brute_force_count(n: int, q, kind: ContainmentKind | str = ContainmentKind.CLASSIC) -> int:
    """Number of n-permutations avoiding q, by exhaustive enumeration."""
    q, kind = as_perm(q), ContainmentKind.parse(kind)
    _guard(n)
    if n < len(q):
        return factorial(n)
    total = 0
    for block in batch.permutation_blocks(n):
        total += int(np.count_nonzero(batch.count_occurrences_rows(block, q, kind) == 0))
    return total


def brute_force_copy_distribution(n: int, q, kind: ContainmentKind | str = ContainmentKind.CLASSIC) -> dict[int, int]:
    """t -> number of n-permutations with exactly t occurrences of q."""
    q, kind = as_perm(q), ContainmentKind.parse(kind)
    _guard(n)
    dist: Counter = Counter()
    for block in batch.permutation_blocks(n):
        values, freq = np.unique(batch.count_occurrences_rows(block, q, kind), return_counts=True)
        for v, f in zip(values.tolist(), freq.tolist()):
            dist[v] += f
    return dict(sorted(dist.items()))


# -- dispatch by symmetry class ------------------------------------------------

def _symmetry_class(q: Permutation, kind: ContainmentKind) -> set[Permutation]:
    """Patterns equinumerous with q by reverse/complement (and inverse for classic)."""
    seen = {q}
    frontier = [q]
    ops = [reverse, complement]
    if kind is ContainmentKind.CLASSIC:
        ops.append(Permutation.inverse)
    while frontier:
        p = frontier.pop()
        for op in ops:
            r = op(p)
            if r not in seen:
                seen.add(r)
                frontier.append(r)
    return seen


def _formula_counts(q: Permutation, kind: ContainmentKind, n: int, method: Method) -> int:
    k = len(q)
    cls = _symmetry_class(q, kind)
    if n < k:
        return factorial(n)
    if k == 1:
        return 0
    if kind is ContainmentKind.CLASSIC:
        if method is Method.FORMULA:
            if k == 2:
                return 1
            if k == 3:
                return catalan(n)
            if Permutation.parse("1342") in cls:
                return s_1342(n)
            if Permutation.parse("1234") in cls:
                return s_1234(n)
        elif Permutation.parse("1342") in cls:
            return gf_1342(n)[n].numerator
    elif method is Method.GF:
        if kind is ContainmentKind.TIGHT:
            if k >= 3 and monotone(k) in cls:
                return tight_monotone_counts(k, n)[n]
            if Permutation.parse("132") in cls:
                return tight_132_counts(n)[n]
        elif monotone(k) in cls:
            return very_tight_monotone_counts(k, n)[n]
    raise NoFormula(f"no {method.value} route for pattern {q} under {kind.value} containment")


def count(n: int, q, kind: ContainmentKind | str = ContainmentKind.CLASSIC,
          method: Method | str = Method.BRUTE) -> CountReport:
    """Avoider count with provenance."""
    q, kind = as_perm(q), ContainmentKind.parse(kind)
    method = Method(method) if isinstance(method, str) else method
    if method is Method.BRUTE:
        value = brute_force_count(n, q, kind)
    else:
        value = _formula_counts(q, kind, n, method)
    return CountReport(n, q, kind, value, method)


def count_sequence(q, kind: ContainmentKind | str, n_max: int,
                   method: Method | str = Method.BRUTE) -> list[CountReport]:
    return [count(n, q, kind, method) for n in range(1, n_max + 1)]


def best_count(n: int, q, kind: ContainmentKind | str) -> CountReport:
    """Formula, then generating function, then brute force, whichever applies first."""
    for method in (Method.FORMULA, Method.GF):
        try:
            return count(n, q, kind, method)
        except NoFormula:
            pass
    return count(n, q, kind, Method.BRUTE)


def all_patterns(k: int) -> list[Permutation]:
    return [Permutation(tuple(row)) for row in batch.all_permutations(k).tolist()]


def log_root(value: int, n: int) -> float:
    """value^{1/n} for big integers without float overflow."""
    return math.exp(math.log(value) / n) if value > 0 else 0.0
