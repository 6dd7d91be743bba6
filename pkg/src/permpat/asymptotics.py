"""Growth rates: n-th root sequences, bisection roots for the tight-pattern constants."""
from __future__ import annotations

import enum
import math
from dataclasses import asdict, dataclass
from math import factorial
from typing import Callable

from scipy import integrate

from .counts import best_count, log_root
from .errors import BracketingFailed
from .perm import ContainmentKind, Permutation, as_perm

# cited only; nothing here reproduces it
L1324_LOWER_BOUND = 11.35


@dataclass(frozen=True)
class GrowthSequence:
    pattern: Permutation
    kind: ContainmentKind
    values: tuple[tuple[int, int, float], ...]  # (n, count, root)
    methods: tuple[str, ...]

    def to_dict(self) -> dict:
        return {"pattern": str(self.pattern), "kind": self.kind.value,
                "values": [{"n": n, "count": c, "root": r, "method": m}
                           for (n, c, r), m in zip(self.values, self.methods)]}


@dataclass(frozen=True)
class RootResult:
    value: float
    residual: float
    bracket: tuple[float, float]
    tolerance: float
    extra: dict | None = None

    def to_dict(self) -> dict:
        return asdict(self)


def _root(kind: ContainmentKind, n: int, c: int) -> float:
    if kind is ContainmentKind.CLASSIC:
        return log_root(c, n)
    # (c/n!)^{1/n} through logs: n! overflows floats long before c does
    return math.exp((math.log(c) - math.lgamma(n + 1)) / n) if c else 0.0


def growth_sequence(q, kind: ContainmentKind | str, n_max: int) -> GrowthSequence:
    q, kind = as_perm(q), ContainmentKind.parse(kind)
    values, methods = [], []
    for n in range(1, n_max + 1):
        rep = best_count(n, q, kind)
        values.append((n, rep.count, _root(kind, n, rep.count)))
        methods.append(rep.method.value)
    return GrowthSequence(q, kind, tuple(values), tuple(methods))


def bisect(f: Callable[[float], float], lo: float, hi: float, tol: float, max_iter: int = 200) -> RootResult:
    """Bisection on a sign-changing bracket down to width <= tol."""
    flo, fhi = f(lo), f(hi)
    if flo == 0:
        return RootResult(lo, 0.0, (lo, lo), tol)
    if fhi == 0:
        return RootResult(hi, 0.0, (hi, hi), tol)
    if (flo > 0) == (fhi > 0):
        raise BracketingFailed(f"no sign change on [{lo}, {hi}]")
    for _ in range(max_iter):
        if hi - lo <= tol:
            break
        mid = 0.5 * (lo + hi)
        fm = f(mid)
        if fm == 0:
            return RootResult(mid, 0.0, (lo, hi), tol)
        if (fm > 0) == (flo > 0):
            lo, flo = mid, fm
        else:
            hi = mid
    mid = 0.5 * (lo + hi)
    return RootResult(mid, f(mid), (lo, hi), tol)


def first_sign_change(f: Callable[[float], float], lo: float, hi: float, steps: int = 400) -> tuple[float, float]:
    h = (hi - lo) / steps
    a, fa = lo, f(lo)
    for i in range(1, steps + 1):
        b = lo + i * h
        fb = f(b)
        if fa == 0 or (fa > 0) != (fb > 0):
            return a, b
        a, fa = b, fb
    raise BracketingFailed(f"no sign change found in ({lo}, {hi}]")


def f_k_value(k: int, x: float, tol: float = 1e-15) -> float:
    """f_k(x) summed until the next term is below tol/100 and the tail is geometric."""
    total, term, j = 0.0, 1.0, 0
    while True:
        r = j % k
        if r == 0:
            total += term
        elif r == 1:
            total -= term
        j += 1
        term *= x / j
        # once x/(j+1) <= 1/2 the remaining tail is at most twice the next term
        if abs(term) < tol / 100 and abs(x) / (j + 1) <= 0.5:
            return total


def smallest_positive_root_fk(k: int, tol: float = 1e-10) -> RootResult:
    if k < 3:
        raise ValueError("k must be >= 3")
    if tol <= 0:
        raise ValueError("tol must be positive")
    f = lambda x: f_k_value(k, x, tol)  # noqa: E731
    lo, hi = first_sign_change(f, 0.0, 4.0)
    return bisect(f, lo, hi, tol)


class TightConstant(enum.Enum):
    RHO1342 = "rho1342"
    RHO1234 = "rho1234"
    RHO132 = "rho132"


def _gauss_integral(power: int, factor: float, tol: float) -> Callable[[float], float]:
    def F(z: float) -> float:
        val, err = integrate.quad(lambda t: math.exp(-t ** power / factor), 0.0, z,
                                  epsabs=tol / 10, epsrel=0.0, limit=200)
        if err > tol / 10:
            raise ArithmeticError(f"quadrature error {err} above budget {tol / 10}")
        return val - 1.0

    return F


def tight_constant_roots(which: TightConstant | str, tol: float = 1e-10) -> RootResult:
    """Growth constant rho = 1/z for the tight patterns 1342, 1234 and 132.

    The result's value is rho; the bracket and residual refer to the root z
    of the defining equation.  For 132 ``extra`` also carries
    gamma = exp(z^2 / 2).
    """
    which = TightConstant(which) if isinstance(which, str) else which
    if tol <= 0:
        raise ValueError("tol must be positive")
    if which is TightConstant.RHO1234:
        g = lambda z: math.cos(z) - math.sin(z) + math.exp(-z)  # noqa: E731
    elif which is TightConstant.RHO1342:
        g = _gauss_integral(3, 6.0, tol)
    else:
        g = _gauss_integral(2, 2.0, tol)
    lo, hi = first_sign_change(g, 0.0, 4.0)
    z = bisect(g, lo, hi, tol)
    extra = {"z": z.value, "z_bracket": list(z.bracket)}
    if which is TightConstant.RHO132:
        extra["gamma"] = math.exp(z.value ** 2 / 2)
    return RootResult(1.0 / z.value, z.residual, z.bracket, tol, extra)


def tight_subword_bound(n: int, k: int) -> float:
    """((k!-1)/k!)^{floor(n/k)}: only floor(n/k) disjoint windows are inspected."""
    return ((factorial(k) - 1) / factorial(k)) ** (n // k)


def ratio_trend(q, kind: ContainmentKind | str, n_range) -> dict:
    """(count/n!)^{1/n} per n plus the disjoint-window upper bound.

    The bound is an equality at n = k (a single window), so strictness is
    only demanded for n > k.
    """
    q, kind = as_perm(q), ContainmentKind.parse(kind)
    k = len(q)
    rows = []
    for n in n_range:
        rep = best_count(n, q, kind)
        ratio = rep.count / factorial(n)
        bound = tight_subword_bound(n, k)
        ok = ratio < bound if n > k else ratio <= bound + 1e-15
        rows.append({"n": n, "count": rep.count, "method": rep.method.value,
                     "root": _root(kind, n, rep.count), "ratio": ratio, "bound": bound, "bound_holds": ok})
    return {"pattern": str(q), "kind": kind.value, "rows": rows,
            "passed": all(r["bound_holds"] for r in rows)}
