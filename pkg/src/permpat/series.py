"""Truncated formal power series with exact rational coefficients.

A series of order N stores coefficients for x^0..x^N; everything beyond is
unknown, never implicitly zero.  Binary operations truncate to the smaller
order.  No floating point appears anywhere here.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .errors import NonzeroConstantTerm, ZeroConstantTerm

Rational = Fraction


class Op(enum.Enum):
    ADD = "add"
    SUB = "sub"
    MUL = "mul"


@dataclass(frozen=True)
class FormalPowerSeries:
    coefficients: tuple[Fraction, ...]

    def __post_init__(self):
        coeffs = tuple(Fraction(c) for c in self.coefficients)
        if not coeffs:
            raise ValueError("a series needs at least the constant coefficient")
        object.__setattr__(self, "coefficients", coeffs)

    @classmethod
    def from_coefficients(cls, coeffs: Iterable, order: int) -> FormalPowerSeries:
        """Pad with zeros (or cut) to exactly order+1 coefficients."""
        coeffs = list(coeffs)[:order + 1]
        coeffs += [0] * (order + 1 - len(coeffs))
        return cls(tuple(coeffs))

    @classmethod
    def constant(cls, c, order: int) -> FormalPowerSeries:
        return cls.from_coefficients([c], order)

    @classmethod
    def monomial(cls, power: int, order: int, c=1) -> FormalPowerSeries:
        return cls.from_coefficients([0] * power + [c], order)

    @property
    def order(self) -> int:
        return len(self.coefficients) - 1

    def __getitem__(self, n: int) -> Fraction:
        if not 0 <= n <= self.order:
            raise IndexError(f"coefficient {n} is beyond the truncation order {self.order}")
        return self.coefficients[n]

    def truncate(self, order: int) -> FormalPowerSeries:
        if order > self.order:
            raise ValueError("cannot raise the truncation order")
        return FormalPowerSeries(self.coefficients[:order + 1])

    def __add__(self, other):
        return ps_arith(self, _lift(other, self.order), Op.ADD)

    __radd__ = __add__

    def __sub__(self, other):
        return ps_arith(self, _lift(other, self.order), Op.SUB)

    def __rsub__(self, other):
        return ps_arith(_lift(other, self.order), self, Op.SUB)

    def __neg__(self):
        return FormalPowerSeries(tuple(-c for c in self.coefficients))

    def __mul__(self, other):
        if isinstance(other, FormalPowerSeries):
            return ps_arith(self, other, Op.MUL)
        c = Fraction(other)
        return FormalPowerSeries(tuple(c * a for a in self.coefficients))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, FormalPowerSeries):
            return self * ps_reciprocal(other)
        c = Fraction(other)
        return FormalPowerSeries(tuple(a / c for a in self.coefficients))

    def __pow__(self, m: int):
        if m < 0:
            return ps_reciprocal(self) ** (-m)
        result = FormalPowerSeries.constant(1, self.order)
        base = self
        while m:
            if m & 1:
                result = result * base
            base = base * base
            m >>= 1
        return result

    def shift_down(self, by: int = 1) -> FormalPowerSeries:
        """Divide by x^by; the dropped coefficients must be zero."""
        if any(self.coefficients[:by]):
            raise ZeroConstantTerm("dividing by x^%d needs the low coefficients to vanish" % by)
        return FormalPowerSeries(self.coefficients[by:])

    def reciprocal(self):
        return ps_reciprocal(self)

    def integrate(self):
        return ps_integrate(self)

    def derivative(self):
        return ps_derivative(self)

    def exp(self):
        return ps_exp(self)

    def __str__(self) -> str:
        terms = []
        for n, c in enumerate(self.coefficients):
            if c == 0:
                continue
            mono = "" if n == 0 else ("*x" if n == 1 else f"*x^{n}")
            terms.append(f"{c}{mono}")
        body = " + ".join(terms) if terms else "0"
        return f"{body} + O(x^{self.order + 1})"

    def csv_rows(self) -> list[tuple[int, int, int]]:
        return [(n, c.numerator, c.denominator) for n, c in enumerate(self.coefficients)]


def _lift(other, order: int) -> FormalPowerSeries:
    if isinstance(other, FormalPowerSeries):
        return other
    return FormalPowerSeries.constant(other, order)


def ps_arith(a: FormalPowerSeries, b: FormalPowerSeries, op: Op | str) -> FormalPowerSeries:
    op = Op(op) if isinstance(op, str) else op
    N = min(a.order, b.order)
    A, B = a.coefficients, b.coefficients
    if op is Op.ADD:
        return FormalPowerSeries(tuple(A[i] + B[i] for i in range(N + 1)))
    if op is Op.SUB:
        return FormalPowerSeries(tuple(A[i] - B[i] for i in range(N + 1)))
    # skip zero coefficients: most series here are sparse
    out = [Fraction(0)] * (N + 1)
    nz_b = [(j, B[j]) for j in range(N + 1) if B[j]]
    for i in range(N + 1):
        ai = A[i]
        if not ai:
            continue
        for j, bj in nz_b:
            if i + j > N:
                break
            out[i + j] += ai * bj
    return FormalPowerSeries(tuple(out))


def ps_reciprocal(a: FormalPowerSeries) -> FormalPowerSeries:
    A = a.coefficients
    if A[0] == 0:
        raise ZeroConstantTerm("reciprocal needs a nonzero constant term")
    inv0 = 1 / A[0]
    nz = [(j, A[j]) for j in range(1, len(A)) if A[j]]
    out = [inv0]
    for n in range(1, len(A)):
        s = sum((aj * out[n - j] for j, aj in nz if j <= n), Fraction(0))
        out.append(-inv0 * s)
    return FormalPowerSeries(tuple(out))


def ps_binomial_power(c, alpha, N: int) -> FormalPowerSeries:
    """(1 + c*x)^alpha to order N via generalised binomial coefficients."""
    c, alpha = Fraction(c), Fraction(alpha)
    out = [Fraction(1)]
    binom = Fraction(1)
    for j in range(1, N + 1):
        binom = binom * (alpha - (j - 1)) / j
        out.append(binom * c ** j)
    return FormalPowerSeries(tuple(out))


def ps_integrate(a: FormalPowerSeries) -> FormalPowerSeries:
    """Antiderivative with zero constant term; valid one order higher than a."""
    return FormalPowerSeries((Fraction(0),) + tuple(c / (n + 1) for n, c in enumerate(a.coefficients)))


def ps_derivative(a: FormalPowerSeries) -> FormalPowerSeries:
    if a.order == 0:
        raise ValueError("derivative of an order-0 truncation carries no information")
    return FormalPowerSeries(tuple(n * c for n, c in enumerate(a.coefficients) if n > 0))


def ps_exp(a: FormalPowerSeries) -> FormalPowerSeries:
    """exp(a) from n*b_n = sum_{j=1..n} j*a_j*b_{n-j}, which is exp' = a'*exp."""
    A = a.coefficients
    if A[0] != 0:
        raise NonzeroConstantTerm("exp needs a zero constant term to stay rational")
    nz = [(j, j * A[j]) for j in range(1, len(A)) if A[j]]
    out = [Fraction(1)]
    for n in range(1, len(A)):
        s = sum((ja * out[n - j] for j, ja in nz if j <= n), Fraction(0))
        out.append(s / n)
    return FormalPowerSeries(tuple(out))


def x(order: int) -> FormalPowerSeries:
    return FormalPowerSeries.monomial(1, order)
