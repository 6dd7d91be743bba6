from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import binom_general, convolve, naive_avoiders
from permpat.counts import egf_to_counts, f_k_series
from permpat.errors import NonzeroConstantTerm, ZeroConstantTerm
from permpat.series import (
    FormalPowerSeries as FPS,
    Op,
    ps_arith,
    ps_binomial_power,
    ps_derivative,
    ps_exp,
    ps_integrate,
    ps_reciprocal,
)

fractions = st.fractions(min_value=-20, max_value=20, max_denominator=12)


@st.composite
def series(draw, order=None, invertible=False):
    N = draw(st.integers(0, 8)) if order is None else order
    coeffs = draw(st.lists(fractions, min_size=N + 1, max_size=N + 1))
    if invertible and coeffs[0] == 0:
        coeffs[0] = Fraction(1)
    return FPS(tuple(coeffs))


def test_order_and_padding():
    s = FPS.from_coefficients([1, 2], 5)
    assert s.order == 5 and s.coefficients[2:] == (0, 0, 0, 0)
    with pytest.raises(IndexError):
        s[6]


def test_one_plus_x_times_one_minus_x():
    a = FPS.from_coefficients([1, 1], 6)
    b = FPS.from_coefficients([1, -1], 6)
    assert ps_arith(a, b, Op.MUL) == FPS.from_coefficients([1, 0, -1], 6)


def test_orders_take_minimum():
    a = FPS.from_coefficients([1, 1], 6)
    b = FPS.from_coefficients([1, 1], 3)
    assert (a + b).order == 3 and (a * b).order == 3


@given(series())
def test_additive_identity(a):
    assert a + FPS.constant(0, a.order) == a


@given(st.integers(0, 8).flatmap(lambda N: st.tuples(series(N), series(N))))
def test_mul_is_convolution(ab):
    a, b = ab
    assert list((a * b).coefficients) == convolve(a.coefficients, b.coefficients, a.order)


@given(st.integers(0, 6).flatmap(lambda N: st.tuples(series(N), series(N), series(N))))
def test_ring_axioms(abc):
    a, b, c = abc
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == FPS.constant(0, a.order)


def test_geometric_reciprocal():
    assert ps_reciprocal(FPS.from_coefficients([1, -1], 10)) == FPS.from_coefficients([1] * 11, 10)


@given(series(invertible=True))
def test_reciprocal_multiplies_back(a):
    assert a * ps_reciprocal(a) == FPS.constant(1, a.order)


def test_reciprocal_zero_constant():
    with pytest.raises(ZeroConstantTerm):
        ps_reciprocal(FPS.from_coefficients([0, 1], 4))


def test_reciprocal_f3_gives_tight_123_count():
    r = ps_reciprocal(f_k_series(3, 6))
    assert r[3] == Fraction(5, 6)
    assert r[3] * factorial(3) == naive_avoiders(3, (1, 2, 3), "tight")


def test_binomial_power_three_halves():
    s = ps_binomial_power(-8, Fraction(3, 2), 6)
    assert s.coefficients[:4] == (1, -12, 24, 32)
    assert list(s.coefficients) == [binom_general(Fraction(3, 2), j) * (-8) ** j for j in range(7)]


@given(fractions, st.integers(0, 6))
def test_binomial_power_trivial_exponents(c, N):
    assert ps_binomial_power(c, 1, N) == FPS.from_coefficients([1, c], N)
    assert ps_binomial_power(c, 0, N) == FPS.constant(1, N)


@given(fractions, st.integers(1, 4), st.integers(0, 6))
def test_binomial_power_integer_matches_repeated_product(c, m, N):
    base = FPS.from_coefficients([1, c], N)
    assert ps_binomial_power(c, m, N) == base ** m


def test_integrate():
    assert ps_integrate(FPS.constant(1, 3)) == FPS.from_coefficients([0, 1], 4)
    gauss = ps_exp(FPS.monomial(2, 6, Fraction(-1, 2)))
    integral = ps_integrate(gauss)
    # termwise division of exp(-t^2/2) = sum (-1/2)^j t^{2j} / j!
    expected = [0] * 8
    for j in range(4):
        expected[2 * j + 1] = Fraction((-1) ** j, 2 ** j * factorial(j) * (2 * j + 1))
    assert list(integral.coefficients) == expected
    assert integral.coefficients[:6] == (0, 1, 0, Fraction(-1, 6), 0, Fraction(1, 40))


@given(series())
def test_derivative_inverts_integrate(a):
    assert ps_derivative(ps_integrate(a)) == a


def test_exp_basics():
    assert ps_exp(FPS.constant(0, 5)) == FPS.constant(1, 5)
    assert list(ps_exp(FPS.monomial(1, 8)).coefficients) == [Fraction(1, factorial(n)) for n in range(9)]
    assert ps_exp(FPS.monomial(2, 6, Fraction(-1, 2)))[4] == Fraction(1, 8)
    with pytest.raises(NonzeroConstantTerm):
        ps_exp(FPS.constant(1, 3))


@given(st.integers(0, 5).flatmap(lambda N: st.tuples(series(N), series(N))))
def test_exp_of_sum_is_product(ab):
    a, b = ab
    a = FPS((Fraction(0),) + a.coefficients[1:])
    b = FPS((Fraction(0),) + b.coefficients[1:])
    assert ps_exp(a + b) == ps_exp(a) * ps_exp(b)


def test_str_and_csv():
    s = FPS.from_coefficients([1, Fraction(-1, 2), 0, 3], 3)
    assert str(s) == "1 + -1/2*x + 3*x^3 + O(x^4)"
    assert s.csv_rows()[1] == (1, -1, 2)


def test_egf_counts_are_integers():
    assert egf_to_counts(ps_reciprocal(f_k_series(4, 12)))[:5] == [1, 1, 2, 6, 23]
