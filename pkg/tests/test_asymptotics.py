import math

import pytest
from scipy import optimize, special

from permpat.asymptotics import (
    TightConstant,
    bisect,
    f_k_value,
    growth_sequence,
    ratio_trend,
    smallest_positive_root_fk,
    tight_constant_roots,
    tight_subword_bound,
)
from permpat.counts import catalan, tight_monotone_counts
from permpat.errors import BracketingFailed


def test_growth_123_increases_toward_four():
    g = growth_sequence("123", "classic", 12)
    roots = [r for _, _, r in g.values]
    assert g.values[0] == (1, 1, 1.0)
    assert [c for _, c, _ in g.values] == [catalan(n) for n in range(1, 13)]
    assert all(b > a for a, b in zip(roots, roots[1:]))
    assert roots[-1] < 4
    assert set(g.methods) == {"formula"}


def test_growth_1342_below_eight():
    g = growth_sequence("1342", "classic", 30)
    assert g.values[-1][2] < 8
    assert g.to_dict()["values"][-1]["n"] == 30


def test_tight_growth_uses_factorial_scale():
    g = growth_sequence("123", "tight", 20)
    assert all(0 < r <= 1 + 1e-12 for _, _, r in g.values)


def test_omega3_closed_form():
    r = smallest_positive_root_fk(3, 1e-10)
    assert abs(r.value - 2 * math.pi / (3 * math.sqrt(3))) < 1e-6
    assert abs(f_k_value(3, r.value)) < 1e-8


def test_omega_k_approaches_one():
    gaps = [smallest_positive_root_fk(k, 1e-10).value - 1 for k in range(3, 7)]
    assert all(g > 0 for g in gaps)
    assert all(b < a for a, b in zip(gaps, gaps[1:]))


def test_omega4_is_reciprocal_rho1234():
    w4 = smallest_positive_root_fk(4, 1e-10).value
    rho = tight_constant_roots("rho1234", 1e-10).value
    assert abs(w4 - 1 / rho) < 1e-8


def test_tight_123_counts_scale_like_omega3():
    w = 2 * math.pi / (3 * math.sqrt(3))
    t = tight_monotone_counts(3, 40)
    scaled = [t[n] / math.factorial(n) * w ** n for n in range(10, 41)]
    gaps = [abs(x - scaled[-1]) for x in scaled[:16]]
    assert all(b < a for a, b in zip(gaps, gaps[1:]))
    assert gaps[0] < 2e-4 and 1.5138 < scaled[-1] < 1.5139


def test_rho_1342_and_1234():
    assert abs(tight_constant_roots(TightConstant.RHO1342, 1e-9).value - 0.954611) < 5e-6
    assert abs(tight_constant_roots(TightConstant.RHO1234, 1e-9).value - 0.963005) < 5e-6


def test_roots_against_special_functions():
    # int_0^z exp(-t^3/6) dt = 6^{1/3}/3 * lower_gamma(1/3, z^3/6)
    g3 = lambda z: 6 ** (1 / 3) / 3 * special.gamma(1 / 3) * special.gammainc(1 / 3, z ** 3 / 6) - 1  # noqa: E731
    z1342 = optimize.brentq(g3, 0.5, 2, xtol=1e-14)
    assert abs(tight_constant_roots("rho1342", 1e-11).value - 1 / z1342) < 1e-8
    g2 = lambda z: math.sqrt(math.pi / 2) * special.erf(z / math.sqrt(2)) - 1  # noqa: E731
    z132 = optimize.brentq(g2, 0.5, 3, xtol=1e-14)
    r = tight_constant_roots("rho132", 1e-11)
    assert abs(r.value - 1 / z132) < 1e-8
    assert abs(r.extra["gamma"] - math.exp(z132 ** 2 / 2)) < 1e-7


def test_rho132_exists():
    # the full Gaussian half-integral sqrt(pi/2) exceeds 1, so a root exists
    assert math.sqrt(math.pi / 2) > 1
    r = tight_constant_roots("rho132")
    assert 0.78 < r.value < 0.79


@pytest.mark.parametrize("which", list(TightConstant))
def test_bracket_certifies_root(which):
    tol = 1e-9
    r = tight_constant_roots(which, tol)
    lo, hi = r.bracket
    assert hi - lo <= tol
    assert lo <= r.extra["z"] <= hi
    assert abs(1 / r.value - r.extra["z"]) < 1e-15


@pytest.mark.parametrize("which", list(TightConstant))
def test_halving_tolerance_stable(which):
    a = tight_constant_roots(which, 1e-8).value
    b = tight_constant_roots(which, 5e-9).value
    assert abs(a - b) < 2e-8


def test_bisect_basics():
    r = bisect(lambda x: x * x - 2, 0, 2, 1e-12)
    assert abs(r.value - math.sqrt(2)) < 1e-12 and r.bracket[1] - r.bracket[0] <= 1e-12
    with pytest.raises(BracketingFailed):
        bisect(lambda x: x * x + 1, -1, 1, 1e-6)


def test_bad_arguments():
    with pytest.raises(ValueError):
        smallest_positive_root_fk(2)
    with pytest.raises(ValueError):
        tight_constant_roots("rho1234", 0)


def test_ratio_trend_bound():
    rep = ratio_trend("123", "tight", range(1, 13))
    assert rep["passed"]
    assert tight_subword_bound(3, 3) == 5 / 6
    low = ratio_trend("132", "tight", range(4, 13))["rows"]
    high = ratio_trend("123", "tight", range(4, 13))["rows"]
    assert all(a["count"] < b["count"] for a, b in zip(low, high))
