import math
from collections import Counter
from fractions import Fraction
from itertools import permutations
from math import comb, factorial

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.stats import chi2 as chi2_dist

from oracles import chi2, inversions_variance, set_partitions
from permpat.counts import brute_force_copy_distribution
from permpat.perm import Permutation, inversion_count, monotone
from permpat.stochastic import (
    RandomSource,
    bell_number,
    copy_count_experiment,
    copy_counts,
    distribution_moment,
    distribution_variance,
    dobinski,
    expected_copies,
    poisson_pmf,
    sample_rows,
    sample_uniform,
    succession_poisson_check,
    tv_to_poisson,
    vandermonde_identity_check,
    variance_growth_check,
)


def test_single_point_sample():
    assert sample_uniform(1, RandomSource(3)) == Permutation((1,))
    with pytest.raises(ValueError):
        sample_uniform(0, RandomSource(3))


def test_fixed_seed_reproducible():
    a, b = RandomSource(11), RandomSource(11)
    assert [sample_uniform(7, a) for _ in range(10)] == [sample_uniform(7, b) for _ in range(10)]
    c, d = RandomSource(11), RandomSource(12)
    assert [sample_uniform(20, c) for _ in range(5)] != [sample_uniform(20, d) for _ in range(5)]


@pytest.mark.slow
def test_uniformity_chi_square_n4():
    src = RandomSource(2024)
    draws = 1_000_000
    rows = sample_rows(4, draws, src.rng)
    keys = rows.astype(np.int64) @ np.array([1000, 100, 10, 1])
    observed = Counter(keys.tolist())
    assert len(observed) == 24
    stat = chi2(observed.values(), draws / 24)
    assert stat < chi2_dist.ppf(0.999, 23)


def test_sample_rows_are_permutations():
    rows = sample_rows(9, 500, RandomSource(5).rng)
    assert (np.sort(rows, axis=1) == np.arange(1, 10)).all()


@given(st.integers(0, 2**32), st.sampled_from([1, 2, 3]))
@settings(max_examples=10)
def test_results_independent_of_workers(seed, workers):
    base = copy_counts(12, "123", "classic", 2500, RandomSource(seed), workers=1)
    other = copy_counts(12, "123", "classic", 2500, RandomSource(seed), workers=workers)
    assert np.array_equal(base, other)


def test_mean_within_standard_errors():
    n = 20
    s = copy_count_experiment(n, 2, "classic", 100_000, RandomSource(7))
    assert abs(s.mean - comb(n, 2) / 2) <= 4 * s.mean_se
    s3 = copy_count_experiment(8, 3, "classic", 100_000, RandomSource(8))
    assert abs(s3.mean - comb(8, 3) / 6) <= 4 * s3.mean_se
    assert s3.to_dict()["method"] == "monte-carlo" and s3.to_dict()["kind"] == "classic"


def test_experiment_argument_checks():
    with pytest.raises(ValueError):
        copy_count_experiment(2, 3, "classic", 10, RandomSource(0))
    with pytest.raises(ValueError):
        copy_count_experiment(5, 2, "classic", 0, RandomSource(0))


def test_small_exact_means():
    assert expected_copies(8, 3, "tight") == 1
    assert expected_copies(5, 2, "very-tight") == Fraction(4, 5)
    d = brute_force_copy_distribution(4, "12", "very-tight")
    assert Fraction(d[0], 24) == Fraction(11, 24)


@pytest.mark.parametrize("kind", ["classic", "tight", "very-tight"])
def test_exact_means_match_closed_forms(kind):
    for k in range(1, 5):
        for n in range(k, 10):
            dist = brute_force_copy_distribution(n, monotone(k), kind)
            assert distribution_moment(dist, 1) == expected_copies(n, k, kind), (n, k)


def test_inversion_variance():
    for n in range(2, 8):
        d = Counter(inversion_count(p) for p in permutations(range(1, n + 1)))
        assert distribution_variance(dict(d)) == inversions_variance(n)


def test_variance_growth_exact():
    rep = variance_growth_check(2, "tight", range(4, 9))
    assert rep["passed"] and rep["scale"] == "n^1"
    rep = variance_growth_check(3, "classic", [7, 8])
    assert rep["passed"] and rep["min_ratio"] > 0
    with pytest.raises(ValueError):
        variance_growth_check(2, "very-tight", [5])


def test_vandermonde():
    assert vandermonde_identity_check(1)
    assert vandermonde_identity_check(2)
    assert sum(comb(a + b - 2, a - 1) * comb(4 - a - b, 2 - a) for a in (1, 2) for b in (1, 2)) == 6
    assert all(vandermonde_identity_check(k) for k in range(1, 13))
    with pytest.raises(ValueError):
        vandermonde_identity_check(0)


def test_bell_numbers():
    assert [bell_number(j) for j in range(8)] == [set_partitions(j) for j in range(8)]
    for j in range(7):
        assert math.isclose(dobinski(j), bell_number(j), abs_tol=1e-9)


def test_total_variation():
    exact = {t: poisson_pmf(t) for t in range(60)}
    assert tv_to_poisson(exact) < 1e-12
    assert math.isclose(tv_to_poisson({0: 1.0}), 1 - math.exp(-1))


def test_succession_trend_exact():
    rep = succession_poisson_check([4, 6, 8, 10])
    assert rep["tv_decreasing"] and rep["moments_approach_bell"]
    assert rep["rows"][0]["distribution"] == {0: 11, 1: 9, 2: 3, 3: 1}
    # E[successions] = (n-1)/n
    assert all(math.isclose(r["moments"][0], (r["n"] - 1) / r["n"]) for r in rep["rows"])


def test_succession_monte_carlo_close_to_exact():
    exact = succession_poisson_check([8])["rows"][0]["tv_distance"]
    mc = succession_poisson_check([8], mode="monte-carlo", trials=50_000, src=RandomSource(1))["rows"][0]
    assert mc["method"] == "monte-carlo"
    assert abs(mc["tv_distance"] - exact) < 0.02


@pytest.mark.slow
def test_skewness_shrinks():
    stats = [copy_count_experiment(n, 3, "classic", 100_000, RandomSource(42 + i))
             for i, n in enumerate((25, 50, 100))]
    for a, b in zip(stats, stats[1:]):
        assert abs(a.skewness) - abs(b.skewness) > 4 * math.hypot(a.skewness_se, b.skewness_se)


def test_expected_copies_bounds():
    with pytest.raises(ValueError):
        expected_copies(2, 3, "classic")
    assert expected_copies(5, 5, "classic") == Fraction(1, factorial(5))
