"""Exact and Monte Carlo experiments on copy-count distributions.

Monte Carlo work is cut into fixed-size units.  Unit u always draws from the
substream ``SeedSequence(seed, spawn_key=(u,))``, and units are combined in
index order, so results do not depend on how many workers ran them.
"""
from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from math import comb, factorial

import numpy as np

from . import batch
from .counts import brute_force_copy_distribution
from .perm import ContainmentKind, Permutation, monotone

UNIT_TRIALS = 1000
ESTIMATOR = "biased sample central moments: var=m2, skew=m3/m2^1.5, excess kurtosis=m4/m2^2-3"


class RandomSource:
    """Seeded PCG64 stream with deterministic substreams."""

    def __init__(self, seed: int = 0):
        self.seed = int(seed) & (2**64 - 1)
        self.rng = np.random.Generator(np.random.PCG64(np.random.SeedSequence(self.seed)))

    def substream(self, index: int) -> np.random.Generator:
        return np.random.Generator(np.random.PCG64(np.random.SeedSequence(self.seed, spawn_key=(index,))))


def sample_uniform(n: int, src: RandomSource) -> Permutation:
    """Uniform n-permutation (Fisher-Yates shuffle); advances src."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return Permutation(tuple((src.rng.permutation(n) + 1).tolist()))


def sample_rows(n: int, rows: int, rng: np.random.Generator) -> np.ndarray:
    """``rows`` independent uniform n-permutations, one per row."""
    dtype = np.int8 if n < 127 else np.int16
    base = np.broadcast_to(np.arange(1, n + 1, dtype=dtype), (rows, n))
    return rng.permuted(base, axis=1)


def _moments(x: np.ndarray) -> tuple[float, float, float, float]:
    x = np.asarray(x, dtype=np.float64)
    mean = x.mean()
    d = x - mean
    m2 = float(np.mean(d * d))
    m3 = float(np.mean(d ** 3))
    m4 = float(np.mean(d ** 4))
    skew = m3 / m2 ** 1.5 if m2 > 0 else 0.0
    kurt = m4 / m2 ** 2 - 3.0 if m2 > 0 else 0.0
    return float(mean), m2, skew, kurt


@dataclass
class SampleSummary:
    n: int
    k: int
    kind: ContainmentKind
    trials: int
    mean: float
    variance: float
    skewness: float
    excess_kurtosis: float
    seed: int
    mean_se: float
    skewness_se: float
    estimator: str = ESTIMATOR
    counts: np.ndarray | None = field(default=None, repr=False, compare=False)

    def to_dict(self) -> dict:
        d = asdict(self)
        d.pop("counts")
        d["kind"] = self.kind.value
        d["method"] = "monte-carlo"
        return d


def copy_counts(n: int, q, kind: ContainmentKind | str, trials: int, src: RandomSource,
                workers: int = 1) -> np.ndarray:
    """Occurrence counts of q in ``trials`` uniform n-permutations, in unit order."""
    kind = ContainmentKind.parse(kind)
    units = [(u, min(UNIT_TRIALS, trials - u * UNIT_TRIALS)) for u in range(math.ceil(trials / UNIT_TRIALS))]

    def run(unit):
        u, size = unit
        return batch.count_occurrences_rows(sample_rows(n, size, src.substream(u)), q, kind)

    if workers > 1:
        with ThreadPoolExecutor(workers) as pool:
            parts = list(pool.map(run, units))
    else:
        parts = [run(unit) for unit in units]
    return np.concatenate(parts)


def _unit_skew_se(counts: np.ndarray) -> float:
    units = [counts[i:i + UNIT_TRIALS] for i in range(0, len(counts), UNIT_TRIALS)]
    units = [c for c in units if len(c) == UNIT_TRIALS]
    if len(units) < 2:
        return float("nan")
    skews = [_moments(c)[2] for c in units]
    return float(np.std(skews, ddof=1) / math.sqrt(len(skews)))


def copy_count_experiment(n: int, k: int, kind: ContainmentKind | str, trials: int,
                          src: RandomSource, workers: int = 1, keep_counts: bool = False) -> SampleSummary:
    """Moments of the number of copies of 12...k over random n-permutations.

    The skewness standard error is the batch-means estimate over units of
    ``UNIT_TRIALS`` trials.
    """
    kind = ContainmentKind.parse(kind)
    if not n >= k >= 2:
        raise ValueError("need n >= k >= 2")
    if trials < 1:
        raise ValueError("trials must be >= 1")
    counts = copy_counts(n, monotone(k), kind, trials, src, workers)
    mean, var, skew, kurt = _moments(counts)
    return SampleSummary(n, k, kind, trials, mean, var, skew, kurt, src.seed,
                         mean_se=math.sqrt(var / trials), skewness_se=_unit_skew_se(counts),
                         counts=counts if keep_counts else None)


def expected_copies(n: int, k: int, kind: ContainmentKind | str) -> Fraction:
    kind = ContainmentKind.parse(kind)
    if not n >= k >= 1:
        raise ValueError("need n >= k >= 1")
    if kind is ContainmentKind.CLASSIC:
        return Fraction(comb(n, k), factorial(k))
    if kind is ContainmentKind.TIGHT:
        return Fraction(n - k + 1, factorial(k))
    return Fraction((n - k + 1) ** 2, comb(n, k) * factorial(k))


def distribution_moment(dist: dict[int, int], j: int) -> Fraction:
    total = sum(dist.values())
    return Fraction(sum(t ** j * c for t, c in dist.items()), total)


def distribution_variance(dist: dict[int, int]) -> Fraction:
    return distribution_moment(dist, 2) - distribution_moment(dist, 1) ** 2


def variance_growth_check(k: int, kind: ContainmentKind | str, n_values, mode: str = "exact",
                          trials: int = 10_000, src: RandomSource | None = None) -> dict:
    """Var(X_n) scaled by n^{2k-1} (classic) or n (tight); all ratios must stay positive."""
    kind = ContainmentKind.parse(kind)
    if kind is ContainmentKind.VERY_TIGHT:
        raise ValueError("variance growth is only stated for classic and tight copies")
    exponent = 2 * k - 1 if kind is ContainmentKind.CLASSIC else 1
    rows = []
    for n in n_values:
        if mode == "exact":
            var = float(distribution_variance(brute_force_copy_distribution(n, monotone(k), kind)))
        else:
            var = copy_count_experiment(n, k, kind, trials, src or RandomSource()).variance
        rows.append({"n": n, "variance": var, "ratio": var / n ** exponent})
    low = min(r["ratio"] for r in rows)
    return {"k": k, "kind": kind.value, "mode": mode, "scale": f"n^{exponent}",
            "rows": rows, "min_ratio": low, "passed": low > 0}


def vandermonde_identity_check(k: int) -> bool:
    if k < 1:
        raise ValueError("k must be >= 1")
    lhs = sum(comb(a + b - 2, a - 1) * comb(2 * k - a - b, k - a)
              for a in range(1, k + 1) for b in range(1, k + 1))
    return lhs == (2 * k - 1) * comb(2 * k - 2, k - 1)


def bell_number(j: int) -> int:
    """Bell number from the Bell triangle."""
    if j < 0:
        raise ValueError("j must be >= 0")
    row = [1]
    for _ in range(j):
        nxt = [row[-1]]
        for v in row:
            nxt.append(nxt[-1] + v)
        row = nxt
    return row[0]


def dobinski(j: int, terms: int = 60) -> float:
    """e^{-1} sum_t t^j / t!, the j-th moment of Poisson(1)."""
    return math.exp(-1) * sum(t ** j / math.factorial(t) for t in range(terms))


def poisson_pmf(t: int, lam: float = 1.0) -> float:
    return math.exp(-lam) * lam ** t / math.factorial(t)


def tv_to_poisson(probs: dict[int, float]) -> float:
    """Total variation distance to Poisson(1), tail mass included."""
    support = max(probs, default=0)
    covered = sum(poisson_pmf(t) for t in range(support + 1))
    inside = sum(abs(probs.get(t, 0.0) - poisson_pmf(t)) for t in range(support + 1))
    return 0.5 * (inside + (1.0 - covered))


def succession_poisson_check(n_values, mode: str = "exact", trials: int = 100_000,
                             src: RandomSource | None = None, max_moment: int = 4) -> dict:
    """Compare the succession count (very tight copies of 12) with Poisson(1)."""
    rows = []
    for n in n_values:
        if mode == "exact":
            dist = brute_force_copy_distribution(n, "12", ContainmentKind.VERY_TIGHT)
            total = factorial(n)
            moments = [distribution_moment(dist, j) for j in range(1, max_moment + 1)]
            method = "brute"
        else:
            counts = copy_counts(n, "12", ContainmentKind.VERY_TIGHT, trials, src or RandomSource())
            values, freq = np.unique(counts, return_counts=True)
            dist = dict(zip(values.tolist(), freq.tolist()))
            total = trials
            moments = [float(np.mean(counts.astype(np.float64) ** j)) for j in range(1, max_moment + 1)]
            method = "monte-carlo"
        probs = {t: c / total for t, c in dist.items()}
        rows.append({
            "n": n,
            "method": method,
            "distribution": dist,
            "tv_distance": tv_to_poisson(probs),
            "moments": [float(m) for m in moments],
            "exact_moments": [str(m) for m in moments] if mode == "exact" else None,
            "bell": [bell_number(j) for j in range(1, max_moment + 1)],
        })
    tv = [r["tv_distance"] for r in rows]
    gaps = [[abs(r["moments"][j] - r["bell"][j]) for r in rows] for j in range(max_moment)]
    return {
        "mode": mode,
        "rows": rows,
        "tv_decreasing": all(b < a for a, b in zip(tv, tv[1:])),
        "moments_approach_bell": all(all(b < a for a, b in zip(g, g[1:])) for g in gaps),
    }
