"""Monte Carlo skewness of the number of classic copies of 12...k as n grows."""
import argparse

from permpat.stochastic import RandomSource, copy_count_experiment

parser = argparse.ArgumentParser(description=__doc__)
parser.add_argument("--n", default="25,50,100")
parser.add_argument("--k", type=int, default=3)
parser.add_argument("--kind", default="classic")
parser.add_argument("--trials", type=int, default=100_000)
parser.add_argument("--seed", type=int, default=42)
parser.add_argument("--workers", type=int, default=1)
args = parser.parse_args()

print("n,mean,variance,skewness,skewness_se,excess_kurtosis")
for i, n in enumerate(int(v) for v in args.n.split(",")):
    s = copy_count_experiment(n, args.k, args.kind, args.trials, RandomSource(args.seed + i), args.workers)
    print(f"{n},{s.mean:.4f},{s.variance:.4f},{s.skewness:.5f},{s.skewness_se:.5f},{s.excess_kurtosis:.5f}")
