"""Succession count versus Poisson(1): TV distance and moments per n."""
import argparse

from permpat.stochastic import RandomSource, succession_poisson_check

parser = argparse.ArgumentParser(description=__doc__)
parser.add_argument("--n", default="4,6,8,10")
parser.add_argument("--mode", choices=["exact", "monte-carlo"], default="exact")
parser.add_argument("--trials", type=int, default=100_000)
parser.add_argument("--seed", type=int, default=0)
args = parser.parse_args()

rep = succession_poisson_check([int(v) for v in args.n.split(",")], args.mode, args.trials, RandomSource(args.seed))
print("n,method,tv_distance,m1,m2,m3,m4")
for row in rep["rows"]:
    print(",".join([str(row["n"]), row["method"], f"{row['tv_distance']:.6f}"] + [f"{m:.6f}" for m in row["moments"]]))
print(f"# Bell numbers: {rep['rows'][0]['bell']}")
print(f"# tv decreasing: {rep['tv_decreasing']}, moments approach Bell: {rep['moments_approach_bell']}")
