"""n-th roots S_n(q)^(1/n) for every pattern of length 3 and 4, as CSV."""
import argparse

from permpat.asymptotics import growth_sequence
from permpat.counts import all_patterns

parser = argparse.ArgumentParser(description=__doc__)
parser.add_argument("--n-max", type=int, default=9)
parser.add_argument("--kind", default="classic")
args = parser.parse_args()

print("pattern,n,count,root,method")
for k in (3, 4):
    for q in all_patterns(k):
        g = growth_sequence(q, args.kind, args.n_max)
        for (n, c, r), m in zip(g.values, g.methods):
            print(f"{q},{n},{c},{r:.6f},{m}")
