"""Print S_n(q) for 1342, 1234, 1324 by brute force and by formula where one exists."""
import argparse

from permpat.counts import count
from permpat.errors import NoFormula

parser = argparse.ArgumentParser(description=__doc__)
parser.add_argument("--n-max", type=int, default=8)
args = parser.parse_args()

print("n,pattern,brute,formula")
for q in ("1342", "1234", "1324"):
    for n in range(1, args.n_max + 1):
        brute = count(n, q, "classic", "brute").count
        try:
            formula = count(n, q, "classic", "formula").count
        except NoFormula:
            formula = ""
        print(f"{n},{q},{brute},{formula}")
