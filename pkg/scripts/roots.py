"""Growth constants of the tight patterns and the roots omega_k of f_k."""
import argparse
import math

from permpat.asymptotics import TightConstant, smallest_positive_root_fk, tight_constant_roots

parser = argparse.ArgumentParser(description=__doc__)
parser.add_argument("--tol", type=float, default=1e-10)
parser.add_argument("--k-max", type=int, default=8)
args = parser.parse_args()

for which in TightConstant:
    r = tight_constant_roots(which, args.tol)
    extra = f"  gamma={r.extra['gamma']:.7f}" if "gamma" in r.extra else ""
    print(f"{which.value}: {r.value:.8f}  z in [{r.bracket[0]:.10f}, {r.bracket[1]:.10f}]{extra}")
print(f"2pi/(3sqrt3) = {2 * math.pi / (3 * math.sqrt(3)):.10f}")
for k in range(3, args.k_max + 1):
    w = smallest_positive_root_fk(k, args.tol).value
    print(f"omega_{k} = {w:.10f}  omega_{k} - 1 = {w - 1:.3e}  1/k! = {1 / math.factorial(k):.3e}")
