"""Short tour: exact moments, a moment-based estimate and a Monte Carlo check.

Run with ``python3 demos/walkthrough.py``; takes a few seconds.
"""

from dml import moments as M
from dml.densities import crossing_point
from dml.exact import mpq
from dml.reconstruct import CONJECTURES, separability_estimate
from dml.sampler import RngStream, mc_moment, mc_separability_probability

# exact moments of the two-rebit determinant and its partial transpose
for n in range(1, 4):
    print(f"<|rho^PT|^{n}>  = {M.pt_moment('1/2', n)}")
print(f"<|rho|^1 |rho^PT|^1> = {M.bivariate_moment('1/2', 1, 1)}")

# those moments feed a polynomial density estimate of P(|rho^PT| > 0)
for N in (40, 80):
    rec = separability_estimate("1/2", "ptdet", N, precision=40)
    print(f"estimate from {N} moments: {float(rec.estimate):.6f}")
print(f"conjectured value: {float(CONJECTURES[mpq(1, 2)]):.6f}")

# sampling agrees with the exact first moment
s = mc_moment("real", "hs", 1, 0, 100_000, RngStream(1))
print(f"MC <|rho^PT|> = {s.mean:.3e} +- {s.stderr:.1e}, exact {float(M.pt_moment('1/2', 1)):.3e}")

s = mc_separability_probability("real", "hs", 100_000, RngStream(2))
print(f"MC separable fraction = {s.mean:.4f} +- {s.stderr:.4f}")

print(f"HS and Bures determinant densities cross at t = {crossing_point():.5f}")
