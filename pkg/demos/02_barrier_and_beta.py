"""The merged objective h = f + beta*b along a line, and the starting beta.

Run: python3 demos/02_barrier_and_beta.py
"""

import numpy as np

from stcut import BarrierConfig, generate_random, h_value, initial_beta, jacobi_eigenvalues, min_eigenvalue
from stcut.barrier import convexity_matrix

problem = generate_random(10, seed=0)
cfg = BarrierConfig()

# Jacobi agrees with LAPACK
ours = jacobi_eigenvalues(problem.shifted_matrix())
print("min eigenvalue: jacobi %.10f  lapack %.10f" % (ours[0], np.linalg.eigvalsh(problem.shifted_matrix())[0]))

beta0 = initial_beta(problem, cfg)
print("S_min = %.4f -> beta0 = %.4f" % (min_eigenvalue(problem), beta0))
print("convexity matrix min eigenvalue at beta0: %.4f" % jacobi_eigenvalues(convexity_matrix(problem, cfg, beta0))[0])

# h along the direction (1, -1, 1, -1, ...): convex at beta0, double-welled when cold
u = np.where(np.arange(problem.n) % 2, -1.0, 1.0)
for beta in (beta0, 1.0, 0.01):
    ts = np.linspace(-0.99, 0.99, 9)
    vals = [h_value(problem, cfg, t * u, beta) for t in ts]
    print("beta=%-8.3g" % beta, " ".join("%9.2f" % v for v in vals))
