"""One descent direction: the target point d, the multiplier and the step.

Run: python3 demos/03_descent_direction.py
"""

import numpy as np

from stcut import BarrierConfig, direction, generate_random, h_gradient, residual
from stcut.oracle import bisect_root

problem = generate_random(6, seed=1)
cfg = BarrierConfig()
beta = 2.0

rng = np.random.default_rng(0)
x = rng.uniform(-0.5, 0.5, problem.n)
x[problem.t] = -x[problem.s]

res = direction(problem, cfg, x, beta)
print("x    ", np.round(x, 4))
print("d    ", np.round(res.d, 4))
print("d_s + d_t =", res.d[problem.s] + res.d[problem.t])

# the multiplier is the unique root of d_s + d_t; bisection finds the same one
root = bisect_root(lambda lam: residual(problem, cfg, x, lam, beta), -1e3, 1e3)
print("lambda closed form %.12f, bisection %.12f" % (res.lam, root))

# each coordinate of the step opposes the Lagrangian gradient, so it descends h
print("sign(d - x) == -sign(grad L):", bool(np.all(np.sign(res.step) == -np.sign(res.grad_L))))
print("grad h . (d - x) = %.4f" % (h_gradient(problem, cfg, x, beta) @ res.step))
