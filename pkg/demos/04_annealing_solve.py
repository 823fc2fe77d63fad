"""Full annealing run: watch beta cool and the iterate move to the corners.

Run: python3 demos/04_annealing_solve.py
"""

import numpy as np

from stcut import BarrierConfig, brute_force_cut, generate_random, solve

problem = generate_random(14, seed=7)

# smallest |x_i| at the end of each stage, keyed by beta
spread = {}


def watch(x, beta):
    spread[beta] = float(np.min(np.abs(x)))


report = solve(problem, BarrierConfig(theta=0.8), seed=0, callback=watch)

# stage 0 is convex with its minimum at the origin; it creeps toward 0 and
# usually uses its whole step budget, which is harmless
print("stage      beta  steps        h_end    min|x|")
for k, rec in enumerate(report.trace):
    print("%5d  %8.4g  %5d  %11.3f  %8.4f" % (k, rec.beta, rec.iterations, rec.h_end, spread.get(rec.beta, np.nan)))

opt = brute_force_cut(problem).best_cut
print("cut %.0f, optimum %.0f, ratio %.4f, %d inner steps" % (report.objm, opt, (opt - report.objm) / opt, report.ni))
print("U =", report.solution.partition()[0])
