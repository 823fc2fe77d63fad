"""Build an instance, write it to the text format, and score a few cuts.

Run: python3 demos/01_graphs_and_cuts.py
"""

import numpy as np

from stcut import Problem, brute_force_cut, cut_value, generate_random, read_problem, write_problem

# a 4-node path 0-1-2-3 with terminals at the ends
W = np.zeros((4, 4))
for i, w in enumerate([3.0, 1.0, 2.0]):
    W[i, i + 1] = W[i + 1, i] = w
path = Problem(W, s=0, t=3)

text = write_problem(path)
print("file form:")
print(text)
assert read_problem(text) == path

# cut value counts each crossing edge once
for a in ([1, -1, -1, -1], [1, 1, -1, -1], [1, -1, 1, -1]):
    print(a, "->", cut_value(path, a))

best = brute_force_cut(path)
print("exact optimum", best.best_cut, "at", best.best_assignment.tolist())

# the random generator: complete graph, integer weights 1..weight_max
g = generate_random(8, seed=3)
print("random n=8: total weight", g.total_weight, "optimum", brute_force_cut(g).best_cut)
