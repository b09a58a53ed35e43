"""Largest interval sums: the diameter of the prefix walk."""
import math

import numpy as np

from pvlab import legendre_character, max_interval_sum, partial_sum, prefix_walk, pv_constant, primitive_characters

chi = legendre_character(7)
print("walk mod 7:", prefix_walk(chi).points.real)
print("S(chi, 0, 3) =", partial_sum(chi, 0, 3).value)
best = max_interval_sum(chi)
print("max |S| =", best.abs, "on", (best.M, best.M + best.N))

# a complex character: the walk is a planar curve and the maximum is its diameter
chi = primitive_characters(101)[5]
walk = prefix_walk(chi).points
best = max_interval_sum(chi)
i, j = best.M, (best.M + best.N) % 101
print(chi.name, "order", chi.order, "max |S| =", round(best.abs, 4))
print("same as |P(t) - P(s)|:", round(abs(walk[j] - walk[i]), 4))

# the empirical Polya-Vinogradov constant, well below 1 at this size
consts = [pv_constant(c) for c in primitive_characters(997)[::25]]
print("max |S| / (sqrt q log q) over a sample mod 997:", round(max(consts), 4))
print("sqrt(q) log(q) =", round(math.sqrt(997) * math.log(997), 1), "mean ratio", round(np.mean(consts), 4))
