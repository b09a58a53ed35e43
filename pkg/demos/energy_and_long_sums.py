"""Counting bounds at desk scale: congruence energy, Burgess sums, long sums."""
import numpy as np

from pvlab import burgess_complete_sum, congruence_energy, legendre_character, long_sum_ratios, theorem_check
from pvlab.bounds import congruence_energy_bruteforce

e = congruence_energy(1009, 0, 10, 5)
print("energy", e.count, "brute", congruence_energy_bruteforce(1009, 0, 10, 5), "normalized", round(e.normalized, 4))

for V in (1, 2, 3):
    b = burgess_complete_sum(legendre_character(101), V)
    print(f"V={V}  sum {b.value:10.2f}  / (sqrt q V^4) = {b.normalized:.4f}")

# long sums stay O(sqrt q) across all primitive characters
for q in (1009, 2003, 2999):
    r = np.array(list(long_sum_ratios(q, 0.05).values()))
    print(f"q={q}  max {r.max():.4f}  mean {r.mean():.4f}")

print("theorem ratio, Legendre mod 7:", round(theorem_check(legendre_character(7)).value, 3))
