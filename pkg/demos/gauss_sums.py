"""Gauss sums and the Fourier expansion of an interval sum."""
import math

import numpy as np

from pvlab import character, enumerate_characters, gauss_expansion_check, gauss_sum, gauss_sum_table, legendre_character

print("tau(legendre 5) =", gauss_sum(legendre_character(5)), " sqrt 5 =", math.sqrt(5))
print("tau(legendre 7) =", gauss_sum(legendre_character(7)), " i sqrt 7")

# |tau|^2 = q exactly when the character is primitive
q = 36
taus = gauss_sum_table(q)
for chi in enumerate_characters(q):
    print(f"{chi.name:>5}  conductor {chi.conductor:2d}  |tau|^2 = {abs(taus[chi.label]) ** 2:8.4f}")

# an interval sum through the Gauss sum of the conjugate character
chi = character(1013, 17)
chk = gauss_expansion_check(chi, M=200, N=333)
print("lhs", np.round(chk.lhs, 6), "rhs", np.round(chk.rhs, 6), "diff", chk.diff)
