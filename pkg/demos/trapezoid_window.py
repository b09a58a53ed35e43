"""The trapezoid window: closed-form spectrum and why its l1 norm is small."""
import math

import numpy as np

from pvlab import fit_l1_model, l1_norm, make_window
from pvlab.window import fourier_closed_form, fourier_dft, sharp_cutoff_l1, window_samples

w = make_window(q=64, M=3, N=20, K=4)
f = window_samples(w)
print("support", w.support[[0, -1]], "mass", w.mass, "=", f.sum())

a = np.arange(1, 64)
err = np.abs(fourier_closed_form(w, a) - fourier_dft(w)[1:]).max()
print("closed form vs direct DFT:", err)

# ramps cost a little mass but cut the spectrum's tail
for q in (10**3, 10**4, 10**5):
    K, N = math.floor(q**0.7), q // 3
    s = l1_norm(make_window(q, 0, N, K))
    print(f"q={q:>6}  trapezoid {s.l1:10.1f}  sharp {sharp_cutoff_l1(q, 0, N):10.1f}  l1/bound {s.ratio:.4f}")

rows = [l1_norm(make_window(2**e, 0, 2**e // 3, math.floor((2**e) ** 0.7))) for e in range(10, 18)]
A, B, rms = fit_l1_model(rows)
print(f"l1 ~ A q log(q/K) + B q:  A={A:.4f} (4/pi^2={4 / math.pi**2:.4f})  B={B:.4f}")
