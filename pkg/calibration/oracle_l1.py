"""Pre-build oracle: l1 norms of trapezoid and sharp-cutoff spectra via numpy FFT.

Builds each window sample-by-sample from the piecewise definition and never
uses a closed form, so it is independent of pvlab.window.
"""
import math

import numpy as np


def trapezoid(q, M, N, K):
    f = np.zeros(q)
    for x in range(M + 1 - K, M + N + K):
        if M + 1 <= x <= M + N - 1:
            v = 1.0
        elif M + 1 - K <= x < M + 1:
            v = (x - M - 1 + K) / K
        elif M + N - 1 < x <= M + N - 1 + K:
            v = (M + N - 1 + K - x) / K
        else:
            v = 0.0
        f[x % q] += v
    return f


def sharp(q, M, N):
    f = np.zeros(q)
    f[np.arange(M + 1, M + N + 1) % q] = 1.0
    return f


def l1(f):
    return float(np.abs(np.fft.fft(f)).sum())


def main():
    print("# l1 grid: q, K, N, trapezoid_l1, sharp_l1, bound, ratio")
    for q in (10**3, 10**4, 10**5):
        K = math.floor(q**0.7)
        N = q // 3
        t = l1(trapezoid(q, 0, N, K))
        s = l1(sharp(q, 0, N))
        bound = 4 * q / math.pi**2 * math.log(q / K)
        print(f"{q} {K} {N} {t:.6f} {s:.6f} {bound:.6f} {t / bound:.6f}")

    print("# fit over q = 2^10..2^17, K=floor(q^0.7), N=floor(q/3), M=0")
    X, y = [], []
    for e in range(10, 18):
        q = 2**e
        K = math.floor(q**0.7)
        N = q // 3
        t = l1(trapezoid(q, 0, N, K))
        X.append([q * math.log(q / K), q])
        y.append(t)
        print(f"{q} {K} {N} {t:.6f}")
    coef, *_ = np.linalg.lstsq(np.array(X), np.array(y), rcond=None)
    A, B = coef
    resid = np.array(y) - np.array(X) @ coef
    rms = math.sqrt(float(np.mean(resid**2)))
    print(f"A={A:.6f} B={B:.6f} rms={rms:.6f} 4/pi^2={4 / math.pi**2:.6f}")


if __name__ == "__main__":
    main()
