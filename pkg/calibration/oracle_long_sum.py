"""Pre-build oracle: max_M |S(chi, M, N)| / sqrt(q) over all primitive chi mod prime q.

Window sums come from circular convolution (FFT) of the character values
with a length-N box, not from prefix-sum differences.
"""
import math
import sys

import numpy as np


def primes(lo, hi):
    return [p for p in range(lo, hi + 1) if p > 1 and all(p % d for d in range(2, math.isqrt(p) + 1))]


def primitive_root(p):
    phi = p - 1
    fs = [d for d in range(2, phi + 1) if phi % d == 0 and all(d % e for e in range(2, math.isqrt(d) + 1))]
    for g in range(2, p):
        if all(pow(g, phi // f, p) != 1 for f in fs):
            return g


def window_maxima(p, eps):
    N = math.floor(p ** (1 - 0.25 - eps))
    g = primitive_root(p)
    dlog = np.zeros(p, dtype=np.int64)
    x = 1
    for d in range(p - 1):
        dlog[x] = d
        x = x * g % p
    j = np.arange(1, p - 1)[:, None]
    vals = np.exp(2j * np.pi * (j * dlog[None, :] % (p - 1)) / (p - 1))
    vals[:, 0] = 0
    box = np.zeros(p)
    box[(-np.arange(1, N + 1)) % p] = 1.0
    # sum_{n=M+1}^{M+N} chi(n) = (chi * box)(M) with box supported on -1..-N
    conv = np.fft.ifft(np.fft.fft(vals, axis=1) * np.fft.fft(box)[None, :], axis=1)
    return N, np.abs(conv).max(axis=1) / math.sqrt(p)


def main(lo=501, hi=3000, eps=0.05):
    allv = []
    worst = (0, None)
    for p in primes(lo, hi):
        N, m = window_maxima(p, eps)
        allv.append(m)
        if m.max() > worst[0]:
            worst = (float(m.max()), p)
    v = np.concatenate(allv)
    print(f"characters={v.size} max={v.max():.6f} at q={worst[1]} mean={v.mean():.6f}")
    print("quantiles 50/90/99/99.9:", *(f"{x:.6f}" for x in np.quantile(v, [0.5, 0.9, 0.99, 0.999])))


if __name__ == "__main__":
    main(*map(int, sys.argv[1:3])) if len(sys.argv) > 2 else main()
