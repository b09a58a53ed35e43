"""The trapezoid smoothing window, its discrete Fourier transform and l1 norm.

The window is 1 on the plateau ``[M+1, M+N-1]`` and ramps linearly to 0 over
``K`` steps on each side.  Ramps are half-open: the left ramp covers
``[M+1-K, M+1)`` and the right ramp ``(M+N-1, M+N-1+K]``, so the three pieces
partition the support and ``sum_x f(x) = N + K - 2``.

Equivalently ``f = (1/K) * (box of length N+K-2 starting at M+2-K) conv
(box of length K)``, which gives the exact product form

    fhat(a) = e_q((M-K+2)a) (1 - e_q((N+K-2)a)) (1 - e_q(Ka)) / (K (1 - e_q(a))^2).

Fourier transforms use ``fhat(a) = sum_x f(x) e_q(a x)`` (positive exponent).
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .charsum import partial_sum
from .dirichlet import DirichletCharacter, roots_of_unity
from .errors import DegenerateRamp, PrincipalCharacter, SupportTooWide, WindowError, ZeroFrequency
from .modarith import factorize


@dataclass(frozen=True)
class TrapezoidWindow:
    q: int
    M: int
    N: int
    K: int

    @property
    def mass(self) -> int:
        return self.N + self.K - 2

    @property
    def support(self) -> np.ndarray:
        """Integers x (not reduced mod q) where f(x) > 0, left to right."""
        return np.arange(self.M + 2 - self.K, self.M + self.N - 1 + self.K)


def make_window(q: int, M: int, N: int, K: int) -> TrapezoidWindow:
    if K < 1:
        raise DegenerateRamp(f"ramp length K={K} must be >= 1")
    if N < 2:
        raise WindowError(f"plateau parameter N={N} must be >= 2")
    if N + 2 * K >= q:
        raise SupportTooWide(f"N + 2K = {N + 2 * K} must be < q = {q}")
    return TrapezoidWindow(q, M, N, K)


def default_ramp(q: int, epsilon: float = 0.05) -> int:
    """K = floor(q^(1 - c - epsilon)) with c = 1/4 for cubefree q, 1/3 otherwise."""
    c = 0.25 if factorize(q).cubefree else 1 / 3
    return math.floor(q ** (1 - c - epsilon))


def eval_window(w: TrapezoidWindow, x: int) -> float:
    y = (x - (w.M + 1 - w.K)) % w.q
    top = w.N - 2 + 2 * w.K
    if y < w.K:
        return y / w.K
    if y <= w.K + w.N - 2:
        return 1.0
    if y <= top:
        return (top - y) / w.K
    return 0.0


def window_samples(w: TrapezoidWindow) -> np.ndarray:
    """f(x) for x = 0..q-1."""
    y = (np.arange(w.q) - (w.M + 1 - w.K)) % w.q
    top = w.N - 2 + 2 * w.K
    return np.select(
        [y < w.K, y <= w.K + w.N - 2, y <= top],
        [y / w.K, 1.0, (top - y) / w.K],
        0.0,
    )


def fourier_dft(w: TrapezoidWindow) -> np.ndarray:
    """fhat(a) for a = 0..q-1 by direct summation over the support (reference)."""
    q = w.q
    e = roots_of_unity(q)[:q]
    x = w.support
    fx = np.array([eval_window(w, int(v)) for v in x])
    xr = x % q
    out = np.empty(q, dtype=complex)
    step = max(1, 2**22 // max(1, len(x)))
    for lo in range(0, q, step):
        a = np.arange(lo, min(q, lo + step))
        out[lo : lo + len(a)] = (e[np.outer(a, xr) % q] * fx).sum(axis=1)
    return out


def _freqs(w: TrapezoidWindow, a) -> np.ndarray:
    a = np.asarray(a, dtype=np.int64) % w.q
    if np.any(a == 0):
        raise ZeroFrequency("closed form is for a != 0 mod q")
    return a


def _ramp_geometric(e: np.ndarray, q: int, a: np.ndarray, K: int) -> np.ndarray:
    """sum_{j=0}^{K-1} j e_q(a j) for a != 0 mod q."""
    w = e[a]
    return w * (1 - K * e[(a * (K - 1)) % q] + (K - 1) * e[(a * K) % q]) / (1 - w) ** 2


def fourier_closed_form(w: TrapezoidWindow, a):
    """Plateau plus left-ramp plus right-ramp geometric sums at frequency a != 0."""
    q, M, N, K = w.q, w.M, w.N, w.K
    aa = _freqs(w, a)
    e = roots_of_unity(q)[:q]
    z = e[aa]
    s1 = e[(aa * ((M + 1) % q)) % q] * (1 - e[(aa * (N - 1)) % q]) / (1 - z)
    s2 = e[(aa * ((M + 1 - K) % q)) % q] * _ramp_geometric(e, q, aa, K) / K
    s3 = e[(aa * ((M + N - 1 + K) % q)) % q] * _ramp_geometric(e, q, (-aa) % q, K) / K
    out = s1 + s2 + s3
    return complex(out) if np.ndim(a) == 0 else out


def fourier_product_form(w: TrapezoidWindow, a):
    q, M, N, K = w.q, w.M, w.N, w.K
    aa = _freqs(w, a)
    e = roots_of_unity(q)[:q]
    L = N + K - 2
    out = (
        e[(aa * ((M - K + 2) % q)) % q]
        * (1 - e[(aa * L) % q])
        * (1 - e[(aa * K) % q])
        / (K * (1 - e[aa]) ** 2)
    )
    return complex(out) if np.ndim(a) == 0 else out


def _abs_sin_ratio(q: int, a: np.ndarray, m: int) -> np.ndarray:
    """|sin(pi m a / q)| with the argument reduced mod q first."""
    return np.abs(np.sin(np.pi * ((a * m) % q) / q))


def fourier_magnitude(w: TrapezoidWindow) -> np.ndarray:
    """|fhat(a)| for a = 0..q-1 from the sine-product form of the closed form."""
    q = w.q
    a = np.arange(1, q, dtype=np.int64)
    s = np.sin(np.pi * a / q)
    mag = _abs_sin_ratio(q, a, w.mass) * _abs_sin_ratio(q, a, w.K) / (w.K * s * s)
    return np.concatenate([[float(w.mass)], mag])


@dataclass(frozen=True)
class SpectrumSummary:
    window: TrapezoidWindow
    l1: float
    bound: float

    @property
    def ratio(self) -> float:
        return self.l1 / self.bound

    def csv_row(self) -> list:
        w = self.window
        return [w.q, w.M, w.N, w.K, self.l1, self.bound, self.ratio]


SPECTRUM_CSV_HEADER = ["q", "M", "N", "K", "l1", "bound", "ratio"]


def l1_bound(q: int, K: int) -> float:
    return 4 * q / math.pi**2 * math.log(q / K)


def l1_norm(w: TrapezoidWindow) -> SpectrumSummary:
    """sum_{a mod q} |fhat(a)| against (4q/pi^2) log(q/K)."""
    bound = l1_bound(w.q, w.K)
    if bound <= 0:
        raise WindowError("bound (4q/pi^2) log(q/K) must be positive")
    return SpectrumSummary(w, float(np.sum(fourier_magnitude(w))), bound)


def sharp_cutoff_l1(q: int, M: int, N: int) -> float:
    """l1 norm of the Fourier transform of the indicator of (M, M+N]."""
    if not 0 < N < q:
        raise ValueError("need 0 < N < q")
    a = np.arange(1, q, dtype=np.int64)
    mag = _abs_sin_ratio(q, a, N) / np.sin(np.pi * a / q)
    return float(N + np.sum(mag))


def pom_sine_sum(x: float, n: int) -> float:
    """sum_{j=1}^{n} |sin(j x)| / j."""
    if n < 1:
        raise ValueError("n must be >= 1")
    j = np.arange(1, n + 1)
    return float(np.sum(np.abs(np.sin(j * x)) / j))


def pom_sine_sums(n: int, grid: int) -> np.ndarray:
    """pom_sine_sum(pi k / grid, n) for k = 0..grid-1, all at once."""
    x = np.pi * np.arange(grid) / grid
    acc = np.zeros(grid)
    block = max(1, 2**20 // grid)
    for lo in range(1, n + 1, block):
        j = np.arange(lo, min(n, lo + block - 1) + 1)[:, None]
        acc += (np.abs(np.sin(j * x)) / j).sum(axis=0)
    return acc


def pom_gap(n: int, grid: int = 10_000) -> float:
    """max over x = pi k / grid of pom_sine_sum(x, n) - (2/pi) log n.

    |sin| is pi-periodic and even, so [0, pi) covers every real x up to the
    grid resolution.
    """
    if grid < 1000:
        raise ValueError("grid must be >= 1000")
    if n < 1:
        raise ValueError("n must be >= 1")
    return float(pom_sine_sums(n, grid).max() - 2 / math.pi * math.log(n))


class SmoothingCheck(NamedTuple):
    S: complex
    smoothed: complex
    left_edge: complex
    right_edge: complex
    residual: float


def smoothing_decomposition_check(chi: DirichletCharacter, w: TrapezoidWindow) -> SmoothingCheck:
    """S = sum_n f(n) chi(n) - left ramp - right ramp, for S over M < n < M + N."""
    if chi.q != w.q:
        raise ValueError("character and window moduli differ")
    if chi.is_principal:
        raise PrincipalCharacter("decomposition check needs a non-principal character")
    q, M, N, K = w.q, w.M, w.N, w.K
    vals = chi.values()
    S = partial_sum(chi, M, N - 1).value
    smoothed = complex(np.sum(window_samples(w) * vals))
    j = np.arange(K)
    left = complex(np.sum(j / K * vals[(M + 1 - K + j) % q]))
    right = complex(np.sum(j / K * vals[(M + N - 1 + K - j) % q]))
    return SmoothingCheck(S, smoothed, left, right, abs(S - smoothed + left + right))
