"""Character sums: interval sums S(chi, M, N), maxima, Gauss sums and twists.

Intervals are half-open, ``M < n <= M + N``.  Logarithms are natural.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple

import numpy as np

from . import geometry
from .dirichlet import DirichletCharacter, basis_for, roots_of_unity
from .errors import EvenModulus, NotPrimitive, PrincipalCharacter


def blocked_cumsum(x: np.ndarray) -> np.ndarray:
    """Cumulative sum along the last axis with O(sqrt(n)) rounding growth.

    Blocks of length ~sqrt(n) are accumulated separately and then offset by
    the running block totals, so no prefix is the result of more than about
    2*sqrt(n) sequential additions.
    """
    x = np.asarray(x)
    n = x.shape[-1]
    if n <= 64:
        return np.cumsum(x, axis=-1)
    b = math.isqrt(n - 1) + 1
    nb = -(-n // b)
    pad = nb * b - n
    lead = x.shape[:-1]
    xp = np.concatenate([x, np.zeros(lead + (pad,), dtype=x.dtype)], axis=-1) if pad else x
    blocks = xp.reshape(lead + (nb, b))
    inner = np.cumsum(blocks, axis=-1)
    offsets = np.cumsum(inner[..., -1], axis=-1)
    offsets = np.concatenate([np.zeros(lead + (1,), dtype=offsets.dtype), offsets[..., :-1]], axis=-1)
    out = (inner + offsets[..., None]).reshape(lead + (nb * b,))
    return out[..., :n]


@dataclass(frozen=True, eq=False)
class PrefixWalk:
    """Points P(t) = sum_{1 <= n <= t} chi(n) for t = 0..q-1.

    ``total`` is the exact full-period sum: 0 for non-principal characters,
    phi(q) for the principal one.
    """

    character: DirichletCharacter
    points: np.ndarray
    total: complex

    @property
    def q(self) -> int:
        return self.character.q

    def at(self, t: int) -> complex:
        a, b = divmod(t, self.q)
        return a * self.total + complex(self.points[b])

    def interval(self, M: int, N: int) -> complex:
        m = M % self.q
        return self.at(m + N) - self.at(m)


@dataclass(frozen=True)
class IntervalSumRecord:
    M: int
    N: int
    value: complex

    @property
    def abs(self) -> float:
        return abs(self.value)

    def to_json(self, chi: DirichletCharacter) -> dict:
        return {
            "q": chi.q,
            "label": chi.label,
            "M": self.M,
            "N": self.N,
            "re": self.value.real,
            "im": self.value.imag,
            "abs": self.abs,
        }


@lru_cache(maxsize=128)
def prefix_walk(chi: DirichletCharacter) -> PrefixWalk:
    vals = chi.values()
    pts = np.zeros(chi.q, dtype=complex)
    if chi.q > 1:
        pts[1:] = blocked_cumsum(vals[1:])
    pts.flags.writeable = False
    total = complex(chi.basis.modulus.phi) if chi.is_principal else 0j
    return PrefixWalk(chi, pts, total)


def partial_sum(chi: DirichletCharacter, M: int, N: int) -> IntervalSumRecord:
    """S(chi, M, N) = sum over M < n <= M + N."""
    if N < 0:
        raise ValueError("N must be nonnegative")
    return IntervalSumRecord(M, N, prefix_walk(chi).interval(M, N))


def _orient(walk: PrefixWalk, s: int, t: int) -> IntervalSumRecord:
    q = walk.q
    N = (t - s) % q
    return IntervalSumRecord(s, N, walk.interval(s, N))


def walk_diameter(points: np.ndarray, real: bool = False) -> tuple[float, int, int]:
    """Diameter of a prefix walk and the indices (s, t) attaining it."""
    if real:
        r = points.real
        s, t = int(np.argmin(r)), int(np.argmax(r))
        return float(r[t] - r[s]), s, t
    xy = np.column_stack([points.real, points.imag])
    return geometry.diameter(xy)


def max_interval_sum(chi: DirichletCharacter) -> IntervalSumRecord:
    """max over 0 <= M, N < q of |S(chi, M, N)|, with a maximising (M, N).

    This is the diameter of the prefix walk: max-min for real characters,
    convex hull plus rotating calipers otherwise.
    """
    if chi.is_principal:
        raise PrincipalCharacter("maximal sum is unbounded for the principal character")
    walk = prefix_walk(chi)
    _, s, t = walk_diameter(walk.points, chi.is_real)
    return _orient(walk, s, t)


def gauss_sum(chi: DirichletCharacter) -> complex:
    """tau(chi) = sum_{n mod q} chi(n) e(n/q), by direct summation."""
    q = chi.q
    return complex(np.sum(chi.values() * roots_of_unity(q)[:q]))


def gauss_sum_table(q: int) -> np.ndarray:
    """tau(chi) for every character mod q, indexed by label.

    Runs a multidimensional FFT over the exponent grid of the unit group:
    with n = prod g_i^x_i, tau(chi_e) = sum_x e(n/q) e(sum_i e_i x_i / o_i).
    Independent of :func:`gauss_sum`, which sums directly over residues.
    """
    basis = basis_for(q)
    e = roots_of_unity(q)[:q]
    grid = np.array(1 % q, dtype=np.int64)
    # last generator on axis 0, so C order runs the first generator fastest
    for g, o in reversed(basis.generators):
        pw = np.array([pow(g, k, q) for k in range(o)], dtype=np.int64)
        grid = (grid[..., None] * pw) % q
    if grid.ndim == 0:
        return np.array([e[int(grid)] if q > 1 else 1 + 0j])
    table = np.fft.ifftn(e[grid]) * grid.size
    return table.ravel()


class ExpansionCheck(NamedTuple):
    lhs: complex
    rhs: complex
    diff: float


def _geometric_interval(q: int, m: np.ndarray, M: int, N: int) -> np.ndarray:
    """sum_{M < n <= M+N} e_q(m n) for m not divisible by q."""
    e = roots_of_unity(q)[:q]
    start = e[(m * (M + 1)) % q]
    return start * (1 - e[(m * N) % q]) / (1 - e[m % q])


def gauss_expansion_check(chi: DirichletCharacter, M: int, N: int) -> ExpansionCheck:
    """Compare S(chi,M,N) tau(conj chi) with sum_{0<|m|<=(q-1)/2} conj chi(m) sum_n e_q(mn).

    Valid for primitive chi and odd q, where conj chi(m) tau(chi) expansions hold
    for every residue m.
    """
    q = chi.q
    if q % 2 == 0:
        raise EvenModulus(f"modulus {q} is even")
    if not chi.is_primitive:
        raise NotPrimitive(f"{chi.name} is not primitive")
    if not 0 <= N < q:
        raise ValueError("need 0 <= N < q")
    bar = chi.conjugate()
    lhs = partial_sum(chi, M, N).value * gauss_sum(bar)
    if N == 0:
        return ExpansionCheck(lhs, 0j, abs(lhs))
    h = (q - 1) // 2
    m = np.concatenate([np.arange(-h, 0), np.arange(1, h + 1)])
    coeff = bar.values()[m % q]
    rhs = complex(np.sum(coeff * _geometric_interval(q, m, M, N)))
    return ExpansionCheck(lhs, rhs, abs(lhs - rhs))


def twisted_sum(chi: DirichletCharacter, alpha: float, N: int) -> complex:
    """sum_{1 <= n <= N} chi(n) e(alpha n)."""
    if not 0 <= N <= chi.q:
        raise ValueError("need 0 <= N <= q")
    n = np.arange(1, N + 1)
    frac = np.mod(alpha * n, 1.0)
    return complex(np.sum(chi.values()[n % chi.q] * np.exp(2j * np.pi * frac)))


def psi_twisted_sum(chi: DirichletCharacter, psi: DirichletCharacter, M: int, N: int) -> complex:
    """sum_{M < n <= M+N} psi(n) chi(n) for psi of any modulus k."""
    if N < 0:
        raise ValueError("N must be nonnegative")
    n = np.arange(M + 1, M + N + 1)
    return complex(np.sum(chi.values()[n % chi.q] * psi.values()[n % psi.q]))


def pv_constant(chi: DirichletCharacter) -> float:
    """Empirical Polya-Vinogradov constant max|S| / (sqrt(q) log q)."""
    if chi.q < 3:
        raise ValueError("need q >= 3")
    return max_interval_sum(chi).abs / (math.sqrt(chi.q) * math.log(chi.q))
