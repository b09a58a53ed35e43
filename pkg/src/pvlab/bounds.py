"""Measured ratios for congruence counts and character-sum bounds.

Nothing here asserts an asymptotic inequality; each function returns the
measured quantity so that harness sweeps can report it.
"""
from __future__ import annotations

import itertools
import json
import math
from dataclasses import dataclass, field

import numpy as np

from .charsum import blocked_cumsum, max_interval_sum, prefix_walk, psi_twisted_sum, twisted_sum
from .dirichlet import DirichletCharacter, character_table, enumerate_characters, roots_of_unity
from .errors import HypothesisViolated, NotPrimitive, TooLarge
from .modarith import factorize

QUANTITIES = ("long_sum", "theorem", "twisted", "burgess_twisted")


def c_constant(q: int | DirichletCharacter) -> float:
    """1/4 when q is cubefree, 1/3 otherwise."""
    if isinstance(q, DirichletCharacter):
        cubefree = q.basis.modulus.cubefree
    else:
        cubefree = factorize(q).cubefree
    return 0.25 if cubefree else 1 / 3


@dataclass(frozen=True)
class EnergyCount:
    q: int
    M: int
    N: int
    U: int
    count: int

    @property
    def normalized(self) -> float:
        return self.count / (self.N * self.U * math.log(self.q))


@dataclass(frozen=True)
class RatioRecord:
    q: int
    label: int
    quantity: str
    value: float
    params: dict = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.quantity not in QUANTITIES:
            raise ValueError(f"unknown quantity {self.quantity!r}")
        if not self.value >= 0:
            raise ValueError("ratio must be nonnegative")

    def csv_row(self) -> list:
        return [self.q, self.label, self.quantity, f"{self.value:.12g}", json.dumps(self.params, sort_keys=True)]


RATIO_CSV_HEADER = ["q", "label", "quantity", "value", "params"]


def congruence_energy(q: int, M: int, N: int, U: int) -> EnergyCount:
    """Number of (n1, n2, u1, u2) with n1 u1 = n2 u2 mod q, M < n <= M+N, 1 <= u <= U.

    Counted by bucketing the products n u mod q: the answer is the sum of the
    squared bucket sizes.
    """
    if N < 1 or U < 1:
        raise ValueError("N and U must be positive")
    if not 2 * N * U < q:
        raise HypothesisViolated(f"need 2NU < q, got 2*{N}*{U} >= {q}")
    n = np.arange(M + 1, M + N + 1, dtype=np.int64) % q
    u = np.arange(1, U + 1, dtype=np.int64)
    prods = np.outer(n, u).ravel() % q
    counts = np.bincount(prods, minlength=1)
    return EnergyCount(q, M, N, U, int(np.dot(counts, counts)))


def congruence_energy_bruteforce(q: int, M: int, N: int, U: int) -> int:
    """O((NU)^2) reference count."""
    pairs = [(n * u) % q for n in range(M + 1, M + N + 1) for u in range(1, U + 1)]
    return sum(1 for a in pairs for b in pairs if a == b)


@dataclass(frozen=True)
class BurgessSum:
    value: float
    normalized: float


_BURGESS_BUDGET = 4**4 * 200


def burgess_complete_sum(chi: DirichletCharacter, V: int, r: int = 2) -> BurgessSum:
    """sum over v_1..v_2r <= V of |sum_lambda chi(prod(lambda+v_i) / prod(lambda+v_{r+i}))|.

    chi(x/y) means chi(x) * conj(chi(y)); a term vanishes when any factor
    shares a divisor with q.  Cost is V^(2r) q, so this is desk-scale only.
    """
    q = chi.q
    if V < 1 or r < 1:
        raise ValueError("V and r must be positive")
    if q > 200 or V > 4 or V ** (2 * r) * q > _BURGESS_BUDGET:
        raise TooLarge(f"V^(2r) q = {V ** (2 * r) * q} exceeds the desk-scale budget")
    lam = chi.basis.exponent
    ph = chi.phases
    roots = roots_of_unity(lam)
    lams = np.arange(1, q + 1)
    shifted = np.stack([ph[(lams + v) % q] for v in range(1, V + 1)])  # (V, q)
    total = 0.0
    for vs in itertools.product(range(V), repeat=2 * r):
        rows = shifted[list(vs)]
        dead = (rows < 0).any(axis=0)
        phase = (rows[:r].sum(axis=0) - rows[r:].sum(axis=0)) % lam
        vals = np.where(dead, 0, roots[phase])
        total += abs(np.sum(vals))
    total = float(total)
    return BurgessSum(total, total / (math.sqrt(q) * V ** (2 * r)))


def _require_primitive(chi: DirichletCharacter) -> None:
    if not chi.is_primitive:
        raise NotPrimitive(f"{chi.name} is not primitive")


def window_maxima(points: np.ndarray, total: complex, N: int) -> np.ndarray:
    """|P(M+N) - P(M)| for M = 0..q-1 from a prefix walk, wrapping through the period."""
    q = points.shape[-1]
    a, b = divmod(N, q)
    idx = np.arange(q) + b
    wrap = idx >= q
    ahead = points[..., idx % q] + (a + wrap) * total
    return np.abs(ahead - points)


def long_sum_length(q: int, epsilon: float, c: float) -> int:
    return math.floor(q ** (1 - c - epsilon))


def long_sum_ratio(chi: DirichletCharacter, epsilon: float) -> RatioRecord:
    """max over M of |S(chi, M, N)| / sqrt(q) with N = floor(q^(1-c-eps))."""
    _require_primitive(chi)
    q = chi.q
    c = c_constant(chi)
    N = long_sum_length(q, epsilon, c)
    if N <= 0:
        value = 0.0
    else:
        walk = prefix_walk(chi)
        value = float(window_maxima(walk.points, walk.total, N).max()) / math.sqrt(q)
    return RatioRecord(q, chi.label, "long_sum", value, {"N": N, "epsilon": epsilon, "c": c})


def long_sum_ratios(q: int, epsilon: float, chunk: int = 256) -> dict[int, float]:
    """long_sum_ratio value for every primitive character mod q, keyed by label.

    Walks for all characters are built from the phase table in blocks, so
    this is much faster than calling :func:`long_sum_ratio` per character.
    """
    if q < 3:
        raise ValueError("need q >= 3")
    chars = [c for c in enumerate_characters(q) if c.is_primitive]
    if not chars:
        return {}
    # |S(conj chi)| = |S(chi)|, so one of each conjugate pair is enough
    partner = {c.label: c.conjugate().label for c in chars}
    prim = [c.label for c in chars if c.label <= partner[c.label]]
    c = c_constant(q)
    N = long_sum_length(q, epsilon, c)
    if N <= 0:
        return dict.fromkeys(sorted(partner), 0.0)
    phases, lam = character_table(q)
    roots = roots_of_unity(lam)
    out: dict[int, float] = {}
    for lo in range(0, len(prim), chunk):
        labels = prim[lo : lo + chunk]
        vals = roots[phases[labels]]
        pts = np.zeros_like(vals)
        pts[:, 1:] = blocked_cumsum(vals[:, 1:])
        # primitive characters mod q > 1 are non-principal, so the period sum is 0
        best = window_maxima(pts, 0j, N).max(axis=1) / math.sqrt(q)
        out.update(zip(labels, best.tolist()))
    out.update({partner[k]: v for k, v in list(out.items())})
    return dict(sorted(out.items()))


def theorem_check(chi: DirichletCharacter) -> RatioRecord:
    """max |S| / ((4c/pi^2) sqrt(q) log q); reported, never asserted <= 1."""
    _require_primitive(chi)
    q = chi.q
    if q < 3:
        raise ValueError("need q >= 3")
    c = c_constant(chi)
    value = max_interval_sum(chi).abs / (4 * c / math.pi**2 * math.sqrt(q) * math.log(q))
    return RatioRecord(q, chi.label, "theorem", value, {"c": c})


def twisted_ratio(chi: DirichletCharacter, alpha: float, N: int) -> RatioRecord:
    """|sum_{n<=N} chi(n) e(alpha n)| / (N / log q)."""
    _require_primitive(chi)
    q = chi.q
    value = abs(twisted_sum(chi, alpha, N)) / (N / math.log(q))
    return RatioRecord(q, chi.label, "twisted", value, {"alpha": alpha, "N": N})


def burgess_twisted_ratio(
    chi: DirichletCharacter, psi: DirichletCharacter, M: int, N: int, r: int = 2
) -> RatioRecord:
    """|sum psi chi| / (k N^(1-1/r) q^((r+1)/(4 r^2)))."""
    _require_primitive(chi)
    q, k = chi.q, psi.q
    scale = k * N ** (1 - 1 / r) * q ** ((r + 1) / (4 * r * r))
    value = abs(psi_twisted_sum(chi, psi, M, N)) / scale
    return RatioRecord(q, chi.label, "burgess_twisted", value, {"k": k, "psi": psi.label, "M": M, "N": N, "r": r})
