"""Exact modular arithmetic and the structure of the unit group (Z/qZ)*.

Everything here is integer arithmetic; floats appear only in
:func:`unity_eval`.  Moduli are capped at ``2**32`` so that every product of
two residues fits in 64 bits when the tables are handed to numpy.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property, reduce
from typing import Iterator

import numpy as np

from .errors import NotInvertible

MAX_MODULUS = 2**32

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def pow_mod(b: int, e: int, m: int) -> int:
    """``b**e mod m`` by square-and-multiply (Python's three-argument pow)."""
    if m < 1:
        raise ValueError("modulus must be positive")
    if e < 0:
        raise ValueError("exponent must be nonnegative")
    return pow(b, e, m)


def inv_mod(a: int, m: int) -> int:
    """Inverse of ``a`` modulo ``m``; raises NotInvertible when gcd(a, m) > 1."""
    if m < 1:
        raise ValueError("modulus must be positive")
    if math.gcd(a, m) != 1:
        raise NotInvertible(f"{a} is not invertible modulo {m}")
    return pow(a, -1, m) if m > 1 else 0


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for all n < 3.3e24."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def primes_between(lo: int, hi: int) -> list[int]:
    """All primes p with lo <= p <= hi (sieve of Eratosthenes)."""
    if hi < 2 or hi < lo:
        return []
    sieve = np.ones(hi + 1, dtype=bool)
    sieve[:2] = False
    for p in range(2, math.isqrt(hi) + 1):
        if sieve[p]:
            sieve[p * p :: p] = False
    return [int(p) for p in np.flatnonzero(sieve) if p >= lo]


@dataclass(frozen=True)
class FactoredModulus:
    """A positive integer together with its prime factorisation."""

    q: int
    factors: tuple[tuple[int, int], ...]
    cubefree: bool

    def __post_init__(self) -> None:
        if self.q < 1:
            raise ValueError("modulus must be >= 1")
        primes = [p for p, _ in self.factors]
        if primes != sorted(set(primes)):
            raise ValueError("primes must be strictly increasing")
        if any(k < 1 for _, k in self.factors):
            raise ValueError("exponents must be >= 1")
        if math.prod(p**k for p, k in self.factors) != self.q:
            raise ValueError("factorisation does not multiply to q")
        if self.cubefree != all(k <= 2 for _, k in self.factors):
            raise ValueError("cubefree flag inconsistent with exponents")

    @property
    def phi(self) -> int:
        return math.prod((p - 1) * p ** (k - 1) for p, k in self.factors)

    @property
    def prime_powers(self) -> list[int]:
        return [p**k for p, k in self.factors]

    def divisors(self) -> list[int]:
        divs = [1]
        for p, k in self.factors:
            divs = [d * p**j for d in divs for j in range(k + 1)]
        return sorted(divs)

    def __int__(self) -> int:
        return self.q


def factorize(n: int) -> FactoredModulus:
    """Trial-division factorisation of ``n >= 1``."""
    if n < 1:
        raise ValueError("n must be >= 1")
    factors = []
    m = n
    for p in (2, 3):
        if m % p == 0:
            k = 0
            while m % p == 0:
                m //= p
                k += 1
            factors.append((p, k))
    p = 5
    step = 2
    while p * p <= m:
        if m % p == 0:
            k = 0
            while m % p == 0:
                m //= p
                k += 1
            factors.append((p, k))
        p += step
        step = 6 - step
    if m > 1:
        factors.append((m, 1))
    return FactoredModulus(n, tuple(factors), all(k <= 2 for _, k in factors))


def euler_phi(n: int) -> int:
    return factorize(n).phi


def mobius(n: int) -> int:
    fs = factorize(n).factors
    if any(k > 1 for _, k in fs):
        return 0
    return -1 if len(fs) % 2 else 1


def multiplicative_order(a: int, m: int) -> int:
    """Order of ``a`` in (Z/mZ)*."""
    if math.gcd(a, m) != 1:
        raise NotInvertible(f"{a} is not a unit modulo {m}")
    order = euler_phi(m)
    for p, _ in factorize(order).factors:
        while order % p == 0 and pow(a, order // p, m) == 1:
            order //= p
    return order


def smallest_primitive_root(pk: int, p: int) -> int:
    """Smallest generator of (Z/p^kZ)* for an odd prime power."""
    phi = pk // p * (p - 1)
    qs = [r for r, _ in factorize(phi).factors]
    for g in range(2, pk):
        if g % p and all(pow(g, phi // r, pk) != 1 for r in qs):
            return g
    if pk == 2:
        return 1
    raise ValueError(f"no primitive root modulo {pk}")


@dataclass(frozen=True, eq=False)
class _Component:
    """One prime-power factor p^k of q with its local discrete-log table."""

    p: int
    k: int
    orders: tuple[int, ...]
    local_generators: tuple[int, ...]
    table: np.ndarray  # shape (p**k, len(orders)); -1 marks non-units

    @property
    def pk(self) -> int:
        return self.p**self.k


def _crt_lift(residue: int, pk: int, q: int) -> int:
    """Residue mod q congruent to ``residue`` mod pk and to 1 mod q/pk."""
    m = q // pk
    if m == 1:
        return residue % q
    return (residue * m * pow(m, -1, pk) + pk * pow(pk, -1, m)) % q


def _odd_component(p: int, k: int) -> _Component:
    pk = p**k
    g = smallest_primitive_root(pk, p)
    phi = pk // p * (p - 1)
    table = np.full((pk, 1), -1, dtype=np.int64)
    x = 1
    for d in range(phi):
        table[x, 0] = d
        x = x * g % pk
    return _Component(p, k, (phi,), (g,), table)


def _two_component(k: int) -> _Component:
    pk = 2**k
    if k == 1:
        table = np.zeros((2, 0), dtype=np.int64)
        table[0] = -1  # never read: a 0-column table has no entries
        return _Component(2, 1, (), (), table)
    if k == 2:
        table = np.full((4, 1), -1, dtype=np.int64)
        table[1, 0] = 0
        table[3, 0] = 1
        return _Component(2, 2, (2,), (3,), table)
    half = pk // 4
    table = np.full((pk, 2), -1, dtype=np.int64)
    x = 1
    for b in range(half):
        table[x] = (0, b)
        table[pk - x] = (1, b)
        x = x * 5 % pk
    return _Component(2, k, (2, half), (pk - 1, 5), table)


@dataclass(frozen=True, eq=False)
class UnitGroupBasis:
    """Generators of (Z/qZ)* with eager discrete-log tables.

    ``generators`` lists ``(residue mod q, order)`` pairs, grouped by prime
    power in increasing order of the prime.  Every unit n satisfies
    ``n == prod(g_i ** dlog(n)[i]) mod q``.
    """

    modulus: FactoredModulus
    generators: tuple[tuple[int, int], ...]
    components: tuple[_Component, ...] = field(repr=False)

    @property
    def q(self) -> int:
        return self.modulus.q

    @property
    def orders(self) -> tuple[int, ...]:
        return tuple(o for _, o in self.generators)

    @cached_property
    def exponent(self) -> int:
        """Least common multiple of the generator orders (the group exponent)."""
        return reduce(math.lcm, self.orders, 1)

    @property
    def dlog_tables(self) -> dict[int, np.ndarray]:
        return {c.pk: c.table for c in self.components}

    def dlog(self, n: int) -> tuple[int, ...] | None:
        """Exponent vector of ``n``, or None when n is not a unit."""
        out: list[int] = []
        for c in self.components:
            row = c.table[n % c.pk]
            if c.orders and row[0] < 0:
                return None
            out.extend(int(v) for v in row)
        if self.q > 1 and math.gcd(n, self.q) != 1:
            return None
        return tuple(out)

    def reconstruct(self, exponents: tuple[int, ...]) -> int:
        n = 1
        for (g, _), e in zip(self.generators, exponents):
            n = n * pow(g, e, self.q) % self.q
        return n % self.q if self.q > 1 else 0

    @cached_property
    def dlog_matrix(self) -> np.ndarray:
        """Array of shape (r, q): column n holds dlog(n); -1 in every row for non-units."""
        q = self.q
        n = np.arange(q, dtype=np.int64)
        rows = []
        unit = np.ones(q, dtype=bool)
        for c in self.components:
            local = c.table[n % c.pk]
            if c.orders:
                unit &= local[:, 0] >= 0
            else:
                unit &= (n % 2) == 1
            rows.append(local.T)
        mat = np.concatenate(rows, axis=0) if rows else np.zeros((0, q), dtype=np.int64)
        if q == 1:
            unit[:] = True
        mat = mat.copy()
        mat[:, ~unit] = -1
        mat.flags.writeable = False
        return mat

    @cached_property
    def unit_mask(self) -> np.ndarray:
        n = np.arange(self.q)
        mask = np.gcd(n, self.q) == 1
        mask.flags.writeable = False
        return mask

    def iter_units(self) -> Iterator[int]:
        return (int(n) for n in np.flatnonzero(self.unit_mask))


def unit_group_basis(m: FactoredModulus | int) -> UnitGroupBasis:
    """Build generators and discrete-log tables for (Z/qZ)*."""
    if isinstance(m, int):
        m = factorize(m)
    if m.q >= MAX_MODULUS:
        raise ValueError(f"modulus {m.q} exceeds the 2**32 cap")
    comps = []
    gens: list[tuple[int, int]] = []
    for p, k in m.factors:
        c = _two_component(k) if p == 2 else _odd_component(p, k)
        comps.append(c)
        for g, o in zip(c.local_generators, c.orders):
            gens.append((_crt_lift(g, c.pk, m.q), o))
    return UnitGroupBasis(m, tuple(gens), tuple(comps))


@dataclass(frozen=True, order=True)
class UnityValue:
    """Either 0 or the root of unity exp(2*pi*i*numerator/denominator), reduced."""

    numerator: int = 0
    denominator: int = 1
    zero: bool = False

    def __post_init__(self) -> None:
        if self.denominator < 1:
            raise ValueError("denominator must be positive")
        if not 0 <= self.numerator < self.denominator:
            raise ValueError("numerator must lie in [0, denominator)")
        if math.gcd(self.numerator, self.denominator) != 1:
            raise ValueError("UnityValue must be in lowest terms")
        if self.zero and (self.numerator, self.denominator) != (0, 1):
            raise ValueError("zero is stored as 0/1")

    @classmethod
    def of(cls, numerator: int, denominator: int) -> UnityValue:
        numerator %= denominator
        g = math.gcd(numerator, denominator)
        return cls(numerator // g, denominator // g)

    @property
    def is_one(self) -> bool:
        return not self.zero and self.numerator == 0

    def __mul__(self, other: UnityValue) -> UnityValue:
        if self.zero or other.zero:
            return ZERO
        d = math.lcm(self.denominator, other.denominator)
        n = self.numerator * (d // self.denominator) + other.numerator * (d // other.denominator)
        return UnityValue.of(n, d)

    def conjugate(self) -> UnityValue:
        return self if self.zero else UnityValue.of(-self.numerator, self.denominator)

    def __complex__(self) -> complex:
        return unity_eval(self)


ZERO = UnityValue(0, 1, True)
_QUARTER_TURNS = (1 + 0j, 1j, -1 + 0j, -1j)
ONE = UnityValue(0, 1)


def unity_eval(u: UnityValue) -> complex:
    if u.zero:
        return 0j
    if 4 % u.denominator == 0:
        return _QUARTER_TURNS[u.numerator * 4 // u.denominator]
    t = 2 * math.pi * u.numerator / u.denominator
    return complex(math.cos(t), math.sin(t))
