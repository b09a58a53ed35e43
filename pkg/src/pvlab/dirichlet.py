"""Dirichlet characters mod q, kept exact as integer phases.

A character is an exponent vector against the generators of a
:class:`~pvlab.modarith.UnitGroupBasis`.  Its value at a unit n is
``e(sum_i e_i * dlog_i(n) / order_i)``; internally we carry the numerator over
the group exponent so that products are integer additions.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import cached_property, lru_cache, reduce

import numpy as np

from .modarith import (
    ZERO,
    FactoredModulus,
    UnitGroupBasis,
    UnityValue,
    factorize,
    unit_group_basis,
)


@lru_cache(maxsize=256)
def basis_for(q: int) -> UnitGroupBasis:
    """Cached unit-group basis for modulus q."""
    return unit_group_basis(factorize(q))


def _as_basis(m: FactoredModulus | UnitGroupBasis | int) -> UnitGroupBasis:
    if isinstance(m, UnitGroupBasis):
        return m
    return basis_for(int(m.q if isinstance(m, FactoredModulus) else m))


@lru_cache(maxsize=64)
def roots_of_unity(n: int) -> np.ndarray:
    """exp(2 pi i k / n) for k = 0..n-1, with a trailing 0 so index -1 maps to zero."""
    k = np.arange(n)
    t = 2 * np.pi * k / n
    out = np.empty(n + 1, dtype=complex)
    out[:n] = np.cos(t) + 1j * np.sin(t)
    if n % 4 == 0:
        out[: n : n // 4] = (1, 1j, -1, -1j)
    elif n % 2 == 0:
        out[: n : n // 2] = (1, -1)
    out[n] = 0
    out.flags.writeable = False
    return out


@dataclass(frozen=True, eq=False)
class DirichletCharacter:
    basis: UnitGroupBasis
    exponents: tuple[int, ...]
    label: int

    def __post_init__(self) -> None:
        orders = self.basis.orders
        if len(self.exponents) != len(orders):
            raise ValueError("exponent vector length must equal generator count")
        if any(not 0 <= e < o for e, o in zip(self.exponents, orders)):
            raise ValueError("exponent out of range")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DirichletCharacter):
            return NotImplemented
        return self.q == other.q and self.exponents == other.exponents

    def __hash__(self) -> int:
        return hash((self.q, self.exponents))

    def __repr__(self) -> str:
        return f"DirichletCharacter({self.name})"

    @property
    def q(self) -> int:
        return self.basis.q

    @property
    def name(self) -> str:
        """Report identifier ``q:label``."""
        return f"{self.q}:{self.label}"

    @property
    def is_principal(self) -> bool:
        return not any(self.exponents)

    @cached_property
    def order(self) -> int:
        return reduce(
            math.lcm,
            (o // math.gcd(o, e) for e, o in zip(self.exponents, self.basis.orders)),
            1,
        )

    @property
    def is_real(self) -> bool:
        return self.order <= 2

    @cached_property
    def parity(self) -> int:
        """chi(-1) as +1 or -1."""
        if self.q < 3:
            return 1
        return 1 if self(self.q - 1).is_one else -1

    def _weights(self) -> np.ndarray:
        lam = self.basis.exponent
        return np.array(
            [e * (lam // o) for e, o in zip(self.exponents, self.basis.orders)],
            dtype=np.int64,
        )

    def __call__(self, n: int) -> UnityValue:
        d = self.basis.dlog(n)
        if d is None:
            return ZERO
        lam = self.basis.exponent
        num = sum(e * (lam // o) * x for e, o, x in zip(self.exponents, self.basis.orders, d))
        return UnityValue.of(num, lam)

    @cached_property
    def phases(self) -> np.ndarray:
        """Numerators over ``basis.exponent`` at n = 0..q-1; -1 off the units."""
        dl = self.basis.dlog_matrix
        ph = (self._weights() @ dl) % self.basis.exponent if dl.shape[0] else np.zeros(self.q, dtype=np.int64)
        ph = np.where(self.basis.unit_mask, ph, -1)
        ph.flags.writeable = False
        return ph

    def values(self) -> np.ndarray:
        """Complex values chi(n) for n = 0..q-1."""
        return roots_of_unity(self.basis.exponent)[self.phases]

    def conjugate(self) -> DirichletCharacter:
        exps = tuple((-e) % o for e, o in zip(self.exponents, self.basis.orders))
        return DirichletCharacter(self.basis, exps, _encode(exps, self.basis.orders))

    @cached_property
    def conductor(self) -> int:
        """Smallest modulus inducing this character, computed per prime-power component."""
        cond = 1
        i = 0
        for comp in self.basis.components:
            r = len(comp.orders)
            local = self.exponents[i : i + r]
            i += r
            if comp.p == 2:
                if comp.k == 2 and local[0]:
                    cond *= 4
                elif comp.k >= 3:
                    a, b = local
                    t = comp.orders[1] // math.gcd(comp.orders[1], b)
                    if t > 1:
                        cond *= 4 * t
                    elif a:
                        cond *= 4
            else:
                (e,) = local
                t = comp.orders[0] // math.gcd(comp.orders[0], e)
                if t > 1:
                    s = 0
                    while t % comp.p == 0:
                        t //= comp.p
                        s += 1
                    cond *= comp.p ** (s + 1)
        return cond

    @property
    def is_primitive(self) -> bool:
        return self.conductor == self.q


def _encode(exponents: tuple[int, ...], orders: tuple[int, ...]) -> int:
    label, radix = 0, 1
    for e, o in zip(exponents, orders):
        label += e * radix
        radix *= o
    return label


def _decode(label: int, orders: tuple[int, ...]) -> tuple[int, ...]:
    out = []
    for o in orders:
        label, e = divmod(label, o)
        out.append(e)
    if label:
        raise ValueError("label out of range")
    return tuple(out)


def character(m: FactoredModulus | UnitGroupBasis | int, label: int) -> DirichletCharacter:
    """The character with the given mixed-radix label (first generator least significant)."""
    basis = _as_basis(m)
    if label < 0:
        raise ValueError("label out of range")
    return DirichletCharacter(basis, _decode(label, basis.orders), label)


def character_from_exponents(m, exponents) -> DirichletCharacter:
    basis = _as_basis(m)
    exponents = tuple(int(e) for e in exponents)
    return DirichletCharacter(basis, exponents, _encode(exponents, basis.orders))


def enumerate_characters(m: FactoredModulus | UnitGroupBasis | int) -> list[DirichletCharacter]:
    """All phi(q) characters mod q, ordered by label."""
    basis = _as_basis(m)
    chars = [
        DirichletCharacter(basis, exps, _encode(exps, basis.orders))
        for exps in itertools.product(*(range(o) for o in basis.orders))
    ]
    return sorted(chars, key=lambda c: c.label)


def primitive_characters(m) -> list[DirichletCharacter]:
    return [c for c in enumerate_characters(m) if c.is_primitive]


def legendre_character(p: int) -> DirichletCharacter:
    """The quadratic character mod an odd prime p."""
    basis = _as_basis(p)
    if len(basis.generators) != 1 or basis.modulus.factors[0][1] != 1 or p == 2:
        raise ValueError("legendre_character needs an odd prime")
    return character_from_exponents(basis, ((p - 1) // 2,))


def evaluate(chi: DirichletCharacter, n: int) -> UnityValue:
    return chi(n)


def conjugate(chi: DirichletCharacter) -> DirichletCharacter:
    return chi.conjugate()


def conductor(chi: DirichletCharacter) -> int:
    return chi.conductor


def attributes(chi: DirichletCharacter) -> tuple[int, int]:
    """(parity, order)."""
    return chi.parity, chi.order


def character_table(m) -> tuple[np.ndarray, int]:
    """Phase matrix for every character mod q.

    Returns ``(phases, lam)`` where ``phases[label, n]`` is the numerator of
    chi_label(n) over ``lam`` (the group exponent) and -1 where gcd(n, q) > 1.
    """
    basis = _as_basis(m)
    lam = basis.exponent
    orders = basis.orders
    labels = np.arange(basis.modulus.phi, dtype=np.int64)
    weights = np.empty((labels.size, len(orders)), dtype=np.int64)
    rest = labels.copy()
    for i, o in enumerate(orders):
        rest, e = np.divmod(rest, o)
        weights[:, i] = e * (lam // o)
    dl = basis.dlog_matrix
    if dl.shape[0]:
        ph = np.zeros((labels.size, basis.q), dtype=np.int64)
        for i in range(len(orders)):
            ph += np.outer(weights[:, i], dl[i])
            ph %= lam
    else:
        ph = np.zeros((labels.size, basis.q), dtype=np.int64)
    ph[:, ~basis.unit_mask] = -1
    return ph, lam
