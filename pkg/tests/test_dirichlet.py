import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from pvlab.dirichlet import (
    attributes,
    character,
    character_from_exponents,
    character_table,
    conductor,
    conjugate,
    enumerate_characters,
    evaluate,
    legendre_character,
    primitive_characters,
    roots_of_unity,
)
from pvlab.modarith import ZERO, factorize, mobius


def brute_conductor(chi):
    """Smallest d | q with chi(n) = 1 whenever n = 1 mod d and gcd(n, q) = 1."""
    q = chi.q
    vals = chi.values()
    for d in factorize(q).divisors():
        if all(abs(vals[n] - 1) < 1e-9 for n in range(1, q, d) if math.gcd(n, q) == 1):
            return d
    raise AssertionError


def test_enumeration_counts():
    assert len(enumerate_characters(5)) == 4 and len(primitive_characters(5)) == 3
    assert len(enumerate_characters(12)) == 4 and len(primitive_characters(12)) == 1
    assert len(enumerate_characters(1)) == 1 and enumerate_characters(1)[0].is_principal
    assert len(enumerate_characters(2)) == 1


def test_labels_sorted_and_unique():
    chars = enumerate_characters(360)
    assert [c.label for c in chars] == list(range(96))
    assert all(character(360, c.label) == c for c in chars)
    assert chars[0].is_principal and chars[7].name == "360:7"


def test_legendre_mod_7():
    chi = legendre_character(7)
    residues = {1, 2, 4}
    for n in range(1, 7):
        assert evaluate(chi, n) == (character(7, 0)(1) if n in residues else chi(3))
    assert complex(chi(3)) == -1
    assert attributes(chi) == (-1, 2)
    assert conductor(chi) == 7


def test_attributes_examples():
    assert attributes(legendre_character(5)) == (1, 2)
    assert attributes(character(11, 0)) == (1, 1)


def test_zero_off_units_and_principal_one():
    for chi in enumerate_characters(36):
        for n in range(-40, 80):
            v = chi(n)
            assert (v == ZERO) == (math.gcd(n, 36) > 1)
            if chi.is_principal and math.gcd(n, 36) == 1:
                assert v.is_one


def test_conductor_lift_of_legendre_5_to_15():
    leg = legendre_character(5)
    lifted = [c for c in enumerate_characters(15) if all(
        c(n) == leg(n) for n in range(15) if math.gcd(n, 15) == 1
    )]
    assert len(lifted) == 1 and lifted[0].conductor == 5
    assert character(15, 0).conductor == 1


@pytest.mark.parametrize("q", list(range(1, 130)) + [243, 256, 360, 392, 500])
def test_conductor_matches_brute_force(q):
    for chi in enumerate_characters(q):
        assert chi.conductor == brute_conductor(chi)


@pytest.mark.parametrize("q", range(1, 501))
def test_primitive_count_mobius(q):
    expected = sum(mobius(q // d) * factorize(d).phi for d in factorize(q).divisors())
    assert len(primitive_characters(q)) == expected


def test_conjugate_examples():
    leg = legendre_character(13)
    assert conjugate(leg) == leg
    chi = character_from_exponents(5, (1,))
    assert chi.order == 4 and conjugate(chi).exponents == (3,)
    for c in enumerate_characters(48):
        assert c.conjugate().conjugate() == c
        assert np.allclose(c.conjugate().values(), c.values().conj())


@pytest.mark.parametrize("q", [3, 8, 9, 16, 20, 24, 45, 64, 105])
def test_multiplicative_and_periodic_exact(q):
    for chi in enumerate_characters(q):
        for m in range(q):
            for n in range(q):
                assert chi(m) * chi(n) == chi(m * n)
            assert chi(m + q) == chi(m) == chi(m - 3 * q)


@settings(max_examples=200)
@given(st.integers(3, 2000), st.data())
def test_multiplicativity_property(q, data):
    phi = factorize(q).phi
    chi = character(q, data.draw(st.integers(0, phi - 1)))
    m, n = data.draw(st.integers(-(10**6), 10**6)), data.draw(st.integers(-(10**6), 10**6))
    assert chi(m) * chi(n) == chi(m * n)
    assert abs(chi.values()[(m * n) % q] - complex(chi(m)) * complex(chi(n))) < 1e-9


@pytest.mark.parametrize("q", [7, 12, 100, 343, 499, 500])
def test_orthogonality_float(q):
    ph, lam = character_table(q)
    V = roots_of_unity(lam)[ph]
    phi = factorize(q).phi
    assert np.abs(V.sum(axis=1)[1:]).max() <= 1e-9
    assert abs(V[0].sum() - phi) <= 1e-9
    col = V.sum(axis=0)
    target = np.zeros(q)
    target[1 % q] = phi
    assert np.abs(col - target).max() <= 1e-9


def test_orthogonality_exact_bucket_count():
    # a non-principal character takes each of its values equally often
    for q in (15, 16, 63, 100):
        for chi in enumerate_characters(q)[1:]:
            ph = chi.phases[chi.phases >= 0]
            hist = np.bincount(ph, minlength=chi.basis.exponent)
            support = np.flatnonzero(hist)
            assert len(support) == chi.order
            assert (hist[support] == hist[support[0]]).all()


def test_character_table_matches_objects():
    for q in (1, 2, 24, 91):
        ph, lam = character_table(q)
        for chi in enumerate_characters(q):
            assert (ph[chi.label] == chi.phases).all()


def test_roots_of_unity_exact_quarters():
    r = roots_of_unity(8)
    assert r[2] == 1j and r[4] == -1 and r[6] == -1j and r[8] == 0
    assert not r.flags.writeable


def test_invalid_labels():
    with pytest.raises(ValueError):
        character(7, 6)
    with pytest.raises(ValueError):
        character(7, -1)
    with pytest.raises(ValueError):
        legendre_character(9)
