import cmath
import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from pvlab.charsum import (
    blocked_cumsum,
    gauss_expansion_check,
    gauss_sum,
    gauss_sum_table,
    max_interval_sum,
    partial_sum,
    prefix_walk,
    psi_twisted_sum,
    pv_constant,
    twisted_sum,
)
from pvlab.dirichlet import character, enumerate_characters, legendre_character, primitive_characters
from pvlab.errors import EvenModulus, NotPrimitive, PrincipalCharacter
from pvlab.modarith import factorize


def brute_max(chi):
    """max |S(M, N)| over 0 <= M, N < q by direct summation."""
    q = chi.q
    v = chi.values()
    best = 0.0
    for M in range(q):
        s = np.cumsum(v[(M + 1 + np.arange(q)) % q])
        best = max(best, float(np.abs(s).max()))
    return best


def chars(qmax):
    return st.integers(3, qmax).flatmap(
        lambda q: st.integers(0, factorize(q).phi - 1).map(lambda lbl: character(q, lbl))
    )


def test_blocked_cumsum_matches_cumsum(rng):
    for n in (1, 5, 64, 65, 1000, 4097):
        x = rng.normal(size=(3, n)) + 1j * rng.normal(size=(3, n))
        assert np.allclose(blocked_cumsum(x), np.cumsum(x, axis=-1), atol=1e-10)


def test_partial_sum_examples():
    L7 = legendre_character(7)
    assert partial_sum(L7, 0, 3).value == 1
    assert partial_sum(L7, 5, 0).value == 0
    for chi in enumerate_characters(20)[1:]:
        assert abs(partial_sum(chi, 7, 20).value) < 1e-12


def test_prefix_walk_examples():
    assert list(prefix_walk(legendre_character(7)).points.real) == [0, 1, 2, 1, 2, 1, 0]
    p = prefix_walk(character(11, 0)).points
    assert len(p) == 11 and (p.real == np.arange(11)).all()


def test_prefix_walk_steps():
    for chi in enumerate_characters(60):
        pts = prefix_walk(chi).points
        steps = np.abs(np.diff(pts))
        assert np.all((np.abs(steps) < 1e-12) | (np.abs(steps - 1) < 1e-12))


@settings(max_examples=200)
@given(chars(400), st.integers(-1000, 1000), st.integers(0, 900), st.integers(0, 900))
def test_partial_sum_additive(chi, M, N1, N2):
    whole = partial_sum(chi, M, N1 + N2).value
    split = partial_sum(chi, M, N1).value + partial_sum(chi, M + N1, N2).value
    assert abs(whole - split) <= 1e-12 * max(1, N1 + N2)


@settings(max_examples=200)
@given(chars(400), st.integers(-1000, 1000), st.integers(0, 900))
def test_partial_sum_matches_direct_and_conjugates(chi, M, N):
    v = chi.values()
    direct = v[np.arange(M + 1, M + N + 1) % chi.q].sum()
    s = partial_sum(chi, M, N).value
    assert abs(s - direct) <= 1e-9
    assert abs(partial_sum(chi.conjugate(), M, N).value - s.conjugate()) <= 1e-12 * max(1, N)


def test_interval_record_json():
    chi = legendre_character(7)
    assert partial_sum(chi, 0, 3).to_json(chi) == {"q": 7, "label": 3, "M": 0, "N": 3, "re": 1.0, "im": 0.0, "abs": 1.0}


def test_max_examples():
    assert max_interval_sum(legendre_character(7)).abs == 2
    assert max_interval_sum(legendre_character(5)).abs == 2
    with pytest.raises(PrincipalCharacter):
        max_interval_sum(character(7, 0))


@pytest.mark.parametrize("q", list(range(3, 40)) + [64, 81, 100, 121, 169, 199, 200])
def test_max_matches_brute_force(q):
    for chi in enumerate_characters(q)[1:]:
        rec = max_interval_sum(chi)
        assert rec.abs >= 1
        assert abs(rec.abs - brute_max(chi)) <= 1e-12
        assert 0 <= rec.M < q and 0 <= rec.N < q
        assert abs(abs(partial_sum(chi, rec.M, rec.N).value) - rec.abs) <= 1e-12


def test_gauss_examples():
    assert abs(gauss_sum(legendre_character(5)) - math.sqrt(5)) < 1e-12
    assert abs(gauss_sum(legendre_character(7)) - 1j * math.sqrt(7)) < 1e-12
    for chi in primitive_characters(13):
        assert abs(abs(gauss_sum(chi)) ** 2 - 13) < 1e-9


def test_gauss_imprimitive_negative_control():
    bad = [c for c in enumerate_characters(9) if not c.is_primitive and not c.is_principal]
    assert bad and all(abs(abs(gauss_sum(c)) ** 2 - 9) > 1e-6 for c in bad)


@pytest.mark.parametrize("q", [1, 2, 3, 8, 12, 15, 16, 45, 97, 360, 1024])
def test_gauss_table_matches_direct(q):
    t = gauss_sum_table(q)
    d = np.array([gauss_sum(c) for c in enumerate_characters(q)])
    assert np.abs(t - d).max() < 1e-10


def test_expansion_examples():
    for chi in primitive_characters(13):
        assert gauss_expansion_check(chi, 3, 5).diff < 1e-9
    r = gauss_expansion_check(legendre_character(7), 0, 6)
    assert abs(r.lhs) < 1e-9 and abs(r.rhs) < 1e-9
    r = gauss_expansion_check(legendre_character(7), 2, 0)
    assert r.lhs == 0 and r.rhs == 0


def test_expansion_errors():
    with pytest.raises(EvenModulus):
        gauss_expansion_check(primitive_characters(8)[0], 0, 3)
    with pytest.raises(NotPrimitive):
        gauss_expansion_check(character(9, 3), 0, 3)


@settings(max_examples=60)
@given(st.sampled_from([3, 5, 7, 11, 13, 101, 997, 4999]), st.data())
def test_expansion_property(q, data):
    chi = character(q, data.draw(st.integers(1, q - 2)))
    M = data.draw(st.integers(-(10**5), 10**5))
    N = data.draw(st.integers(0, q - 1))
    assert gauss_expansion_check(chi, M, N).diff <= 1e-6


def test_twisted_examples():
    L7 = legendre_character(7)
    assert abs(twisted_sum(L7, 0.5, 6) - 2) < 1e-12
    assert abs(twisted_sum(L7, 0.3, 1) - cmath.exp(2j * math.pi * 0.3)) < 1e-12
    for chi in enumerate_characters(30):
        assert abs(twisted_sum(chi, 0.0, 17) - partial_sum(chi, 0, 17).value) < 1e-12


def test_psi_twisted_examples():
    chi = primitive_characters(13)[3]
    assert abs(psi_twisted_sum(chi, character(1, 0), 4, 9) - partial_sum(chi, 4, 9).value) < 1e-12
    coprime = sum(1 for n in range(6, 6 + 40) if math.gcd(n, 12) == 1)
    chi12 = primitive_characters(12)[0]
    assert abs(psi_twisted_sum(chi12, chi12.conjugate(), 5, 40) - coprime) < 1e-12
    psi = legendre_character(3)
    brute = sum(complex(chi(n)) * complex(psi(n)) for n in range(1, 13))
    assert abs(psi_twisted_sum(chi, psi, 0, 12) - brute) < 1e-12


def test_pv_constant_examples():
    assert pv_constant(legendre_character(7)) == pytest.approx(2 / (math.sqrt(7) * math.log(7)))
    assert pv_constant(legendre_character(5)) == pytest.approx(2 / (math.sqrt(5) * math.log(5)))
    assert round(pv_constant(legendre_character(7)), 4) == 0.3885
    assert all(pv_constant(c) > 0 for c in enumerate_characters(20)[1:])
