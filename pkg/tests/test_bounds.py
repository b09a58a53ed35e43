import json
import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from pvlab.bounds import (
    RATIO_CSV_HEADER,
    RatioRecord,
    burgess_complete_sum,
    burgess_twisted_ratio,
    c_constant,
    congruence_energy,
    congruence_energy_bruteforce,
    long_sum_length,
    long_sum_ratio,
    long_sum_ratios,
    theorem_check,
    twisted_ratio,
)
from pvlab.charsum import max_interval_sum, partial_sum
from pvlab.dirichlet import character, enumerate_characters, legendre_character
from pvlab.errors import HypothesisViolated, NotPrimitive, TooLarge


def test_c_constant():
    assert c_constant(1009) == 0.25 and c_constant(12) == 0.25
    assert c_constant(16) == 1 / 3 and c_constant(legendre_character(7)) == 0.25


def test_energy_examples():
    assert congruence_energy(101, 0, 10, 1).count == 10
    assert congruence_energy(1009, 0, 10, 5).count == 106
    assert congruence_energy(11, 0, 2, 2).count == congruence_energy_bruteforce(11, 0, 2, 2)
    with pytest.raises(HypothesisViolated):
        congruence_energy(100, 0, 10, 5)


def test_energy_106_by_multiplicities():
    mult = {}
    for n in range(1, 11):
        for u in range(1, 6):
            mult[n * u] = mult.get(n * u, 0) + 1
    assert sum(m * m for m in mult.values()) == 106


@settings(max_examples=50)
@given(st.integers(1, 20), st.integers(1, 10), st.integers(0, 10**6), st.integers(1, 500))
def test_energy_matches_bruteforce(N, U, M, extra):
    if N * U > 200:
        N = 200 // U
    q = 2 * N * U + extra
    e = congruence_energy(q, M, N, U)
    assert e.count == congruence_energy_bruteforce(q, M, N, U)
    assert e.count >= N * U


def test_burgess_examples():
    for q in (7, 13, 101):
        b = burgess_complete_sum(legendre_character(q), 1)
        assert b.value == pytest.approx(q - 1)
        assert b.normalized == pytest.approx((q - 1) / math.sqrt(q))
    chi = character(15, 3)
    invertible = sum(1 for lam in range(1, 16) if math.gcd(lam + 1, 15) == 1)
    assert burgess_complete_sum(chi, 1).value == pytest.approx(invertible)
    with pytest.raises(TooLarge):
        burgess_complete_sum(legendre_character(211), 1)
    with pytest.raises(TooLarge):
        burgess_complete_sum(legendre_character(101), 5)


def test_burgess_legendre_101_against_scalar_evaluation():
    chi = legendre_character(101)
    q, V, r = 101, 2, 2
    total = 0.0
    for vs in np.ndindex(*(V,) * (2 * r)):
        inner = 0j
        for lam in range(1, q + 1):
            num = math.prod(lam + v + 1 for v in vs[:r])
            den = math.prod(lam + v + 1 for v in vs[r:])
            inner += complex(chi(num)) * complex(chi(den).conjugate())
        total += abs(inner)
    b = burgess_complete_sum(chi, V, r)
    assert b.value >= 0 and b.value == pytest.approx(total, rel=1e-12)


def test_long_sum_examples():
    chi = legendre_character(1009)
    rec = long_sum_ratio(chi, 0.05)
    N = rec.params["N"]
    assert N == math.floor(1009 ** 0.7)
    brute = max(abs(partial_sum(chi, M, N).value) for M in range(1009)) / math.sqrt(1009)
    assert rec.value == pytest.approx(brute, abs=1e-12)
    assert rec.value <= max_interval_sum(chi).abs / math.sqrt(1009) + 1e-12
    assert long_sum_length(7, 0.8, 0.25) == 0
    assert long_sum_ratio(legendre_character(7), 0.8).value == 0
    with pytest.raises(NotPrimitive):
        long_sum_ratio(character(9, 3), 0.05)


@pytest.mark.parametrize("q", [5, 12, 16, 27, 97, 1000, 1009])
def test_long_sum_batch_matches_scalar(q):
    batch = long_sum_ratios(q, 0.05)
    prim = [c for c in enumerate_characters(q) if c.is_primitive]
    assert sorted(batch) == [c.label for c in prim]
    for c in prim:
        assert batch[c.label] == pytest.approx(long_sum_ratio(c, 0.05).value, abs=1e-12)


def test_theorem_check():
    rec = theorem_check(legendre_character(7))
    assert rec.value == pytest.approx(2 / (1 / math.pi**2 * math.sqrt(7) * math.log(7)))
    assert round(rec.value, 2) == 3.83
    assert all(theorem_check(c).value > 0 for c in enumerate_characters(16) if c.is_primitive)


def test_twisted_ratios():
    chi = legendre_character(101)
    r = twisted_ratio(chi, 0.5, 50)
    assert r.quantity == "twisted" and r.value >= 0 and r.params == {"alpha": 0.5, "N": 50}
    b = burgess_twisted_ratio(chi, legendre_character(3), 10, 60)
    assert b.quantity == "burgess_twisted" and b.params["k"] == 3


def test_ratio_record_validation_and_csv():
    with pytest.raises(ValueError):
        RatioRecord(7, 3, "nonsense", 1.0)
    with pytest.raises(ValueError):
        RatioRecord(7, 3, "theorem", -1.0)
    row = theorem_check(legendre_character(7)).csv_row()
    assert len(row) == len(RATIO_CSV_HEADER)
    assert row[:3] == [7, 3, "theorem"] and json.loads(row[4]) == {"c": 0.25}
