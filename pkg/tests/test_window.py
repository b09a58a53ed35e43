import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from pvlab.dirichlet import character, legendre_character
from pvlab.modarith import factorize
from pvlab.errors import DegenerateRamp, SupportTooWide, WindowError, ZeroFrequency
from pvlab.window import (
    SPECTRUM_CSV_HEADER,
    default_ramp,
    eval_window,
    fourier_closed_form,
    fourier_dft,
    fourier_magnitude,
    fourier_product_form,
    l1_bound,
    l1_norm,
    make_window,
    pom_gap,
    pom_sine_sum,
    sharp_cutoff_l1,
    smoothing_decomposition_check,
    window_samples,
)


@st.composite
def windows(draw, qs=st.integers(5, 300)):
    q = draw(qs)
    K = draw(st.integers(1, (q - 3) // 2))
    N = draw(st.integers(2, q - 2 * K - 1))
    M = draw(st.integers(-2 * q, 2 * q))
    return make_window(q, M, N, K)


def test_make_window_examples():
    make_window(100, 10, 30, 5)
    with pytest.raises(SupportTooWide):
        make_window(100, 0, 95, 5)
    with pytest.raises(DegenerateRamp):
        make_window(100, 10, 30, 0)
    with pytest.raises(WindowError):
        make_window(100, 10, 1, 3)


def test_eval_window_examples():
    w = make_window(100, 10, 30, 6)
    assert eval_window(w, 11) == 1
    assert eval_window(w, 5) == 0
    assert eval_window(w, 8) == 0.5
    assert eval_window(w, 39) == 1 and eval_window(w, 45) == 0
    assert eval_window(w, 111) == 1


@settings(max_examples=200)
@given(windows())
def test_samples_mass_and_range(w):
    f = window_samples(w)
    assert f.min() >= 0 and f.max() <= 1
    assert f.sum() == pytest.approx(w.mass)
    assert all(f[x % w.q] == eval_window(w, x) for x in range(w.M - w.K - 2, w.M + w.N + w.K + 2))
    assert len(w.support) == np.count_nonzero(f)


def hand_dft(w):
    f = window_samples(w)
    x = np.arange(w.q)
    return np.array([np.sum(f * np.exp(2j * np.pi * a * x / w.q)) for a in range(w.q)])


def test_dft_examples():
    w = make_window(16, 0, 6, 2)
    assert np.allclose(fourier_dft(w), hand_dft(w), atol=1e-12)
    for args in [(32, 3, 10, 4), (32, 20, 2, 1), (32, 0, 20, 5)]:
        w = make_window(*args)
        F = fourier_dft(w)
        assert F[0] == pytest.approx(w.mass)
        x = np.arange(32)
        inv = np.array([np.sum(F * np.exp(-2j * np.pi * np.arange(32) * t / 32)) / 32 for t in x])
        assert np.allclose(inv, window_samples(w), atol=1e-12)


def test_closed_form_example_and_symmetry():
    w = make_window(64, 3, 20, 4)
    a = np.arange(1, 64)
    ref = fourier_dft(w)[1:]
    cf = fourier_closed_form(w, a)
    assert np.abs(cf - ref).max() <= 1e-9 * 64
    assert np.allclose(cf, np.conj(cf[::-1]), atol=1e-12)
    assert (np.abs(cf) <= w.mass + 1e-12).all()
    assert fourier_closed_form(w, 5) == pytest.approx(ref[4])
    with pytest.raises(ZeroFrequency):
        fourier_closed_form(w, 64)


@settings(max_examples=150)
@given(windows())
def test_three_routes_agree(w):
    a = np.arange(1, w.q)
    ref = fourier_dft(w)[1:]
    tol = 1e-9 * w.q
    assert np.abs(fourier_closed_form(w, a) - ref).max() <= tol
    assert np.abs(fourier_product_form(w, a) - ref).max() <= tol
    assert np.abs(fourier_magnitude(w)[1:] - np.abs(ref)).max() <= tol


@settings(max_examples=100)
@given(windows())
def test_parseval(w):
    F = fourier_dft(w)
    f = window_samples(w)
    lhs, rhs = np.sum(np.abs(F) ** 2), w.q * np.sum(f**2)
    assert lhs == pytest.approx(rhs, rel=1e-6)


def test_l1_examples():
    q, K = 10**4, 631
    assert l1_bound(q, K) == pytest.approx(4 * q / math.pi**2 * math.log(q / K))
    assert abs(l1_bound(q, K) - 11198.0) < 0.5
    assert math.floor(q**0.7) == 630 and abs(l1_bound(q, 630) - 11204.585068) < 1e-5
    s = l1_norm(make_window(100, 10, 30, 5))
    assert s.l1 >= s.window.mass
    assert s.ratio == s.l1 / s.bound
    assert len(s.csv_row()) == len(SPECTRUM_CSV_HEADER)


def test_l1_matches_fft():
    for args in [(1000, 0, 333, 125), (257, 40, 100, 30), (4096, 7, 1365, 337)]:
        w = make_window(*args)
        assert l1_norm(w).l1 == pytest.approx(np.abs(np.fft.fft(window_samples(w))).sum(), rel=1e-12)


def test_sharp_cutoff():
    q = 101
    assert sharp_cutoff_l1(q, 0, q - 1) == pytest.approx(2 * (q - 1))
    direct = np.abs(np.fft.fft(np.r_[0.0, np.ones(30), np.zeros(70)])).sum()
    assert sharp_cutoff_l1(q, 0, 30) == pytest.approx(direct)
    assert sharp_cutoff_l1(q, 17, 30) == pytest.approx(sharp_cutoff_l1(q, -4, 30))
    assert sharp_cutoff_l1(100, 0, 30) > l1_norm(make_window(100, 0, 30, 5)).l1


def test_pom_examples():
    assert pom_sine_sum(0.0, 5) == 0
    assert pom_sine_sum(math.pi / 2, 3) == pytest.approx(4 / 3)
    assert pom_sine_sum(math.pi / 2, 1) == 1
    assert pom_gap(1) == 1.0
    assert pom_gap(100) > 0
    with pytest.raises(ValueError):
        pom_gap(10, grid=100)


def test_default_ramp():
    assert default_ramp(1009) == math.floor(1009 ** 0.7)
    assert default_ramp(1000) == math.floor(1000 ** (2 / 3 - 0.05))


def test_smoothing_examples():
    chi = legendre_character(101)
    r = smoothing_decomposition_check(chi, make_window(101, 10, 40, 5))
    assert r.residual < 1e-9 * 101
    assert abs(r.left_edge) <= 5 and abs(r.right_edge) <= 5
    r1 = smoothing_decomposition_check(chi, make_window(101, 10, 40, 1))
    assert r1.left_edge == 0 and r1.right_edge == 0
    assert abs(r1.S - r1.smoothed) < 1e-12


@settings(max_examples=100)
@given(windows(st.integers(5, 2000)), st.data())
def test_smoothing_property(w, data):
    chi = character(w.q, data.draw(st.integers(1, factorize(w.q).phi - 1)))
    assert smoothing_decomposition_check(chi, w).residual <= 1e-9 * w.q
