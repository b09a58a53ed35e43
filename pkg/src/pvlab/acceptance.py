"""The acceptance suite behind ``pvlab verify``.

Each criterion is a function returning a :class:`CriterionResult`.  ``fast``
shrinks the ranges so the whole suite fits in about a minute; the full run
uses the stated ranges and tolerances.
"""
from __future__ import annotations

import math
import time
from dataclasses import dataclass
from typing import Callable

import numpy as np

from . import thresholds
from .bounds import congruence_energy, congruence_energy_bruteforce, long_sum_ratio, long_sum_ratios
from .charsum import gauss_expansion_check, gauss_sum, gauss_sum_table, max_interval_sum
from .dirichlet import basis_for, character, character_table, enumerate_characters, roots_of_unity
from .harness import fit_l1_model
from .modarith import primes_between
from .window import (
    fourier_closed_form,
    fourier_dft,
    fourier_product_form,
    l1_norm,
    make_window,
    pom_gap,
    sharp_cutoff_l1,
    smoothing_decomposition_check,
)

SEED = 20240601


@dataclass
class CriterionResult:
    number: int
    name: str
    passed: bool
    detail: str
    seconds: float = 0.0

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"[{status}] {self.number:2d} {self.name}: {self.detail} ({self.seconds:.1f}s)"


def _rng(k: int) -> np.random.Generator:
    return np.random.Generator(np.random.Philox(key=[SEED, k]))


def _prime_factors(n: int) -> list[int]:
    out, p = [], 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


def _rotation_invariant(hist: np.ndarray, lam: int) -> np.ndarray:
    """Rows of a phase histogram unchanged by some nonzero rotation of Z/lam.

    Such a row sums to exactly zero as a combination of lam-th roots of unity.
    """
    ok = np.zeros(hist.shape[0], dtype=bool)
    for p in _prime_factors(lam):
        ok |= (hist == np.roll(hist, lam // p, axis=1)).all(axis=1)
    return ok


def _histograms(diff: np.ndarray, lam: int) -> np.ndarray:
    """Histogram over Z/lam of every row of an integer array."""
    rows = diff.shape[0]
    flat = (diff + lam * np.arange(rows)[:, None]).ravel()
    return np.bincount(flat, minlength=rows * lam).reshape(rows, lam)


def _orthogonality_exact(ph: np.ndarray, lam: int) -> bool:
    """sum_n a_i(n) conj a_j(n) = (len) * [i == j], exactly, for rows of phases."""
    k, n = ph.shape
    ii, jj = np.triu_indices(k)
    good = True
    for lo in range(0, len(ii), max(1, 2**22 // max(n, 1))):
        i, j = ii[lo : lo + 2**22 // max(n, 1)], jj[lo : lo + 2**22 // max(n, 1)]
        hist = _histograms((ph[i] - ph[j]) % lam, lam)
        same = i == j
        good &= bool((hist[same, 0] == n).all())
        good &= bool(_rotation_invariant(hist[~same], lam).all())
    return good


def _algebra_exact(q: int) -> bool:
    basis = basis_for(q)
    ph, lam = character_table(q)
    units = np.flatnonzero(basis.unit_mask)
    # periodicity: phases rebuilt from dlog(n + q) agree with the table
    dl = np.array([basis.dlog(int(n) + q) or () for n in units], dtype=np.int64).reshape(len(units), -1)
    if dl.size:
        w = np.array([[e * (lam // o) for e, o in zip(character(q, lbl).exponents, basis.orders)] for lbl in range(len(ph))])
        if not ((w @ dl.T) % lam == ph[:, units]).all():
            return False
    # zero exactly on non-units, for n and n + q alike
    nonunit = ~basis.unit_mask
    if not (ph[:, nonunit] == -1).all() or any(basis.dlog(int(n) + q) is not None for n in np.flatnonzero(nonunit)):
        return False
    # multiplicativity on units (non-units give 0 on both sides, checked above)
    pu = ph[:, units]
    prod = np.outer(units, units) % q
    for lbl in range(len(ph)):
        if not (ph[lbl][prod] == (pu[lbl][:, None] + pu[lbl][None, :]) % lam).all():
            return False
    # UnityValue arithmetic on a handful of pairs per character
    rng = _rng(q)
    for chi in enumerate_characters(q)[:8]:
        for m, n in rng.integers(0, 3 * q, size=(4, 2)).tolist():
            if chi(m) * chi(n) != chi(m * n):
                return False
    # row and column orthogonality
    return _orthogonality_exact(pu, lam) and _orthogonality_exact(pu.T.copy(), lam)


def _algebra_float(q: int) -> float:
    basis = basis_for(q)
    ph, lam = character_table(q)
    V = roots_of_unity(lam)[ph]
    phi = basis.modulus.phi
    err = 0.0
    rng = _rng(10_000 + q)
    m, n = rng.integers(0, q, size=(2, 64))
    err = max(err, float(np.abs(V[:, m] * V[:, n] - V[:, (m * n) % q]).max()))
    err = max(err, float(np.abs(np.abs(V) - basis.unit_mask).max()))
    G = V @ V.conj().T
    err = max(err, float(np.abs(G - phi * np.eye(len(V))).max()))
    C = V.conj().T @ V
    target = phi * np.diag(basis.unit_mask.astype(float))
    err = max(err, float(np.abs(C - target).max()))
    return err


def criterion_1(fast: bool = False) -> CriterionResult:
    hi_exact, hi_float = (60, 120) if fast else (200, 500)
    bad = [q for q in range(1, hi_exact + 1) if not _algebra_exact(q)]
    worst = max(_algebra_float(q) for q in range(1, hi_float + 1))
    ok = not bad and worst <= 1e-9
    detail = f"exact q<={hi_exact}: {len(bad)} failures; float q<={hi_float}: max err {worst:.2e}"
    return CriterionResult(1, "character algebra", ok, detail)


def criterion_2(fast: bool = False) -> CriterionResult:
    hi = 400 if fast else 2000
    worst, count, negatives = 0.0, 0, 0
    for q in range(3, hi + 1):
        chars = enumerate_characters(q)
        taus = np.abs(gauss_sum_table(q)) ** 2
        prim = np.array([c.is_primitive for c in chars])
        nonprincipal = np.array([not c.is_principal for c in chars])
        if prim.any():
            worst = max(worst, float(np.abs(taus[prim] - q).max()))
            count += int(prim.sum())
        negatives += int((np.abs(taus[~prim & nonprincipal] - q) > 1e-6).sum())
    # the table route against direct summation on a sample
    rng = _rng(2)
    cross = 0.0
    for q in rng.integers(3, hi + 1, size=40).tolist():
        lbl = int(rng.integers(0, basis_for(q).modulus.phi))
        cross = max(cross, abs(gauss_sum(character(q, lbl)) - gauss_sum_table(q)[lbl]))
    ok = worst <= 1e-6 and negatives >= 1 and cross <= 1e-9
    detail = (
        f"{count} primitive chars q<={hi}, max ||tau|^2-q| {worst:.2e}; "
        f"{negatives} imprimitive counterexamples; table vs direct {cross:.1e}"
    )
    return CriterionResult(2, "Gauss sum magnitude", ok, detail)


def criterion_3(fast: bool = False) -> CriterionResult:
    trials = 20 if fast else 100
    rng = _rng(3)
    primes = primes_between(3, 5000)
    worst = 0.0
    for _ in range(trials):
        q = int(rng.choice(primes))
        chi = character(q, int(rng.integers(1, q - 1)))
        M, N = (int(v) for v in rng.integers(0, q, size=2))
        worst = max(worst, gauss_expansion_check(chi, M, N).diff)
    return CriterionResult(3, "Gauss expansion identity", worst <= 1e-6, f"{trials} trials, max diff {worst:.2e}")


def _random_window(rng: np.random.Generator, q: int):
    K = int(rng.integers(1, (q - 3) // 2 + 1))
    N = int(rng.integers(2, q - 2 * K))
    M = int(rng.integers(0, q))
    return make_window(q, M, N, K)


def criterion_4(fast: bool = False) -> CriterionResult:
    hi = 60 if fast else 200
    worst, count = 0.0, 0
    for q in range(3, hi + 1):
        ph, lam = character_table(q)
        V = roots_of_unity(lam)[ph[1:]]
        # every interval sum S(M, N), 1 <= N <= q, by direct cumulative sums from each start
        idx = (np.arange(q)[:, None] + 1 + np.arange(q)[None, :]) % q
        brute = np.empty(len(V))
        for lo in range(0, len(V), 64):
            sums = np.cumsum(V[lo : lo + 64][:, idx], axis=2)
            brute[lo : lo + 64] = np.abs(sums).max(axis=(1, 2))
        for lbl in range(1, len(ph)):
            rec = max_interval_sum(character(q, lbl))
            worst = max(worst, abs(rec.abs - brute[lbl - 1]))
            count += 1
    ok = worst <= 1e-12
    return CriterionResult(4, "calipers vs brute-force maximum", ok, f"{count} chars q<={hi}, max diff {worst:.2e}")


def criterion_5(fast: bool = False) -> CriterionResult:
    trials = 12 if fast else 50
    rng = _rng(5)
    worst = 0.0
    for _ in range(trials):
        q = int(rng.choice([64, 256, 1024, 4096]))
        w = _random_window(rng, q)
        ref = fourier_dft(w)
        a = np.arange(1, q)
        err = max(
            float(np.abs(fourier_closed_form(w, a) - ref[1:]).max()),
            float(np.abs(fourier_product_form(w, a) - ref[1:]).max()),
            abs(ref[0] - w.mass),
        )
        worst = max(worst, err / q)
    return CriterionResult(5, "closed-form Fourier transform vs DFT", worst <= 1e-9, f"{trials} windows, max err/q {worst:.2e}")


def criterion_6(fast: bool = False) -> CriterionResult:
    trials = 20 if fast else 100
    rng = _rng(6)
    worst = 0.0
    done = 0
    while done < trials:
        q = int(rng.integers(5, 5001))
        phi = basis_for(q).modulus.phi
        if phi < 2:
            continue
        chi = character(q, int(rng.integers(1, phi)))
        worst = max(worst, smoothing_decomposition_check(chi, _random_window(rng, q)).residual / q)
        done += 1
    return CriterionResult(6, "smoothing decomposition", worst <= 1e-9, f"{trials} pairs, max residual/q {worst:.2e}")


def criterion_7(fast: bool = False) -> CriterionResult:
    grid = (10**3, 10**4) if fast else (10**3, 10**4, 10**5)
    ratios, beaten = [], True
    parts = []
    for q in grid:
        K, N = math.floor(q**0.7), q // 3
        s = l1_norm(make_window(q, 0, N, K))
        sharp = sharp_cutoff_l1(q, 0, N)
        beaten &= s.l1 < sharp
        ratios.append(s.ratio)
        parts.append(f"q={q}: {s.l1:.1f} < {sharp:.1f}, ratio {s.ratio:.4f}")
    decreasing = all(b <= a + 0.02 for a, b in zip(ratios, ratios[1:]))
    return CriterionResult(7, "l1 improvement mechanism", beaten and decreasing, "; ".join(parts))


def criterion_8(fast: bool = False) -> CriterionResult:
    rows = []
    for e in range(10, 18):
        q = 2**e
        rows.append(l1_norm(make_window(q, 0, q // 3, math.floor(q**0.7))))
    A, B, rms = fit_l1_model(rows)
    lo, hi = thresholds.L1_FIT_A_BAND
    detail = f"A={A:.6f} in [{lo}, {hi}] (4/pi^2={4 / math.pi**2:.4f}), B={B:.4f}, rms={rms:.2f}"
    return CriterionResult(8, "l1 model fit", lo <= A <= hi, detail)


def criterion_9(fast: bool = False) -> CriterionResult:
    hi = 300 if fast else 1000
    worst, where, count = 0.0, None, 0
    for q in range(3, hi + 1):
        bound = math.sqrt(q) * math.log(q)
        seen = set()
        for chi in enumerate_characters(q):
            if not chi.is_primitive or chi.label in seen:
                continue
            # |S(conj chi, M, N)| = |S(chi, M, N)|
            seen.add(chi.conjugate().label)
            count += 1 + (chi.conjugate().label != chi.label)
            r = max_interval_sum(chi).abs / bound
            if r > worst:
                worst, where = r, chi.name
    return CriterionResult(9, "classical PV sanity", worst <= 1, f"{count} primitive chars q<={hi}, max |S|/(sqrt q log q) {worst:.4f} at {where}")


def criterion_10(fast: bool = False) -> CriterionResult:
    gaps = {n: pom_gap(n, 10**4) for n in (10, 10**2, 10**3, 10**4)}
    stab = gaps[10**4] - gaps[10**2]
    ok = all(g <= thresholds.POM_C_EMP for g in gaps.values()) and stab <= thresholds.POM_STABILISATION
    detail = ", ".join(f"gap({n})={g:.4f}" for n, g in gaps.items()) + f"; gap(1e4)-gap(1e2)={stab:.4f}"
    return CriterionResult(10, "Pomerance gap", ok, detail)


def criterion_11(fast: bool = False) -> CriterionResult:
    rng = _rng(11)
    mismatches = 0
    for _ in range(50):
        U = int(rng.integers(1, 15))
        N = int(rng.integers(1, 200 // U + 1))
        q = int(rng.integers(2 * N * U + 1, 2 * N * U + 2000))
        M = int(rng.integers(0, q))
        mismatches += congruence_energy(q, M, N, U).count != congruence_energy_bruteforce(q, M, N, U)
    primes = primes_between(10**3, 10**5)
    sweep = 60 if fast else 300
    norm, below_diag = [], 0
    for _ in range(sweep):
        q = int(rng.choice(primes))
        U = int(rng.integers(1, math.isqrt(q // 2) + 1))
        N = int(rng.integers(1, (q - 1) // (2 * U) + 1))
        e = congruence_energy(q, int(rng.integers(0, q)), N, U)
        below_diag += e.count < N * U
        norm.append(e.normalized)
    c_fi = max(norm)
    ok = mismatches == 0 and below_diag == 0
    detail = f"50 configs, {mismatches} mismatches; C_FI={c_fi:.4f} over {sweep} configs (median {np.median(norm):.4f})"
    return CriterionResult(11, "congruence energy", ok, detail)


def criterion_12(fast: bool = False) -> CriterionResult:
    hi = 800 if fast else 3000
    vals = []
    worst, where = 0.0, None
    for q in primes_between(501, hi):
        for lbl, v in long_sum_ratios(q, 0.05).items():
            vals.append(v)
            if v > worst:
                worst, where = v, f"{q}:{lbl}"
    # batch route against the per-character function at the maximiser
    q0, l0 = (int(x) for x in where.split(":"))
    cross = abs(long_sum_ratio(character(q0, l0), 0.05).value - worst)
    vals = np.array(vals)
    qs = np.quantile(vals, [0.5, 0.9, 0.99])
    ok = worst <= thresholds.LONG_SUM_THRESHOLD and cross <= 1e-12
    detail = (
        f"{len(vals)} chars, max {worst:.4f} at {where} (threshold {thresholds.LONG_SUM_THRESHOLD}); "
        f"mean {vals.mean():.4f}, q50/q90/q99 {qs[0]:.4f}/{qs[1]:.4f}/{qs[2]:.4f}"
    )
    return CriterionResult(12, "long-sum boundedness", ok, detail)


CRITERIA: dict[int, Callable[[bool], CriterionResult]] = {
    1: criterion_1, 2: criterion_2, 3: criterion_3, 4: criterion_4, 5: criterion_5,
    6: criterion_6, 7: criterion_7, 8: criterion_8, 9: criterion_9, 10: criterion_10,
    11: criterion_11, 12: criterion_12,
}
TIME_LIMIT = {False: 600.0, True: 60.0}


def run_criterion(number: int, fast: bool = False) -> CriterionResult:
    t = time.perf_counter()
    res = CRITERIA[number](fast)
    res.seconds = time.perf_counter() - t
    return res


def timing_result(results: list[CriterionResult], fast: bool) -> CriterionResult:
    total = sum(r.seconds for r in results)
    limit = TIME_LIMIT[fast]
    mode = "fast" if fast else "full"
    return CriterionResult(13, "suite runtime", total <= limit, f"{mode} suite {total:.1f}s (limit {limit:.0f}s)", total)


def run_all(fast: bool = False, report: Callable[[str], None] | None = print) -> list[CriterionResult]:
    results = []
    for k in CRITERIA:
        res = run_criterion(k, fast)
        results.append(res)
        if report:
            report(res.line())
    results.append(timing_result(results, fast))
    if report:
        report(results[-1].line())
    return results
