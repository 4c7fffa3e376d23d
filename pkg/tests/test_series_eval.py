"""Tests for arbitrary-precision series evaluation and tail bounds."""

import os
from fractions import Fraction

import mpmath as mp
import pytest

from hypseries.errors import DomainError, ParamError, PrecisionError
from hypseries.polynomials import PiNumber, calB, ramanujan
from hypseries.series_eval import (
    eval_S,
    eval_S_cosh,
    eval_S_exponential,
    eval_S_sinh,
    eval_lambert,
    eval_pi_poly,
    lambert_combination_S,
    lambert_combination_S_sinh,
    polygamma_one,
    qpolygamma_one,
    reduce_cosh,
    reduce_sinh_even,
    reduce_sinh_odd,
    zeta_int,
)


def close(a, b, bits, scale=1):
    # comparisons must not happen at the ambient 53-bit context
    with mp.workprec(bits + 96):
        return abs(a - b) <= mp.mpf(2) ** (-bits) * max(1, abs(scale))


# --- zeta / polygamma ---

def test_zeta_even_exact_formula():
    with mp.workprec(200):
        assert close(zeta_int(2, 160), mp.pi**2 / 6, 158)
        assert close(zeta_int(4, 160), mp.pi**4 / 90, 158)
        assert close(zeta_int(12, 160), mp.mpf(691) / 638512875 * mp.pi**12, 156)


def test_zeta_odd_against_brute_force():
    """Independent oracle: 10^6-term direct sum plus integral-type tail
    corrections 1/(2N^2) - 1/(2N^3) + 1/(4N^4)."""
    with mp.workprec(120):
        N = 10**6
        direct = mp.mpf(0)
        for k in range(N, 0, -1):
            direct += mp.mpf(k) ** (-3)
        tail = mp.mpf(1) / (2 * N**2) - mp.mpf(1) / (2 * N**3) + mp.mpf(1) / (4 * N**4)
        assert close(zeta_int(3, 96), direct + tail, 64)


def test_zeta_odd_standard_value():
    with mp.workprec(200):
        assert close(zeta_int(3, 160), mp.zeta(3), 158)
        assert close(zeta_int(5, 160), mp.zeta(5), 158)
        assert close(zeta_int(9, 160), mp.zeta(9), 158)


def test_zeta_domain():
    with pytest.raises(ParamError):
        zeta_int(1, 64)


def test_polygamma_one_values():
    with mp.workprec(200):
        assert close(polygamma_one(1, 160), mp.pi**2 / 6, 158)
        assert close(polygamma_one(3, 160), mp.pi**4 / 15, 156)
        assert close(polygamma_one(2, 160), -2 * mp.zeta(3), 156)
        assert close(polygamma_one(5, 160), mp.polygamma(5, 1), 150)


# --- the cosecant series ---

def test_eval_S_even_in_phi():
    for phi in (mp.mpf(2), mp.mpc(1, 3), mp.mpf("0.7")):
        a = eval_S(1, phi, 128)
        b = eval_S(1, -phi, 128)
        assert close(a.value, b.value, 120, scale=a.value)


def test_eval_S_small_phi_approaches_zeta_limit():
    v = eval_S(0, mp.mpf("0.001"), 128)
    with mp.workprec(160):
        assert abs(v.value - 2 * mp.pi**2 / 3) < mp.mpf("0.01")


def test_eval_S_matches_lambert_combination():
    for m in range(0, 5):
        for phi in (mp.mpf(10), mp.mpf(1), mp.mpf(-2), mp.mpc(1, 1)):
            a = eval_S(m, phi, 128)
            b = lambert_combination_S(m, phi, 128)
            assert close(a.value, b.value, 120, scale=a.value), (m, phi)


def test_eval_S_exponential_representation_agrees():
    for m in range(0, 4):
        for phi in (mp.mpf(1), mp.mpf(-3), mp.mpc(2, 1)):
            a = eval_S(m, phi, 128)
            b = eval_S_exponential(m, phi, 128)
            assert close(a.value, b.value, 118, scale=a.value), (m, phi)


def test_eval_S_domain_and_precision_errors():
    with pytest.raises(DomainError):
        eval_S(0, mp.mpc(0, 2), 64)
    with pytest.raises(PrecisionError):
        eval_S(0, 1, 8)
    with pytest.raises(DomainError):
        eval_lambert(mp.mpf(-1), 3, 64)
    with pytest.raises(DomainError):
        eval_lambert(mp.mpc(0, 1), 1, 64)


def test_term_cap_env_override(monkeypatch):
    monkeypatch.setenv("HYPSERIES_MAX_TERMS", "5")
    with pytest.raises(PrecisionError):
        eval_S(0, mp.mpf("0.05"), 64)
    monkeypatch.delenv("HYPSERIES_MAX_TERMS")
    eval_S(0, mp.mpf("0.05"), 64)  # fine without the cap


def test_precision_monotonicity():
    for m in (0, 2):
        a = eval_S(m, mp.mpf("1.5"), 128)
        b = eval_S(m, mp.mpf("1.5"), 256)
        assert abs(a.value - b.value) < mp.mpf(2) ** (-120) * abs(b.value)


def test_tail_bound_soundness():
    """A higher-precision run (more terms) moves the value by less than
    the reported tail bound."""
    for m in (0, 1, 4):
        for phi in (mp.mpf("0.5"), mp.mpf(5), mp.mpc("0.8", 2)):
            lo = eval_S(m, phi, 64)
            hi = eval_S(m, phi, 128)
            assert hi.terms_used >= lo.terms_used
            assert abs(lo.value - hi.value) <= lo.tail_bound, (m, phi)
    lam_lo = eval_lambert(mp.mpf("0.4"), 3, 64)
    lam_hi = eval_lambert(mp.mpf("0.4"), 3, 160)
    assert abs(lam_lo.value - lam_hi.value) <= lam_lo.tail_bound


# --- cosh / sinh weighted variants ---

def test_cosh_gamma_zero_equals_plain():
    a = eval_S(2, mp.mpf("1.2"), 128)
    b = eval_S_cosh(2, 0, mp.mpf("1.2"), 128)
    assert a.value == b.value


def test_weighted_series_domain():
    with pytest.raises(DomainError):
        eval_S_cosh(1, 2, 1, 64)
    with pytest.raises(DomainError):
        eval_S_sinh(0, 1, 1, 64)  # the m = 0 odd series diverges
    with pytest.raises(DomainError):
        reduce_sinh_odd(2, 2, 1, 64)


def test_sinh_series_is_odd():
    a = eval_S_sinh(1, 1, mp.mpf(2), 128)
    b = eval_S_sinh(1, 1, mp.mpf(-2), 128)
    with mp.workprec(200):
        assert abs(a.value + b.value) <= mp.mpf(2) ** (-120) * abs(a.value)


def test_sinh_series_vanishes_linearly_at_small_phi():
    v1 = eval_S_sinh(1, 1, mp.mpf("0.01"), 96).value
    v2 = eval_S_sinh(1, 1, mp.mpf("0.005"), 96).value
    # leading asymptotic term is 16 zeta(3) phi
    with mp.workprec(128):
        assert abs(v1 / (16 * mp.zeta(3) * mp.mpf("0.01")) - 1) < mp.mpf("0.01")
        assert abs(v1 / v2 - 2) < mp.mpf("0.02")


def brute_force_weighted(m, gamma, phi, kind, terms=400, prec=160):
    """Oracle: plain partial sum plus crude remainder check at moderate
    precision (fast geometric decay for the chosen arguments)."""
    with mp.workprec(prec):
        z = mp.mpmathify(phi)
        total = mp.mpf(0)
        for n in range(1, terms + 1):
            num = mp.cosh(n * z) ** gamma if kind == "cosh" else mp.sinh(n * z) ** gamma
            total += z ** (2 * m + 2) * num / mp.sinh(n * z / 2) ** (2 * m + 2)
        return total


def test_weighted_series_against_brute_force():
    v = eval_S_cosh(2, 1, mp.mpf(2), 128)
    assert close(v.value, brute_force_weighted(2, 1, 2, "cosh"), 110, scale=v.value)
    v = eval_S_sinh(3, 2, mp.mpf("1.5"), 128)
    assert close(v.value, brute_force_weighted(3, 2, "1.5", "sinh"), 110, scale=v.value)


def test_reductions_match_direct_sums():
    # S^{(2)}_6(3) = sum_l C(2,l) 2^l S_{6-2l}(3)
    direct = eval_S_cosh(2, 2, mp.mpf(3), 128)
    red = reduce_cosh(2, 2, mp.mpf(3), 128)
    assert close(direct.value, red.value, 112, scale=direct.value)
    direct = eval_S_sinh(3, 2, mp.mpf("1.5"), 128)
    red = reduce_sinh_even(3, 2, mp.mpf("1.5"), 128)
    assert close(direct.value, red.value, 112, scale=direct.value)
    direct = eval_S_sinh(3, 1, mp.mpf("1.5"), 128)
    red = reduce_sinh_odd(3, 1, mp.mpf("1.5"), 128)
    assert direct.value == red.value  # p = 0: the reduction is the series itself


def test_sinh_lambert_combination():
    for m in (1, 2):
        for phi in (mp.mpf(2), mp.mpf(-2)):
            a = eval_S_sinh(m, 1, phi, 128)
            b = lambert_combination_S_sinh(m, phi, 128)
            assert close(a.value, b.value, 118, scale=a.value), (m, phi)


# --- Lambert series ---

def test_lambert_zero_weight_limit():
    # q -> 0 (phi large): the series vanishes like q
    v = eval_lambert(mp.mpf(200), 1, 64)
    assert abs(v.value) < mp.mpf(10) ** -80


def test_lambert_negative_order():
    v = eval_lambert(mp.mpf(1), -1, 128)
    with mp.workprec(160):
        brute = mp.nsum(lambda k: mp.e ** (-k) / (k * (1 - mp.e ** (-k))), [1, mp.inf])
        assert close(v.value, brute, 118, scale=v.value)


def test_lambert_self_dual_value():
    # classical value pinned by the functional equation at phi = 2 pi
    with mp.workprec(200):
        v = eval_lambert(2 * mp.pi, 1, 160)
        assert close(v.value, mp.mpf(1) / 24 - 1 / (8 * mp.pi), 150)


# --- q-polygamma ---

def test_qpolygamma_definition():
    v = qpolygamma_one(mp.mpf(1), 1, 128)
    lam = eval_lambert(mp.mpf(1), 1, 128)
    assert v.value == lam.value  # (-phi)^2 = 1 at phi = 1


def test_qpolygamma_small_phi_asymptotics_odd():
    # psi^{(2i+1)}_q(1) ~ B_{2i+2}/(2(2i+2)) (phi^{2i+2} - (2 pi i)^{2i+2}),
    # error O(phi^{2i+4})
    i = 1
    with mp.workprec(220):
        for phi in (mp.mpf("0.01"), mp.mpf("0.001")):
            v = qpolygamma_one(phi, 2 * i + 1, 160).value
            B4 = mp.mpf(-1) / 30
            expected = B4 / (2 * 4) * (phi**4 - (2 * mp.pi) ** 4 * (-1) ** 2)
            assert abs(v - expected) < 2 * phi ** (2 * i + 4)


def test_qpolygamma_small_phi_asymptotics_even():
    # s = 2: psi^{(2)}_q(1) ~ psi^{(2)}(1) - sum_k (-1)^{k+1} B_{2+k} B_k
    # phi^{2+k} / ((2+k) k!)
    with mp.workprec(220):
        phi = mp.mpf("0.01")
        v = qpolygamma_one(phi, 2, 160).value
        expected = polygamma_one(2, 160)
        from hypseries.bernoulli import bernoulli_number

        for k in range(0, 10):
            B1, B2 = bernoulli_number(2 + k), bernoulli_number(k)
            if B1 == 0 or B2 == 0:
                continue
            num = mp.mpf((B1 * B2).numerator) / (B1 * B2).denominator
            expected -= (-1) ** (k + 1) * num * phi ** (2 + k) / ((2 + k) * mp.factorial(k))
        assert abs(v - expected) < phi**11


def test_qpolygamma_param_error():
    with pytest.raises(ParamError):
        qpolygamma_one(1, 0, 64)


# --- eval_pi_poly ---

def test_eval_pi_poly_values():
    with mp.workprec(200):
        v = eval_pi_poly(calB(0), 0, 160)
        assert close(v, 2 * mp.pi**2 / 3, 158)
        v = eval_pi_poly(ramanujan(0), 0, 160)
        assert close(v, 2 * mp.pi**2 / 3, 158)
        v = eval_pi_poly(calB(3), mp.mpc(0, 2 * mp.pi), 160)
        assert abs(v) < mp.mpf(2) ** (-152)
        v = eval_pi_poly(PiNumber({-4: Fraction(1, 64)}), 0, 160)
        assert close(v, 1 / (64 * mp.pi**4), 158)


def test_eval_pi_poly_resolves_zeta_symbols():
    from hypseries.polynomials import a_sinh_trunc

    P = a_sinh_trunc(1, 0)
    with mp.workprec(200):
        v = eval_pi_poly(P, mp.mpf(1), 160)
        expected = 16 * mp.zeta(3) - mp.mpf(2) / 3
        assert close(v, expected, 150)
