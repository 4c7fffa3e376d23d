"""Tests for Bernoulli numbers, polynomials, and the reduced families."""

from fractions import Fraction
from math import comb, factorial

import pytest

from hypseries.bernoulli import (
    RationalPolynomial,
    bernoulli_number,
    bernoulli_poly,
    bernoulli_poly_at,
    gamma_ratio_poly,
    gen_bernoulli_poly,
    gen_bernoulli_via_bell,
    reduced_even,
    reduced_odd,
)


def akiyama_tanigawa(n):
    """Oracle: B_0..B_n by the Akiyama-Tanigawa transform (B1 = +1/2),
    flipped to the B1 = -1/2 convention."""
    A = [Fraction(0)] * (n + 1)
    out = []
    for m in range(n + 1):
        A[m] = Fraction(1, m + 1)
        for j in range(m, 0, -1):
            A[j - 1] = j * (A[j - 1] - A[j])
        out.append(A[0])
    out = list(out)
    if n >= 1:
        out[1] = -out[1]
    return out


def test_bernoulli_numbers_against_akiyama_tanigawa():
    oracle = akiyama_tanigawa(40)
    for n in range(41):
        assert bernoulli_number(n) == oracle[n]


def test_bernoulli_number_examples():
    assert bernoulli_number(0) == 1
    assert bernoulli_number(1) == Fraction(-1, 2)
    assert bernoulli_number(2) == Fraction(1, 6)
    assert bernoulli_number(3) == 0
    assert all(bernoulli_number(2 * k + 1) == 0 for k in range(1, 15))


def test_bernoulli_poly_examples():
    assert bernoulli_poly(0)(Fraction(7, 3)) == 1
    assert bernoulli_poly(1)(Fraction(1, 2)) == 0
    assert bernoulli_poly(2)(Fraction(1, 2)) == Fraction(-1, 12)
    # B_2(t) = t^2 - t + 1/6
    assert bernoulli_poly(2).coeffs == (Fraction(1, 6), Fraction(-1), Fraction(1))


def test_bernoulli_poly_at_matches_poly():
    for n in range(0, 12):
        p = bernoulli_poly(n)
        for t in (Fraction(0), Fraction(1), Fraction(-3, 7), Fraction(5)):
            assert bernoulli_poly_at(n, t) == p(t)


def test_rational_polynomial_strips_trailing_zeros():
    p = RationalPolynomial([1, 2, 0, 0])
    assert p.coeffs == (Fraction(1), Fraction(2))
    assert RationalPolynomial([0, 0]).coeffs == ()


def seq_gen_bernoulli(n, order, t):
    """Oracle: B_n^{(order)}(t) by sequential series multiplication
    (no repeated squaring), straight from the generating function."""
    N = n
    B = [bernoulli_number(k) for k in range(N + 1)]
    base = [B[k] / factorial(k) for k in range(N + 1)]
    acc = [Fraction(1)] + [Fraction(0)] * N
    for _ in range(order):
        out = [Fraction(0)] * (N + 1)
        for i, ai in enumerate(acc):
            if ai:
                for j in range(N + 1 - i):
                    out[i + j] += ai * base[j]
        acc = out
    t = Fraction(t)
    shift = [t**k / factorial(k) for k in range(N + 1)]
    total = sum(acc[i] * shift[n - i] for i in range(n + 1))
    return total * factorial(n)


def test_gen_bernoulli_against_sequential_oracle():
    for order in range(0, 7):
        for n in range(0, 8):
            for t in (Fraction(0), Fraction(1), Fraction(3), Fraction(-1, 2)):
                assert gen_bernoulli_poly(n, order, t) == seq_gen_bernoulli(n, order, t)


def test_gen_bernoulli_examples():
    for m in range(5):
        assert gen_bernoulli_poly(0, m, Fraction(2, 3)) == 1
    assert gen_bernoulli_poly(2, 4, 2) == Fraction(-1, 3)
    assert gen_bernoulli_poly(2, 3, 1) == 0
    assert gen_bernoulli_poly(1, 1, 0) == Fraction(-1, 2)


def test_reduced_even_matches_general_route():
    for m in range(0, 8):
        for n in range(0, 2 * m + 4):
            assert reduced_even(n, m) == gen_bernoulli_poly(n, 2 * m + 2, m + 1)


def test_reduced_odd_matches_general_route():
    for m in range(0, 8):
        for n in range(0, 2 * m + 3):
            assert reduced_odd(n, m) == gen_bernoulli_poly(n, 2 * m + 1, m)


def test_reduced_even_examples():
    # closed form (-1)^m (m!)^2/(2m+1) at n = 2m; the m = 2 instance is 4/5
    for m in range(0, 12):
        assert reduced_even(2 * m, m) == Fraction((-1) ** m * factorial(m) ** 2, 2 * m + 1)
    assert reduced_even(4, 2) == Fraction(4, 5)
    assert reduced_even(4, 1) == Fraction(11, 30)
    assert reduced_even(2, 1) == Fraction(-1, 3)


def test_reduced_even_odd_indices_vanish():
    for m in range(0, 10):
        for k in range(0, m + 3):
            assert reduced_even(2 * k + 1, m) == 0


def test_reduced_odd_zeros():
    for m in range(1, 12):
        assert reduced_odd(2 * m, m) == 0
    # the odd-order family has nonzero odd-index values (no even symmetry)
    assert reduced_odd(1, 0) == Fraction(-1, 2)


def test_gen_bernoulli_via_bell():
    assert gen_bernoulli_via_bell(2, 0) == Fraction(-1, 6)
    for m in range(0, 6):
        assert gen_bernoulli_via_bell(1, m) == 0
    assert gen_bernoulli_via_bell(4, 1) == reduced_even(4, 1) == Fraction(11, 30)
    for m in range(0, 5):
        for n in range(1, 10):
            assert gen_bernoulli_via_bell(n, m) == reduced_even(n, m)


def expand_product(alpha, beta):
    """Oracle: (z+alpha-1)(z+alpha-2)...(z-beta) expanded directly."""
    coeffs = [Fraction(1)]
    for r in range(-beta, alpha):
        shifted = [Fraction(0)] + coeffs
        coeffs = [s + r * c for s, c in zip(shifted, coeffs + [Fraction(0)])]
    return coeffs


def test_gamma_ratio_poly():
    assert gamma_ratio_poly(1, 0).coeffs == (Fraction(0), Fraction(1))  # z
    assert gamma_ratio_poly(2, 1).coeffs == (Fraction(0), Fraction(-1), Fraction(0), Fraction(1))  # z^3 - z
    for alpha in range(0, 8):
        for beta in range(0, 8):
            if alpha + beta > 0:
                assert list(gamma_ratio_poly(alpha, beta).coeffs) == expand_product(alpha, beta)[: alpha + beta + 1]


def test_gamma_ratio_poly_oddness():
    # Gamma(z+m+1)/Gamma(z-m) is an odd polynomial in z
    for m in range(0, 9):
        p = gamma_ratio_poly(m + 1, m)
        for i in range(0, p.degree + 1, 2):
            assert p.coeffs[i] == 0


def test_elezovic_recurrence():
    for m in range(0, 8):
        for n in range(1, 10):
            rhs = -Fraction(m + 1, n) * sum(
                comb(2 * n, 2 * k) * bernoulli_number(2 * n - 2 * k) * reduced_even(2 * k, m)
                for k in range(n)
            )
            assert reduced_even(2 * n, m) == rhs


def test_reduced_even_closed_forms_in_m():
    for m in range(0, 15):
        mf = Fraction(m)
        assert reduced_even(2, m) == -(mf + 1) / 6
        assert reduced_even(4, m) == (5 * mf**2 + 11 * mf + 6) / 60
        assert reduced_even(6, m) == (-35 * mf**3 - 126 * mf**2 - 151 * mf - 60) / 504
        assert reduced_even(8, m) == (175 * mf**4 + 910 * mf**3 + 1781 * mf**2 + 1550 * mf + 504) / 2160
        assert reduced_even(10, m) == (
            -385 * mf**5 - 2695 * mf**4 - 7601 * mf**3 - 10769 * mf**2 - 7638 * mf - 2160
        ) / 3168


def test_input_validation():
    with pytest.raises(ValueError):
        bernoulli_number(-1)
    with pytest.raises(ValueError):
        gen_bernoulli_poly(1, -2, 0)
    with pytest.raises(ValueError):
        reduced_even(-1, 0)


def test_gamma_ratio_poly_high_degree():
    for alpha, beta in ((10, 10), (13, 7), (0, 20), (20, 0), (9, 11)):
        assert list(gamma_ratio_poly(alpha, beta).coeffs) == expand_product(alpha, beta)
