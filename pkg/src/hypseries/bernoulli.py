"""Exact Bernoulli machinery.

Bernoulli numbers (B_1 = -1/2 convention), Bernoulli polynomials,
generalized Bernoulli polynomials B_n^{(order)}(t) of nonnegative integer
order, the two reduced families B_n^{(2m+2)}(m+1) and B_n^{(2m+1)}(m),
the Bell-polynomial route for the first reduced family, and the
gamma-ratio polynomial in z.

All values are exact ``Fraction``s.  Generalized values are computed by
raising the truncated power series x/(e^x - 1) to the requested order by
repeated squaring and applying the e^{tx} shift; the reduced families use
the even series (x/2)/sinh(x/2), which halves the work and makes the
vanishing of odd-index values automatic.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .exact import Rational, bell_incomplete, falling_factorial
from .errors import ParamError

__all__ = [
    "RationalPolynomial",
    "bernoulli_number",
    "bernoulli_poly",
    "bernoulli_poly_at",
    "gen_bernoulli_poly",
    "gen_bernoulli_row",
    "reduced_even",
    "reduced_odd",
    "gen_bernoulli_via_bell",
    "gamma_ratio_poly",
]


class RationalPolynomial:
    """Dense polynomial with exact rational coefficients.

    ``coeffs[i]`` is the coefficient of the i-th power of the variable.
    The trailing coefficient is nonzero unless the polynomial is zero.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, t) -> Rational:
        # Horner evaluation in exact arithmetic
        t = Fraction(t)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def __eq__(self, other) -> bool:
        return isinstance(other, RationalPolynomial) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"RationalPolynomial({list(self.coeffs)!r})"


@lru_cache(maxsize=None)
def _bernoulli_table(n: int) -> tuple[Fraction, ...]:
    """B_0..B_n via the convolution recurrence sum_k C(n+1,k) B_k = 0."""
    table = [Fraction(1)]
    for mm in range(1, n + 1):
        acc = Fraction(0)
        for k in range(mm):
            acc += comb(mm + 1, k) * table[k]
        table.append(-acc / (mm + 1))
    return tuple(table)


def bernoulli_number(n: int) -> Rational:
    """Bernoulli number B_n with B_1 = -1/2 (generating function x/(e^x-1))."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return _bernoulli_table(max(n, 8))[n]


def bernoulli_poly(n: int) -> RationalPolynomial:
    """Bernoulli polynomial B_n(t) = sum_k C(n,k) B_k t^{n-k}."""
    if n < 0:
        raise ValueError("n must be >= 0")
    B = _bernoulli_table(n)
    coeffs = [Fraction(0)] * (n + 1)
    for k in range(n + 1):
        coeffs[n - k] = comb(n, k) * B[k]
    return RationalPolynomial(coeffs)


def bernoulli_poly_at(n: int, t) -> Rational:
    """B_n(t) evaluated at an exact rational point."""
    if n < 0:
        raise ValueError("n must be >= 0")
    t = Fraction(t)
    B = _bernoulli_table(n)
    return sum(
        (comb(n, k) * B[k] * t ** (n - k) for k in range(n + 1)), Fraction(0)
    )


# --- truncated power series helpers (lists of Fractions, index = power) ---

def _ser_mul(a, b, N):
    out = [Fraction(0)] * (N + 1)
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        top = N - i
        for j, bj in enumerate(b):
            if j > top:
                break
            if bj:
                out[i + j] += ai * bj
    return out

def _ser_pow(a, e, N):
    result = [Fraction(1)] + [Fraction(0)] * N
    base = list(a[: N + 1]) + [Fraction(0)] * max(0, N + 1 - len(a))
    while e:
        if e & 1:
            result = _ser_mul(result, base, N)
        e >>= 1
        if e:
            base = _ser_mul(base, base, N)
    return result


@lru_cache(maxsize=None)
def gen_bernoulli_row(order: int, t: Rational, n_max: int) -> tuple[Fraction, ...]:
    """All B_n^{(order)}(t) for n = 0..n_max in one series expansion.

    Coefficient extraction from (x/(e^x-1))^order * e^{tx}.
    """
    if order < 0 or n_max < 0:
        raise ValueError("order and n_max must be >= 0")
    t = Fraction(t)
    N = n_max
    B = _bernoulli_table(N)
    base = [B[k] / factorial(k) for k in range(N + 1)]
    p = _ser_pow(base, order, N)
    if t:
        shift = [t**k / factorial(k) for k in range(N + 1)]
        p = _ser_mul(p, shift, N)
    return tuple(p[n] * factorial(n) for n in range(N + 1))


def gen_bernoulli_poly(n: int, order: int, t) -> Rational:
    """Generalized Bernoulli polynomial value B_n^{(order)}(t)."""
    if n < 0 or order < 0:
        raise ValueError("n and order must be >= 0")
    # widen the row so sweeps over n at fixed (order, t) share a cache entry
    return gen_bernoulli_row(order, Fraction(t), max(n, order))[n]


@lru_cache(maxsize=None)
def _csch_power_even_row(power: int, k_max: int) -> tuple[Fraction, ...]:
    """Coefficients a_k of ((x/2)/sinh(x/2))^power = sum_k a_k x^{2k}.

    The base series is even, so the expansion is done in y = x^2 with
    k_max + 1 coefficients.  a_k * (2k)! equals B_{2k}^{(power)}(power/2).
    """
    N = k_max
    B = _bernoulli_table(2 * N + 2)
    # (x/2)/sinh(x/2) = x e^{x/2} / (e^x - 1) = sum_n B_n(1/2) x^n / n!
    half = Fraction(1, 2)
    base = []
    for k in range(N + 1):
        n = 2 * k
        coeff = sum(
            (comb(n, j) * B[j] * half ** (n - j) for j in range(n + 1)),
            Fraction(0),
        )
        base.append(coeff / factorial(n))
    return tuple(_ser_pow(base, power, N))


def reduced_even(n: int, m: int) -> Rational:
    """Reduced Bernoulli value B_n^{(2m+2)}(m+1).

    The generating function ((x/2)/sinh(x/2))^{2m+2} is even, so odd-n
    values are exactly zero.
    """
    if n < 0 or m < 0:
        raise ValueError("n and m must be >= 0")
    if n % 2:
        return Fraction(0)
    row = _csch_power_even_row(2 * m + 2, max(n // 2, m + 1))
    return row[n // 2] * factorial(n)


def reduced_odd(n: int, m: int) -> Rational:
    """Reduced Bernoulli value B_n^{(2m+1)}(m).

    Computed as ((x/2)/sinh(x/2))^{2m+1} * e^{-x/2}; the first factor is
    an even series, the exponential shift supplies the odd part.
    """
    if n < 0 or m < 0:
        raise ValueError("n and m must be >= 0")
    even = _csch_power_even_row(2 * m + 1, max(n // 2, m + 1))
    acc = Fraction(0)
    half = Fraction(-1, 2)
    # coefficient of x^n in (sum_k even[k] x^{2k}) * e^{-x/2}
    for k in range(n // 2 + 1):
        acc += even[k] * half ** (n - 2 * k) / factorial(n - 2 * k)
    return acc * factorial(n)


def gen_bernoulli_via_bell(n: int, m: int) -> Rational:
    """B_n^{(2m+2)}(m+1) through incomplete Bell polynomials.

    Independent route: sum_{s=1}^{n} (2m+2)(2m+1)...(2m+3-s) *
    Y_{n,s}(B_1(1/2), ..., B_{n-s+1}(1/2)).  The falling-factorial
    prefactor kills all terms with s > 2m+2.
    """
    if n < 1 or m < 0:
        raise ParamError("need n >= 1 and m >= 0")
    xs = [bernoulli_poly_at(j, Fraction(1, 2)) for j in range(1, n + 1)]
    acc = Fraction(0)
    for s in range(1, n + 1):
        pref = falling_factorial(2 * m + 2, s)
        if pref == 0:
            continue
        acc += pref * bell_incomplete(n, s, xs[: n - s + 1])
    return acc


def gamma_ratio_poly(alpha: int, beta: int) -> RationalPolynomial:
    """The polynomial Gamma(z+alpha)/Gamma(z-beta) in z.

    Degree alpha+beta with coefficients
    (alpha+beta)!/i! * B^{(1+alpha+beta)}_{alpha+beta-i}(alpha)/(alpha+beta-i)!,
    equal to the expanded product (z+alpha-1)(z+alpha-2)...(z-beta).
    """
    if alpha < 0 or beta < 0:
        raise ValueError("alpha and beta must be >= 0")
    n = alpha + beta
    row = gen_bernoulli_row(n + 1, Fraction(alpha), n)
    coeffs = [
        Fraction(factorial(n), factorial(i)) * row[n - i] / factorial(n - i)
        for i in range(n + 1)
    ]
    return RationalPolynomial(coeffs)
