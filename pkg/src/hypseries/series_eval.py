"""Arbitrary-precision evaluation with rigorous truncation bounds.

All sums run at the requested precision plus 32 guard bits (the guard
absorbs cancellation inside powers of sinh).  A sum stops once a proven
geometric envelope of the omitted tail falls below
2^-(prec+16) * max(1, |partial sum|); hitting the term cap first raises
``PrecisionError``.  Each result is returned as a ``SeriesValue`` carrying
the value, the tail envelope actually proven, and the number of terms.

The key inequalities behind the envelopes, for a = |Re z| > 0:

    |sinh z|  >= sinh(|Re z|)          (|sinh(x+iy)|^2 = sinh^2 x + sin^2 y)
    |cosh z|  <= cosh(|Re z|)
    sinh((n+1)a) >= e^a sinh(na),  cosh((n+1)a) <= e^a cosh(na)

so the modulus of term n of the cosecant-type series is dominated by a
decreasing envelope with ratio at most e^{-(m+1-gamma) a}.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from math import factorial

import mpmath as mp

from .bernoulli import bernoulli_number
from .coefficients import c_table, d_table
from .errors import DomainError, ParamError, PrecisionError
from .exact import binomial
from .polynomials import PiNumber, PiPolynomial

__all__ = [
    "GUARD_BITS",
    "SeriesValue",
    "eval_S",
    "eval_S_cosh",
    "eval_S_sinh",
    "eval_S_exponential",
    "eval_lambert",
    "zeta_int",
    "polygamma_one",
    "qpolygamma_one",
    "eval_pi_poly",
    "reduce_cosh",
    "reduce_sinh_even",
    "reduce_sinh_odd",
    "lambert_combination_S",
    "lambert_combination_S_sinh",
    "sigma_of",
    "to_mp",
]

GUARD_BITS = 32
_DEFAULT_MAX_TERMS = 10**7


def _max_terms() -> int:
    env = os.environ.get("HYPSERIES_MAX_TERMS")
    return int(env) if env else _DEFAULT_MAX_TERMS


@dataclass
class SeriesValue:
    """A computed series value with a proven bound on the omitted tail."""

    value: mp.mpc
    tail_bound: mp.mpf
    terms_used: int

    def __complex__(self):
        return complex(self.value)


def _require_prec(prec: int):
    if prec < 16:
        raise PrecisionError("prec must be >= 16")


def to_mp(x, prec: int):
    """Convert x to an mpf/mpc at the given working precision.

    Strings and Fractions are converted exactly at target precision
    (no intermediate double rounding).
    """
    with mp.workprec(prec):
        if isinstance(x, Fraction):
            return mp.mpf(x.numerator) / x.denominator
        if isinstance(x, tuple) and len(x) == 2:
            return mp.mpc(to_mp(x[0], prec), to_mp(x[1], prec))
        return mp.mpmathify(x)


def sigma_of(phi) -> int:
    """sgn(Re phi); raises DomainError on the imaginary axis."""
    re = mp.re(phi)
    if re == 0:
        raise DomainError("Re(phi) = 0: the series diverges on the imaginary axis")
    return 1 if re > 0 else -1


def _sum_with_envelope(term_fn, envelope_fn, ratio, prec, *, start=1):
    """Sum term_fn(n) from n = start with a decreasing-envelope tail bound.

    envelope_fn(n) must dominate |term_fn(n)| and the envelope must decay
    at least geometrically with the given ratio < 1.  Returns
    (value, tail_bound, terms_used) at the current mp precision.
    """
    wprec = mp.mp.prec
    tol_scale = mp.mpf(2) ** (-(prec + 16))
    cap = _max_terms()
    one_minus_r = 1 - ratio
    total = mp.mpf(0)
    absum = mp.mpf(0)
    n = start
    used = 0
    while True:
        t = term_fn(n)
        total = total + t
        used += 1
        t_abs = abs(t)
        absum += t_abs
        # envelope checks are only worth doing once the term is small
        if t_abs <= tol_scale * max(1, abs(total)):
            tail = envelope_fn(n + 1) / one_minus_r
            if tail <= tol_scale * max(1, abs(total)):
                # widen by the worst-case accumulation rounding so the
                # reported bound covers the computed value, not only the
                # mathematically omitted tail
                tail += used * mp.mpf(2) ** (-(wprec - 2)) * absum
                return total, tail, used
        if used >= cap:
            raise PrecisionError(
                f"term cap {cap} reached before the tail bound closed "
                f"(set HYPSERIES_MAX_TERMS to override)"
            )
        n += 1


def eval_S(m: int, phi, prec: int = 128) -> SeriesValue:
    """Cosecant series sum_n phi^{2m+2} / sinh^{2m+2}(n phi / 2)."""
    return eval_S_cosh(m, 0, phi, prec)


def eval_S_cosh(m: int, gamma: int, phi, prec: int = 128) -> SeriesValue:
    """Cosh-weighted series sum_n phi^{2m+2} cosh^gamma(n phi) / sinh^{2m+2}(n phi / 2)."""
    _require_prec(prec)
    if m < 0:
        raise ParamError("m must be >= 0")
    if gamma >= m + 1:
        raise DomainError("need gamma < m + 1 for convergence")
    wprec = prec + GUARD_BITS
    with mp.workprec(wprec):
        z = to_mp(phi, wprec)
        sigma_of(z)  # domain check
        a = abs(mp.re(z))
        phi_pow = z ** (2 * m + 2)
        ratio = mp.e ** (-(m + 1 - gamma) * a)

        def term(n):
            s = mp.sinh(n * z / 2) ** (2 * m + 2)
            if gamma:
                return phi_pow * mp.cosh(n * z) ** gamma / s
            return phi_pow / s

        def env(n):
            s = mp.sinh(n * a / 2) ** (2 * m + 2)
            if gamma:
                return abs(phi_pow) * mp.cosh(n * a) ** gamma / s
            return abs(phi_pow) / s

        value, tail, used = _sum_with_envelope(term, env, ratio, prec)
    return SeriesValue(value=value, tail_bound=tail, terms_used=used)


def eval_S_sinh(m: int, gamma: int, phi, prec: int = 128) -> SeriesValue:
    """Sinh-weighted series sum_n phi^{2m+2} sinh^gamma(n phi) / sinh^{2m+2}(n phi / 2)."""
    _require_prec(prec)
    if m < 0:
        raise ParamError("m must be >= 0")
    if gamma >= m + 1:
        raise DomainError("need gamma < m + 1 for convergence")
    wprec = prec + GUARD_BITS
    with mp.workprec(wprec):
        z = to_mp(phi, wprec)
        sigma_of(z)
        a = abs(mp.re(z))
        phi_pow = z ** (2 * m + 2)
        ratio = mp.e ** (-(m + 1 - gamma) * a)

        def term(n):
            return phi_pow * mp.sinh(n * z) ** gamma / mp.sinh(n * z / 2) ** (2 * m + 2)

        def env(n):
            # |sinh(n z)| <= cosh(n a)
            return abs(phi_pow) * mp.cosh(n * a) ** gamma / mp.sinh(n * a / 2) ** (2 * m + 2)

        value, tail, used = _sum_with_envelope(term, env, ratio, prec)
    return SeriesValue(value=value, tail_bound=tail, terms_used=used)


def eval_S_exponential(m: int, phi, prec: int = 128) -> SeriesValue:
    """Cosecant series through its exponential representation:

    (2 phi)^{2m+2} sum_{k >= m+1} C(k+m, k-m-1) e^{-sigma k phi} / (1 - e^{-sigma k phi}).
    """
    _require_prec(prec)
    if m < 0:
        raise ParamError("m must be >= 0")
    wprec = prec + GUARD_BITS
    with mp.workprec(wprec):
        z = to_mp(phi, wprec)
        sigma = sigma_of(z)
        a = abs(mp.re(z))
        pref = (2 * z) ** (2 * m + 2)
        q_abs = mp.e ** (-a)
        qz = mp.e ** (-sigma * z)

        def term(k):
            qk = qz**k
            return binomial(k + m, k - m - 1) * qk / (1 - qk)

        def env(k):
            # C(k+m, k-m-1) <= (k+m)^{2m+1}/(2m+1)!  and  |1-q^k| >= 1-|q|^k
            return (
                mp.mpf(k + m) ** (2 * m + 1)
                / factorial(2 * m + 1)
                * q_abs**k
                / (1 - q_abs ** (m + 1))
            )

        # past k0 the polynomial growth is absorbed by a ratio margin
        k0 = max(m + 1, int(mp.ceil((4 * m + 4) / a)) + 1)
        ratio = mp.e ** (-a / 2)
        total = mp.mpf(0)
        for k in range(m + 1, k0):
            total += term(k)
        value, tail, used = _sum_with_envelope(term, env, ratio, prec, start=k0)
        value = pref * (total + value)
        tail = abs(pref) * tail
    return SeriesValue(value=value, tail_bound=tail, terms_used=used + k0 - m - 1)


def eval_lambert(phi, s: int, prec: int = 128) -> SeriesValue:
    """Lambert series sum_k k^s q^k / (1 - q^k) with q = e^{-phi}, Re phi > 0."""
    _require_prec(prec)
    wprec = prec + GUARD_BITS
    with mp.workprec(wprec):
        z = to_mp(phi, wprec)
        if mp.re(z) <= 0:
            raise DomainError("eval_lambert needs Re(phi) > 0 so that |q| < 1")
        q = mp.e ** (-z)
        q_abs = abs(q)
        a = mp.re(z)

        def term(k):
            qk = q**k
            return mp.mpf(k) ** s * qk / (1 - qk)

        def env(k):
            top = mp.mpf(k) ** s if s > 0 else mp.mpf(1)
            return top * q_abs**k / (1 - q_abs)

        if s > 0:
            # for k >= k0, (1+1/k)^s |q| <= e^{s/k0}|q| <= e^{-a/2} < 1
            k0 = max(1, int(mp.ceil(2 * s / a)) + 1)
            ratio = mp.e ** (-a / 2)
        else:
            k0 = 1
            ratio = q_abs
        total = mp.mpf(0)
        for k in range(1, k0):
            total += term(k)
        value, tail, used = _sum_with_envelope(term, env, ratio, prec, start=k0)
        value = total + value
    return SeriesValue(value=value, tail_bound=tail, terms_used=used + k0 - 1)


_EM_CORRECTIONS = 8  # Euler-Maclaurin correction terms for odd zeta


def _zeta_odd(s: int, wprec: int) -> mp.mpf:
    """zeta(s) for odd s >= 3 by Euler-Maclaurin with a proven remainder.

    zeta(s) = sum_{k<N} k^{-s} + N^{1-s}/(s-1) + N^{-s}/2
              + sum_{j=1}^{J} B_{2j}/(2j)! * (s)_{2j-1} * N^{-s-2j+1} + R,
    |R| <= |B_{2J+2}/(2J+2)! * (s)_{2J+1} * N^{-s-2J-1}| for real s > 1.
    """
    J = _EM_CORRECTIONS
    with mp.workprec(wprec + 16):
        target = mp.mpf(2) ** (-(wprec + 8))
        # remainder prefactor |B_{2J+2}| (s)_{2J+1} / (2J+2)!
        pref = abs(
            mp.mpf(bernoulli_number(2 * J + 2).numerator)
            / bernoulli_number(2 * J + 2).denominator
        )
        rising = mp.mpf(1)
        for t in range(2 * J + 1):
            rising *= s + t
        pref = pref * rising / factorial(2 * J + 2)
        N = 16
        while pref * mp.mpf(N) ** (-(s + 2 * J + 1)) > target:
            N *= 2
        total = mp.mpf(0)
        for k in range(N - 1, 0, -1):
            total += mp.mpf(k) ** (-s)
        total += mp.mpf(N) ** (1 - s) / (s - 1) + mp.mpf(N) ** (-s) / 2
        Npow = mp.mpf(N) ** (-s - 1)
        rising = mp.mpf(s)
        for j in range(1, J + 1):
            B = bernoulli_number(2 * j)
            total += (
                mp.mpf(B.numerator) / B.denominator / factorial(2 * j) * rising * Npow
            )
            Npow = Npow / (N * N)
            rising = rising * (s + 2 * j - 1) * (s + 2 * j)
        result = total
    return +result


def zeta_int(s: int, prec: int = 128) -> mp.mpf:
    """Riemann zeta at an integer s >= 2.

    Even s: exact Bernoulli formula zeta(2n) = (-1)^{n+1} B_{2n} (2 pi)^{2n}
    / (2 (2n)!).  Odd s: direct sum with Euler-Maclaurin tail correction.
    """
    _require_prec(prec)
    if s < 2:
        raise ParamError("zeta_int needs s >= 2")
    wprec = prec + GUARD_BITS
    with mp.workprec(wprec):
        if s % 2 == 0:
            n = s // 2
            B = bernoulli_number(s)
            val = (
                (-1) ** (n + 1)
                * mp.mpf(B.numerator)
                / B.denominator
                * (2 * mp.pi) ** s
                / (2 * factorial(s))
            )
            return +val
        return _zeta_odd(s, wprec)


def polygamma_one(n: int, prec: int = 128) -> mp.mpf:
    """psi^{(n)}(1) = (-1)^{n+1} n! zeta(n+1) for n >= 1.

    For odd n = 2i+1 this is evaluated through the exact Bernoulli form
    (-1)^{i} B_{2i+2} (2 pi)^{2i+2} / (2 (2i+2)) ... i.e. n! zeta(n+1)
    with zeta(even) expanded exactly; for even n it uses the odd-zeta
    evaluator.
    """
    _require_prec(prec)
    if n < 1:
        raise ParamError("polygamma_one needs n >= 1")
    wprec = prec + GUARD_BITS
    with mp.workprec(wprec):
        val = (-1) ** (n + 1) * factorial(n) * zeta_int(n + 1, prec)
        return +val


def qpolygamma_one(phi, s: int, prec: int = 128) -> SeriesValue:
    """q-polygamma at 1: psi^{(s)}_{e^{-phi}}(1) = (-phi)^{s+1} L_{e^{-phi}}(s)."""
    _require_prec(prec)
    if s < 1:
        raise ParamError("qpolygamma_one needs s >= 1")
    wprec = prec + GUARD_BITS
    lam = eval_lambert(phi, s, prec)
    with mp.workprec(wprec):
        z = to_mp(phi, wprec)
        factor = (-z) ** (s + 1)
        return SeriesValue(
            value=factor * lam.value,
            tail_bound=abs(factor) * lam.tail_bound,
            terms_used=lam.terms_used,
        )


def eval_pi_poly(P, phi, prec: int = 128):
    """Numeric value of a PiPolynomial or PiNumber at phi.

    pi is substituted at working precision; formal zeta(2k+1) symbols are
    resolved through ``zeta_int``.
    """
    _require_prec(prec)
    wprec = prec + GUARD_BITS
    with mp.workprec(wprec):
        if isinstance(P, PiNumber):
            acc = mp.mpf(0)
            for b, c in sorted(P.terms.items()):
                acc += mp.mpf(c.numerator) / c.denominator * mp.pi**b
            return +acc
        if not isinstance(P, PiPolynomial):
            raise TypeError("expected PiPolynomial or PiNumber")
        z = to_mp(phi, wprec)
        acc = mp.mpf(0)
        # deterministic order; Horner is not applicable across mixed pi powers,
        # so evaluate term by term (degrees stay small)
        for (a, b, zarg), c in P._sorted_terms():
            t = mp.mpf(c.numerator) / c.denominator * z**a * mp.pi**b
            if zarg:
                t *= zeta_int(zarg, prec)
            acc += t
        return +acc


# --- reductions of the cosh / sinh weighted series (cross-check route) ---

def reduce_cosh(m: int, gamma: int, phi, prec: int = 128) -> SeriesValue:
    """Binomial reduction sum_l C(gamma, l) 2^l phi^{2l} S_{2(m-l)+2}(phi).

    From cosh(n phi) = 2 sinh^2(n phi/2) + 1; the phi^{2l} factor restores
    the phi^{2(m-l)+2} normalization of the lower-order series.
    """
    if gamma < 0 or gamma >= m + 1:
        raise DomainError("need 0 <= gamma < m + 1")
    parts = [eval_S(m - l, phi, prec) for l in range(gamma + 1)]
    wprec = prec + GUARD_BITS
    with mp.workprec(wprec):
        z = to_mp(phi, wprec)
        weights = [binomial(gamma, l) * (2 * z * z) ** l for l in range(gamma + 1)]
        value = sum(w * p.value for w, p in zip(weights, parts))
        tail = sum(abs(w) * p.tail_bound for w, p in zip(weights, parts))
    return SeriesValue(value=value, tail_bound=tail,
                       terms_used=sum(p.terms_used for p in parts))


def reduce_sinh_even(m: int, gamma: int, phi, prec: int = 128) -> SeriesValue:
    """Even sinh weight gamma = 2p:
    4^p sum_l C(p, l) phi^{2(p+l)} S_{2(m-p-l)+2}(phi).

    From sinh^2(n phi) = 4 (sinh^2 + sinh^4)(n phi / 2), with phi powers
    restoring each summand's own normalization.
    """
    if gamma < 0 or gamma % 2 or gamma >= m + 1:
        raise DomainError("need even gamma with 0 <= gamma < m + 1")
    p = gamma // 2
    parts = [eval_S(m - p - l, phi, prec) for l in range(p + 1)]
    wprec = prec + GUARD_BITS
    with mp.workprec(wprec):
        z = to_mp(phi, wprec)
        weights = [
            mp.mpf(4) ** p * binomial(p, l) * z ** (2 * (p + l)) for l in range(p + 1)
        ]
        value = sum(w * q.value for w, q in zip(weights, parts))
        tail = sum(abs(w) * q.tail_bound for w, q in zip(weights, parts))
    return SeriesValue(value=value, tail_bound=tail,
                       terms_used=sum(q.terms_used for q in parts))


def reduce_sinh_odd(m: int, gamma: int, phi, prec: int = 128) -> SeriesValue:
    """Odd sinh weight gamma = 2p+1:
    4^p sum_l C(p, l) phi^{2(p+l)} S^{(sinh,1)}_{2(m-p-l)+2}(phi)."""
    if gamma < 1 or gamma % 2 == 0 or gamma >= m + 1:
        raise DomainError("need odd gamma with 1 <= gamma < m + 1")
    p = (gamma - 1) // 2
    parts = [eval_S_sinh(m - p - l, 1, phi, prec) for l in range(p + 1)]
    wprec = prec + GUARD_BITS
    with mp.workprec(wprec):
        z = to_mp(phi, wprec)
        weights = [
            mp.mpf(4) ** p * binomial(p, l) * z ** (2 * (p + l)) for l in range(p + 1)
        ]
        value = sum(w * q.value for w, q in zip(weights, parts))
        tail = sum(abs(w) * q.tail_bound for w, q in zip(weights, parts))
    return SeriesValue(value=value, tail_bound=tail,
                       terms_used=sum(q.terms_used for q in parts))


def lambert_combination_S(m: int, phi, prec: int = 128) -> SeriesValue:
    """(2 phi)^{2m+2}/(2m+1)! sum_i c_{2i+1}^{(m)} L_{e^{-sigma phi}}(2i+1).

    Independent route to S_{2m+2}(phi) through the Lambert linearity.
    """
    _require_prec(prec)
    wprec = prec + GUARD_BITS
    cs = c_table(m, "binomial-expansion")
    with mp.workprec(wprec):
        z = to_mp(phi, wprec)
        sigma = sigma_of(z)
        lam = [eval_lambert(sigma * z, 2 * i + 1, prec) for i in range(m + 1)]
        pref = (2 * z) ** (2 * m + 2) / factorial(2 * m + 1)
        value = pref * sum(
            mp.mpf(cs[i].numerator) / cs[i].denominator * lam[i].value
            for i in range(m + 1)
        )
        tail = abs(pref) * sum(
            abs(mp.mpf(cs[i].numerator) / cs[i].denominator) * lam[i].tail_bound
            for i in range(m + 1)
        )
    return SeriesValue(value=value, tail_bound=tail,
                       terms_used=sum(l.terms_used for l in lam))


def lambert_combination_S_sinh(m: int, phi, prec: int = 128) -> SeriesValue:
    """(2 sigma phi)^{2m+1} phi / (2m)! sum_i d_{2i}^{(m)} L_{e^{-sigma phi}}(2i)."""
    _require_prec(prec)
    if m < 1:
        raise DomainError("the sinh-weighted series needs m >= 1")
    wprec = prec + GUARD_BITS
    ds = d_table(m, "binomial-expansion")
    with mp.workprec(wprec):
        z = to_mp(phi, wprec)
        sigma = sigma_of(z)
        value = mp.mpf(0)
        tail = mp.mpf(0)
        used = 0
        pref = (2 * sigma * z) ** (2 * m + 1) * z / factorial(2 * m)
        for i in range(m + 1):
            if ds[i] == 0:
                continue
            lam = eval_lambert(sigma * z, 2 * i, prec)
            used += lam.terms_used
            coef = mp.mpf(ds[i].numerator) / ds[i].denominator
            value += coef * lam.value
            tail += abs(coef) * lam.tail_bound
        value = pref * value
        tail = abs(pref) * tail
    return SeriesValue(value=value, tail_bound=tail, terms_used=used)
