"""Linearity coefficients between hyperbolic and Lambert series.

The binomial C(k+m, k-m-1), viewed as a polynomial in k, is odd of degree
2m+1; the combination C(k+m-1, k-m-1) + C(k+m, k-m) is even of degree 2m.
Their coefficients

    C(k+m, k-m-1)                       = 1/(2m+1)! * sum_i c_{2i+1}^{(m)} k^{2i+1}
    C(k+m-1, k-m-1) + C(k+m, k-m)       = 1/(2m)!   * sum_i d_{2i}^{(m)}  k^{2i}

are the weights that express the cosecant series as linear combinations of
Lambert series.  Four independent routes compute them:

* ``binomial-expansion``: exact expansion of the defining integer products
  (the reference oracle, no special-function dependencies);
* ``gen-bernoulli``: special values of generalized Bernoulli polynomials;
* ``stirling-bernoulli``: signed Stirling numbers of the first kind plus
  ordinary Bernoulli polynomials;
* ``harmonic-closed-form``: closed forms in generalized harmonic numbers,
  available only for the first few indices (entries outside the closed
  forms' validity are omitted, i.e. ``None``).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .bernoulli import bernoulli_number, bernoulli_poly_at, reduced_even, reduced_odd
from .errors import RouteUnsupported
from .exact import Rational, harmonic, pochhammer, stirling_first

__all__ = ["ROUTES", "CoeffTable", "c_table", "d_table"]

ROUTES = (
    "binomial-expansion",
    "gen-bernoulli",
    "stirling-bernoulli",
    "harmonic-closed-form",
)


@dataclass(frozen=True)
class CoeffTable:
    """Coefficient table for one m.

    ``values[i]`` holds c_{2i+1}^{(m)} (kind "c") or d_{2i}^{(m)} (kind
    "d") for i = 0..m; ``None`` marks an entry the route cannot produce.
    Wrong-parity coefficients are identically zero and not stored.
    """

    m: int
    kind: str
    values: tuple[Rational | None, ...]
    route: str

    def __post_init__(self):
        if self.kind not in ("c", "d"):
            raise ValueError("kind must be 'c' or 'd'")
        if len(self.values) != self.m + 1:
            raise ValueError("table must have m+1 entries")

    def __getitem__(self, i: int) -> Rational | None:
        return self.values[i]


def _poly_mul(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return out


def _product_poly(lo: int, hi: int) -> list[Fraction]:
    """Coefficients in k of the product (k+lo)(k+lo+1)...(k+hi)."""
    p = [Fraction(1)]
    for r in range(lo, hi + 1):
        p = _poly_mul(p, [Fraction(r), Fraction(1)])
    return p


def _c_binomial(m: int) -> list[Fraction]:
    p = _product_poly(-m, m)  # (k+m)(k+m-1)...(k-m), 2m+1 factors
    return [p[2 * i + 1] for i in range(m + 1)]


def _d_binomial(m: int) -> list[Fraction]:
    p1 = _product_poly(-m, m - 1)      # (k+m-1)...(k-m)
    p2 = _product_poly(-m + 1, m)      # (k+m)...(k-m+1)
    p = [a + b for a, b in zip(p1, p2)]
    return [p[2 * i] for i in range(m + 1)]


def _c_gen_bernoulli(m: int) -> list[Fraction]:
    return [
        Fraction(factorial(2 * m + 1), factorial(2 * k + 1))
        * reduced_even(2 * m - 2 * k, m)
        / factorial(2 * m - 2 * k)
        for k in range(m + 1)
    ]


def _d_gen_bernoulli(m: int) -> list[Fraction]:
    return [
        Fraction(2 * factorial(2 * m), factorial(2 * k) * factorial(2 * m - 2 * k))
        * reduced_odd(2 * m - 2 * k, m)
        for k in range(m + 1)
    ]


def _c_stirling(m: int) -> list[Fraction]:
    out = []
    for half in range(m + 1):
        i = 2 * half + 1
        acc = Fraction(0)
        for j in range(i - 1, 2 * m + 1):
            s = stirling_first(2 * m, j)
            if s == 0:
                continue
            acc += (
                Fraction(2 * m + 1, j + 1)
                * s
                * pochhammer(j + 2 - i, i)
                * bernoulli_poly_at(j + 1 - i, m)
            )
        out.append(acc / factorial(i))
    return out


def _d_stirling(m: int) -> list[Fraction]:
    out = []
    for half in range(m + 1):
        i = 2 * half
        if i == 0:
            if m == 0:
                # Gamma(k)/Gamma(k) + Gamma(k+1)/Gamma(k+1): empty products
                out.append(Fraction(2))
                continue
            # the i = 0 derivative keeps the constant terms of the
            # Bernoulli-polynomial representation, hence the -B_{j+1}
            acc = Fraction(0)
            for j in range(0, 2 * m):
                s = stirling_first(2 * m - 1, j)
                if s == 0:
                    continue
                acc += Fraction(4 * m, j + 1) * s * (
                    bernoulli_poly_at(j + 1, m) - bernoulli_number(j + 1)
                )
            out.append(acc)
            continue
        acc = Fraction(0)
        for j in range(i - 1, 2 * m):
            s = stirling_first(2 * m - 1, j)
            if s == 0:
                continue
            acc += (
                Fraction(4 * m, j + 1)
                * s
                * pochhammer(j + 2 - i, i)
                * bernoulli_poly_at(j + 1 - i, m)
            )
        out.append(acc / factorial(i))
    return out


def _c_harmonic(m: int) -> list[Fraction | None]:
    """Closed forms for c_1, c_3, c_5, c_7 (validity floors m >= 0,1,2,3)."""
    out: list[Fraction | None] = [None] * (m + 1)
    msq = Fraction(factorial(m)) ** 2
    sign = 1 if m % 2 == 0 else -1
    out[0] = sign * msq
    if m >= 1:
        h2 = harmonic(m, 2)
        out[1] = -sign * msq * h2
    if m >= 2:
        h4 = harmonic(m, 4)
        out[2] = sign * msq * (h2 * h2 - h4) / 2
    if m >= 3:
        h6 = harmonic(m, 6)
        out[3] = -sign * msq * (h2**3 - 3 * h2 * h4 + 2 * h6) / 6
    return out


def _d_harmonic(m: int) -> list[Fraction | None]:
    """Closed forms for d_0, d_2, d_4, d_6 (floors m >= 0,1,2,3)."""
    out: list[Fraction | None] = [None] * (m + 1)
    if m == 0:
        out[0] = Fraction(2)
        return out
    out[0] = Fraction(0)
    m1sq = Fraction(factorial(m - 1)) ** 2
    sign = 1 if m % 2 == 0 else -1
    out[1] = -sign * 2 * m1sq
    if m >= 2:
        h2 = harmonic(m - 1, 2)
        out[2] = sign * 2 * m1sq * h2
    if m >= 3:
        h4 = harmonic(m - 1, 4)
        out[3] = -sign * m1sq * (h2 * h2 - h4)
    return out


_C_ROUTES = {
    "binomial-expansion": _c_binomial,
    "gen-bernoulli": _c_gen_bernoulli,
    "stirling-bernoulli": _c_stirling,
    "harmonic-closed-form": _c_harmonic,
}

_D_ROUTES = {
    "binomial-expansion": _d_binomial,
    "gen-bernoulli": _d_gen_bernoulli,
    "stirling-bernoulli": _d_stirling,
    "harmonic-closed-form": _d_harmonic,
}


def c_table(m: int, route: str = "binomial-expansion") -> CoeffTable:
    """Table of c_{2i+1}^{(m)}, i = 0..m, computed by the given route."""
    if m < 0:
        raise ValueError("m must be >= 0")
    try:
        fn = _C_ROUTES[route]
    except KeyError:
        raise RouteUnsupported(f"unknown route {route!r}") from None
    return CoeffTable(m=m, kind="c", values=tuple(fn(m)), route=route)


def d_table(m: int, route: str = "binomial-expansion") -> CoeffTable:
    """Table of d_{2i}^{(m)}, i = 0..m, computed by the given route."""
    if m < 0:
        raise ValueError("m must be >= 0")
    try:
        fn = _D_ROUTES[route]
    except KeyError:
        raise RouteUnsupported(f"unknown route {route!r}") from None
    return CoeffTable(m=m, kind="d", values=tuple(fn(m)), route=route)
