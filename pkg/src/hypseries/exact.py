"""Exact integer and rational combinatorics.

Everything in this module is computed in exact arithmetic: integers are
arbitrary-size Python ints and rationals are ``fractions.Fraction``.  The
functions here (binomials, signed Stirling numbers of the first kind,
rising/falling factorials, harmonic numbers, incomplete Bell polynomials)
are the primitives every higher layer builds on.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Sequence

from .errors import LengthMismatch

Rational = Fraction

__all__ = [
    "Rational",
    "IntTriangleCache",
    "binomial",
    "stirling_first",
    "pochhammer",
    "falling_factorial",
    "harmonic",
    "bell_incomplete",
]


class IntTriangleCache:
    """Grow-on-demand triangular table of integers.

    ``kind`` selects the defining recurrence:

    * ``"binomial"``:       C(n, k) = C(n-1, k-1) + C(n-1, k)
    * ``"stirling-first"``: s(n, k) = s(n-1, k-1) - (n-1) * s(n-1, k)
      (signed convention)

    Row ``n`` has ``n + 1`` entries.  Rows are tuples and never mutated
    after construction, so a cache instance may be shared freely.
    """

    def __init__(self, kind: str):
        if kind not in ("binomial", "stirling-first"):
            raise ValueError(f"unknown triangle kind: {kind!r}")
        self.kind = kind
        self._rows: list[tuple[int, ...]] = [(1,)]

    def row(self, n: int) -> tuple[int, ...]:
        if n < 0:
            raise ValueError("row index must be >= 0")
        while len(self._rows) <= n:
            prev = self._rows[-1]
            nn = len(self._rows)  # index of the row being built
            if self.kind == "binomial":
                row = tuple(
                    (prev[k - 1] if k >= 1 else 0) + (prev[k] if k < nn else 0)
                    for k in range(nn + 1)
                )
            else:
                row = tuple(
                    (prev[k - 1] if k >= 1 else 0)
                    - (nn - 1) * (prev[k] if k < nn else 0)
                    for k in range(nn + 1)
                )
            self._rows.append(row)
        return self._rows[n]

    def entry(self, n: int, k: int) -> int:
        if k < 0 or k > n:
            return 0
        return self.row(n)[k]


_STIRLING = IntTriangleCache("stirling-first")


def binomial(n: int, k: int) -> int:
    """Binomial coefficient C(n, k) with C(n, k) = 0 outside 0 <= k <= n."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if k < 0 or k > n:
        return 0
    return comb(n, k)


def stirling_first(n: int, k: int) -> int:
    """Signed Stirling number of the first kind s(n, k).

    Signed convention: x(x-1)...(x-n+1) = sum_k s(n, k) x^k, with the
    recurrence s(n+1, k) = s(n, k-1) - n*s(n, k).
    """
    if n < 0 or k < 0:
        raise ValueError("n and k must be >= 0")
    return _STIRLING.entry(n, k)


def pochhammer(x: Rational | int, n: int) -> Rational:
    """Rising factorial (x)_n = x (x+1) ... (x+n-1); equals 1 when n = 0."""
    if n < 0:
        raise ValueError("n must be >= 0")
    out = Fraction(1)
    x = Fraction(x)
    for j in range(n):
        out *= x + j
    return out


def falling_factorial(x: Rational | int, n: int) -> Rational:
    """Falling factorial x (x-1) ... (x-n+1); equals 1 when n = 0."""
    if n < 0:
        raise ValueError("n must be >= 0")
    out = Fraction(1)
    x = Fraction(x)
    for j in range(n):
        out *= x - j
    return out


def harmonic(m: int, r: int = 1) -> Rational:
    """Generalized harmonic number H_m^(r) = sum_{j=1}^{m} j^(-r), exactly.

    H_0^(r) = 0 for every order r >= 1.
    """
    if m < 0:
        raise ValueError("m must be >= 0")
    if r < 1:
        raise ValueError("r must be >= 1")
    return sum((Fraction(1, j**r) for j in range(1, m + 1)), Fraction(0))


def bell_incomplete(n: int, k: int, x: Sequence[Rational | int]) -> Rational:
    """Incomplete Bell polynomial Y_{n,k}(x_1, ..., x_{n-k+1}), exactly.

    Computed with the recurrence
        Y_{n,k} = sum_{j=1}^{n-k+1} C(n-1, j-1) x_j Y_{n-j,k-1},
    which costs O(n^2 k) exact operations (the partition-sum definition is
    kept only as a test oracle).  The argument list must have length
    exactly n - k + 1; the empty list is allowed for n = k = 0.
    """
    if n < 0 or k < 0 or k > n:
        raise ValueError("need 0 <= k <= n")
    expected = n - k + 1
    if len(x) != expected and not (n == 0 and len(x) == 0):
        raise LengthMismatch(
            f"Y_{{{n},{k}}} needs {expected} arguments, got {len(x)}"
        )
    xs = [Fraction(v) for v in x]
    # table[nn][kk] built bottom-up over kk
    prev = [Fraction(1)] + [Fraction(0)] * n  # Y_{nn,0} = [nn == 0]
    for kk in range(1, k + 1):
        cur = [Fraction(0)] * (n + 1)
        for nn in range(kk, n + 1):
            acc = Fraction(0)
            for j in range(1, min(nn - kk + 1, len(xs)) + 1):
                acc += comb(nn - 1, j - 1) * xs[j - 1] * prev[nn - j]
            cur[nn] = acc
        prev = cur
    return prev[n]
