"""Exact polynomial families in phi with symbolic pi coefficients.

pi is never a float here: a term is an exact rational times phi^a * pi^b
(b even, possibly negative), optionally times a formal zeta(2k+1) symbol
that is resolved only at numeric evaluation time.  All imaginary units in
the defining sums appear squared, so (2*pi*i)^{2k} is expanded on
construction to (-4)^k * pi^{2k} and no complex symbols are needed.

Families built here:

* ``calB(m)``      -- the even polynomial attached to the cosecant series'
                      functional equation (its asymptotic part at 0);
* ``calA(m)``      -- the alternative assembly of the same polynomial;
* ``ramanujan(m)`` -- the classical Bernoulli-convolution polynomial;
* ``gen_ramanujan(m, s, r)`` -- the two-parameter generalization;
* ``frak_b(i)``    -- inversion numbers of the Lambert/cosecant linear
                      system (pure pi-power numbers);
* ``calS(m)``      -- the modular-transformation weight polynomials;
* ``a_sinh_trunc(m, K)`` -- truncated asymptotic series of the odd
                      (sinh-weighted) series, with formal zeta symbols.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from math import factorial

from .bernoulli import bernoulli_number, gen_bernoulli_row, reduced_even
from .coefficients import c_table, d_table
from .errors import DomainError
from .exact import Rational

__all__ = [
    "PiNumber",
    "PiPolynomial",
    "calB",
    "calA",
    "ramanujan",
    "gen_ramanujan",
    "frak_b",
    "calS",
    "a_sinh_trunc",
    "sigma_term_coefficient",
]


def _clean(d):
    return {k: v for k, v in d.items() if v != 0}


class PiNumber:
    """Exact number of the form sum_b q_b * pi^b with rational q_b.

    Powers b may be negative.  Supports +, -, *, equality and division by
    a single-term PiNumber (all that triangular back-substitution needs).
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        t = {}
        if terms:
            for b, c in dict(terms).items():
                c = Fraction(c)
                if c:
                    t[int(b)] = c
        self.terms = t

    @classmethod
    def from_rational(cls, q, pi_power: int = 0) -> "PiNumber":
        return cls({pi_power: Fraction(q)})

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "PiNumber") -> "PiNumber":
        t = dict(self.terms)
        for b, c in other.terms.items():
            t[b] = t.get(b, Fraction(0)) + c
        return PiNumber(_clean(t))

    def __sub__(self, other: "PiNumber") -> "PiNumber":
        return self + (-other)

    def __neg__(self) -> "PiNumber":
        return PiNumber({b: -c for b, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, PiNumber):
            t = {}
            for b1, c1 in self.terms.items():
                for b2, c2 in other.terms.items():
                    b = b1 + b2
                    t[b] = t.get(b, Fraction(0)) + c1 * c2
            return PiNumber(_clean(t))
        return PiNumber({b: c * Fraction(other) for b, c in self.terms.items()})

    __rmul__ = __mul__

    def divide_by_monomial(self, other: "PiNumber") -> "PiNumber":
        if len(other.terms) != 1:
            raise ValueError("divisor must be a single-term PiNumber")
        (b0, c0), = other.terms.items()
        return PiNumber({b - b0: c / c0 for b, c in self.terms.items()})

    def __eq__(self, other) -> bool:
        return isinstance(other, PiNumber) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        if not self.terms:
            return "PiNumber(0)"
        bits = [f"{c}*pi^{b}" if b else f"{c}" for b, c in sorted(self.terms.items())]
        return "PiNumber(" + " + ".join(bits) + ")"


_TERM_RE = re.compile(
    r"^\s*(?P<coef>-?\d+(?:/\d+)?)"
    r"(?:\s*\*\s*phi\^(?P<phi>-?\d+))?"
    r"(?:\s*\*\s*pi\^(?P<pi>-?\d+))?"
    r"(?:\s*\*\s*zeta\((?P<zeta>\d+)\))?\s*$"
)


class PiPolynomial:
    """Polynomial in phi whose coefficients are exact pi-power numbers.

    Terms are keyed by (phi_power, pi_power, zeta_arg); zeta_arg is 0 for
    plain terms and an odd integer >= 3 for coefficients that carry a
    formal zeta(zeta_arg) factor.  phi_power >= 0; pi_power is even and
    may be negative.  Zero coefficients are never stored.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        t = {}
        if terms:
            for key, c in dict(terms).items():
                if len(key) == 2:
                    a, b = key
                    z = 0
                else:
                    a, b, z = key
                c = Fraction(c)
                if c:
                    t[(int(a), int(b), int(z))] = c
        self.terms = t

    # --- basic algebra ---

    def __add__(self, other: "PiPolynomial") -> "PiPolynomial":
        t = dict(self.terms)
        for k, c in other.terms.items():
            t[k] = t.get(k, Fraction(0)) + c
        return PiPolynomial(_clean(t))

    def __sub__(self, other: "PiPolynomial") -> "PiPolynomial":
        return self + (-other)

    def __neg__(self) -> "PiPolynomial":
        return PiPolynomial({k: -c for k, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, PiPolynomial):
            t = {}
            for (a1, b1, z1), c1 in self.terms.items():
                for (a2, b2, z2), c2 in other.terms.items():
                    if z1 and z2:
                        raise ValueError("cannot multiply two zeta-carrying terms")
                    k = (a1 + a2, b1 + b2, z1 or z2)
                    t[k] = t.get(k, Fraction(0)) + c1 * c2
            return PiPolynomial(_clean(t))
        if isinstance(other, PiNumber):
            t = {}
            for (a, b, z), c in self.terms.items():
                for b2, c2 in other.terms.items():
                    k = (a, b + b2, z)
                    t[k] = t.get(k, Fraction(0)) + c * c2
            return PiPolynomial(_clean(t))
        return PiPolynomial({k: c * Fraction(other) for k, c in self.terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return isinstance(other, PiPolynomial) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_zero(self) -> bool:
        return not self.terms

    def has_zeta_symbols(self) -> bool:
        return any(z for (_, _, z) in self.terms)

    def phi_degree(self) -> int:
        return max((a for (a, _, _) in self.terms), default=0)

    def coefficient(self, phi_power: int, pi_power: int, zeta_arg: int = 0) -> Rational:
        return self.terms.get((phi_power, pi_power, zeta_arg), Fraction(0))

    def homogeneity_degree(self) -> int | None:
        """phi_power + pi_power when constant across terms, else None."""
        degs = {a + b for (a, b, _) in self.terms}
        if len(degs) == 1:
            return degs.pop()
        return None if degs else 0

    def substitute_phi_squared(self, value: PiNumber) -> PiNumber:
        """Exact substitution phi^2 := value (all phi powers must be even)."""
        out = PiNumber()
        for (a, b, z), c in self.terms.items():
            if z:
                raise ValueError("cannot substitute into zeta-carrying terms")
            if a % 2:
                raise ValueError("polynomial has an odd phi power")
            acc = PiNumber.from_rational(c, b)
            for _ in range(a // 2):
                acc = acc * value
            out = out + acc
        return out

    def at_two_pi_i(self) -> PiNumber:
        """Exact value under phi^2 := -4 pi^2 (i.e. phi = +-2*pi*i)."""
        return self.substitute_phi_squared(PiNumber({2: Fraction(-4)}))

    # --- canonical serialization (round-trips exactly) ---

    def _sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: (-kv[0][0], kv[0][1], kv[0][2]))

    def to_text(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for (a, b, z), c in self._sorted_terms():
            body = str(abs(c))
            if a:
                body += f" * phi^{a}"
            if b:
                body += f" * pi^{b}"
            if z:
                body += f" * zeta({z})"
            if not pieces:
                pieces.append(("-" if c < 0 else "") + body)
            else:
                pieces.append(("- " if c < 0 else "+ ") + body)
        return " ".join(pieces)

    @classmethod
    def from_text(cls, text: str) -> "PiPolynomial":
        text = text.strip()
        if text == "0":
            return cls()
        # split on top-level +/- that separate terms
        chunks = re.split(r"\s+([+-])\s+", text)
        terms = {}
        items = [(1, chunks[0])]
        for op, chunk in zip(chunks[1::2], chunks[2::2]):
            items.append((1 if op == "+" else -1, chunk))
        for sgn, chunk in items:
            m = _TERM_RE.match(chunk)
            if not m:
                raise ValueError(f"cannot parse term {chunk!r}")
            c = Fraction(m.group("coef")) * sgn
            a = int(m.group("phi") or 0)
            b = int(m.group("pi") or 0)
            z = int(m.group("zeta") or 0)
            key = (a, b, z)
            terms[key] = terms.get(key, Fraction(0)) + c
        return cls(terms)

    def to_json_dict(self) -> dict:
        out = {}
        for (a, b, z), c in self._sorted_terms():
            key = f"{a},{b}" if z == 0 else f"{a},{b},{z}"
            out[key] = str(c)
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict())

    @classmethod
    def from_json_dict(cls, d: dict) -> "PiPolynomial":
        terms = {}
        for key, val in d.items():
            parts = [int(p) for p in key.split(",")]
            if len(parts) == 2:
                parts.append(0)
            terms[tuple(parts)] = Fraction(val)
        return cls(terms)

    @classmethod
    def from_json(cls, s: str) -> "PiPolynomial":
        return cls.from_json_dict(json.loads(s))

    def __repr__(self):
        return f"PiPolynomial({self.to_text()!r})"


# ---------------------------------------------------------------------------
# polynomial families
# ---------------------------------------------------------------------------

def _bernoulli_convolution(m: int, inner: list[Rational]) -> PiPolynomial:
    """-2^{2m+1} sum_k (-4)^k pi^{2k} B_{2k}/(2k)! * inner[k]/(2m+2-2k)! * phi^{2m+2-2k}.

    ``inner[k]`` supplies the second factor of degree 2m+2-2k.
    """
    terms = {}
    for k in range(m + 2):
        c = (
            -(Fraction(2) ** (2 * m + 1))
            * Fraction(-4) ** k
            * bernoulli_number(2 * k)
            / factorial(2 * k)
            * inner[k]
            / factorial(2 * m + 2 - 2 * k)
        )
        if c:
            terms[(2 * m + 2 - 2 * k, 2 * k)] = c
    return PiPolynomial(terms)


def calB(m: int) -> PiPolynomial:
    """The even degree-(2m+2) polynomial of the cosecant functional equation."""
    if m < 0:
        raise ValueError("m must be >= 0")
    inner = [reduced_even(2 * m + 2 - 2 * k, m) for k in range(m + 2)]
    return _bernoulli_convolution(m, inner)


def ramanujan(m: int) -> PiPolynomial:
    """Classical Ramanujan polynomial of degree 2m+2."""
    if m < 0:
        raise ValueError("m must be >= 0")
    inner = [bernoulli_number(2 * m + 2 - 2 * k) for k in range(m + 2)]
    return _bernoulli_convolution(m, inner)


def gen_ramanujan(m: int, s: int, r: int) -> PiPolynomial:
    """Two-parameter generalization with inner values B^{(2s+r)}_n(s).

    Reduces to ``ramanujan(m)`` at (s, r) = (0, 1) and to ``calB(m)`` at
    (s, r) = (m+1, 0).
    """
    if m < 0 or s < 0:
        raise ValueError("m and s must be >= 0")
    order = 2 * s + r
    if order < 0:
        raise ValueError("need 2s + r >= 0")
    row = gen_bernoulli_row(order, Fraction(s), 2 * m + 2)
    inner = [row[2 * m + 2 - 2 * k] for k in range(m + 2)]
    return _bernoulli_convolution(m, inner)


def calA(m: int) -> PiPolynomial:
    """Alternative assembly of calB from the q-polygamma asymptotics.

    sum_i 2^{2m+1} B_{2i+2}/(2i+2)! * B^{(2m+2)}_{2m-2i}(m+1)/(2m-2i)! *
    phi^{2(m-i)} * (phi^{2i+2} - (2 pi i)^{2i+2}); must equal calB(m).
    """
    if m < 0:
        raise ValueError("m must be >= 0")
    terms = {}
    for i in range(m + 1):
        base = (
            Fraction(2) ** (2 * m + 1)
            * bernoulli_number(2 * i + 2)
            / factorial(2 * i + 2)
            * reduced_even(2 * m - 2 * i, m)
            / factorial(2 * m - 2 * i)
        )
        if not base:
            continue
        k1 = (2 * m + 2, 0)
        terms[k1] = terms.get(k1, Fraction(0)) + base
        k2 = (2 * (m - i), 2 * i + 2)
        terms[k2] = terms.get(k2, Fraction(0)) - base * Fraction(-4) ** (i + 1)
    return PiPolynomial(_clean(terms))


def sigma_term_coefficient(m: int) -> Rational:
    """Coefficient of sigma * phi^{2m+1} in the functional equation.

    Equal to (-1)^{m+1} * 2^{2m+1} (m!)^2 / (2m+1)!, the value of the
    real-line principal integral of csch^{2m+2}; reduces to -2 and +4/3
    at m = 0, 1.
    """
    return Fraction(
        (-1) ** (m + 1) * 2 ** (2 * m + 1) * factorial(m) ** 2, factorial(2 * m + 1)
    )


def frak_b(i: int) -> list[PiNumber]:
    """Inversion numbers of the triangular Lambert/cosecant system.

    Row i of the inverse of the lower-triangular matrix
    G[k][j] = 8^{2k+2} pi^{4k+4} c_{2j+1}^{(k)} / (2k+1)!  (j <= k),
    obtained by forward substitution in exact PiNumber arithmetic.  Entry
    k of the result is a rational multiple of pi^{-4(k+1)}.
    """
    if i < 0:
        raise ValueError("i must be >= 0")
    n = i + 1
    ctabs = [c_table(k, "binomial-expansion") for k in range(n)]
    G = [
        [
            PiNumber({4 * k + 4: Fraction(8) ** (2 * k + 2) * ctabs[k][j] / factorial(2 * k + 1)})
            for j in range(k + 1)
        ]
        for k in range(n)
    ]
    one = PiNumber({0: Fraction(1)})
    row: list[PiNumber] = [PiNumber() for _ in range(n)]
    row[i] = one.divide_by_monomial(G[i][i])
    for k in range(i - 1, -1, -1):
        acc = PiNumber()
        for t in range(k + 1, i + 1):
            acc = acc + row[t] * G[t][k]
        row[k] = (-acc).divide_by_monomial(G[k][k])
    return row


def calS(m: int) -> list[PiPolynomial]:
    """Transformation polynomials S_k^{(m)}, k = 0..m.

    Collects, for each modular-point series order k, the multiplier
    -2^{2m+2}/(2m+1)! * sum_{i>=k} c_{2i+1}^{(m)} (-1)^i (2 pi)^{2i+2}
    frak_b_k^{(i)} phi^{2m+2+2k-2i}.
    """
    if m < 0:
        raise ValueError("m must be >= 0")
    cs = c_table(m, "binomial-expansion")
    fb = [frak_b(i) for i in range(m + 1)]
    out = []
    for k in range(m + 1):
        terms = {}
        for i in range(k, m + 1):
            pref = (
                -(Fraction(2) ** (2 * m + 2))
                / factorial(2 * m + 1)
                * cs[i]
                * Fraction(-1) ** i
                * Fraction(2) ** (2 * i + 2)
            )
            for b, c in fb[i][k].terms.items():
                key = (2 * m + 2 + 2 * k - 2 * i, b + 2 * i + 2)
                terms[key] = terms.get(key, Fraction(0)) + pref * c
        out.append(PiPolynomial(_clean(terms)))
    return out


def a_sinh_trunc(m: int, K: int) -> PiPolynomial:
    """Truncated asymptotic expansion of the odd (sinh-weighted) series.

    -2^{2m+1}/(2m)! * [ sum_i d_{2i}^{(m)} psi^{(2i)}(1) phi^{2m+1-2i}
                        + sum_i sum_{k<=K} d_{2i}^{(m)} B_{2i+2k} B_{2k}
                          / ((2i+2k) (2k)!) phi^{2m+2k+1} ].

    psi^{(2i)}(1) = -(2i)! zeta(2i+1) is kept as a formal zeta symbol.
    Requires m >= 1: at m = 0 the series itself diverges (its terms tend
    to 2 sigma phi^2) and the i = 0 contribution would carry zeta(1).
    """
    if m < 1:
        raise DomainError(
            "a_sinh_trunc needs m >= 1: the m = 0 sinh-weighted series diverges"
        )
    if K < 0:
        raise ValueError("K must be >= 0")
    d = d_table(m, "binomial-expansion")
    pref = -(Fraction(2) ** (2 * m + 1)) / factorial(2 * m)
    terms = {}
    for i in range(m + 1):
        di = d[i]
        if di == 0:
            continue
        if i == 0:
            # unreachable for m >= 1 (d_0 vanishes); would need zeta(1)
            raise DomainError("d_0 != 0 requires a zeta(1) symbol")
        # polygamma part: psi^{(2i)}(1) = -(2i)! zeta(2i+1)
        key = (2 * m + 1 - 2 * i, 0, 2 * i + 1)
        c = pref * di * (-factorial(2 * i))
        terms[key] = terms.get(key, Fraction(0)) + c
        # power-tail part up to k = K
        for k in range(K + 1):
            num = bernoulli_number(2 * i + 2 * k) * bernoulli_number(2 * k)
            if num == 0:
                continue
            key = (2 * m + 2 * k + 1, 0, 0)
            c = pref * di * num / ((2 * i + 2 * k) * factorial(2 * k))
            terms[key] = terms.get(key, Fraction(0)) + c
    return PiPolynomial(_clean(terms))
