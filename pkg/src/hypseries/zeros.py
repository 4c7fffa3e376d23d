"""Complex zeros of the calB polynomial family.

``verify_unruh_zero`` is exact: it substitutes phi^2 := -4 pi^2 into the
symbolic polynomial and checks for the identically-zero PiNumber.  The
numeric finder rescales phi = pi * psi so the coefficients become exact
rationals, exploits evenness by solving first for u = psi^2 (degree m+1),
locates all u-roots with a simultaneous Durand-Kerner iteration started
on a deterministically perturbed circle, and then polishes each +-sqrt
branch with Newton steps on the full psi-polynomial at doubled precision.
The advertised zeros phi = +-2 pi i are never deflated; they come out of
the same iteration and act as built-in accuracy probes.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from fractions import Fraction
from typing import IO

import mpmath as mp

from .errors import ConvergenceError
from .polynomials import PiPolynomial, calB
from .series_eval import GUARD_BITS

__all__ = ["ZeroSet", "verify_unruh_zero", "find_zeros", "zeros_dataset", "write_zeros_csv"]

_DK_MAX_ITER = 400


def verify_unruh_zero(m: int) -> bool:
    """True iff calB(m) vanishes identically under phi^2 := -4 pi^2 (exact)."""
    return calB(m).at_two_pi_i().is_zero()


def _psi_coefficients(P: PiPolynomial, m: int) -> list[Fraction]:
    """Coefficients of P(pi * psi) / pi^{2m+2} as exact rationals in psi."""
    coeffs = [Fraction(0)] * (2 * m + 3)
    for (a, b, z), c in P.terms.items():
        if z:
            raise ValueError("zeta-carrying polynomial")
        if a + b != 2 * m + 2:
            raise ValueError("family is not homogeneous of degree 2m+2")
        coeffs[a] += c
    return coeffs


@dataclass
class ZeroSet:
    m: int
    prec: int
    zeros: list
    residuals: list
    method: str

    def _wprec(self) -> int:
        return 2 * self.prec + GUARD_BITS

    def contains_two_pi_i(self, tol) -> bool:
        """Both +-2 pi i present within tol."""
        with mp.workprec(self._wprec()):
            targets = [mp.mpc(0, 2 * mp.pi), mp.mpc(0, -2 * mp.pi)]
            return all(
                min(abs(z - t) for z in self.zeros) < tol for t in targets
            )

    def symmetry_defect(self) -> mp.mpf:
        """Largest distance from the multiset to its image under negation
        and conjugation (0 for a perfectly symmetric zero set)."""
        with mp.workprec(self._wprec()):
            worst = mp.mpf(0)
            for transform in (lambda z: -z, lambda z: mp.conj(z)):
                for z in self.zeros:
                    d = min(abs(transform(z) - w) for w in self.zeros)
                    worst = max(worst, d)
            return worst

    def vieta_defect(self, leading: Fraction, constant: Fraction) -> mp.mpf:
        """Relative defect of leading * prod(zeros-in-psi) against the constant
        term, with zeros rescaled back to psi = phi / pi."""
        with mp.workprec(self._wprec()):
            prod = mp.mpf(1)
            for z in self.zeros:
                prod = prod * (z / mp.pi)
            target = mp.mpf(constant.numerator) / constant.denominator
            lead = mp.mpf(leading.numerator) / leading.denominator
            return abs(lead * prod - target) / abs(target)


def _durand_kerner(coeffs, prec: int):
    """All roots of a polynomial with mpf-convertible coefficients.

    coeffs[i] is the coefficient of x^i (exact Fractions).  Runs at the
    given binary precision; returns approximations good enough to seed
    Newton polishing.
    """
    deg = len(coeffs) - 1
    with mp.workprec(prec):
        cs = [mp.mpf(c.numerator) / c.denominator for c in coeffs]
        lead = cs[-1]
        monic = [c / lead for c in cs]

        def p(x):
            acc = mp.mpc(0)
            for c in reversed(monic):
                acc = acc * x + c
            return acc

        # deterministic perturbed circle: radius from the constant term,
        # angle offset 0.7/deg breaks the conjugate symmetry that can
        # stall simultaneous iterations on real-coefficient inputs
        radius = abs(monic[0]) ** (mp.mpf(1) / deg) if monic[0] != 0 else mp.mpf(1)
        radius = max(radius, mp.mpf("0.5"))
        zs = [
            radius * mp.expjpi(2 * mp.mpf(k) / deg + mp.mpf(7) / (10 * deg))
            for k in range(deg)
        ]
        target = mp.mpf(2) ** (-(prec - 8))
        for _ in range(_DK_MAX_ITER):
            moved = mp.mpf(0)
            for k in range(deg):
                denom = mp.mpc(1)
                for j in range(deg):
                    if j != k:
                        denom *= zs[k] - zs[j]
                if denom == 0:
                    denom = mp.mpc(target)
                delta = p(zs[k]) / denom
                zs[k] = zs[k] - delta
                moved = max(moved, abs(delta))
            scale = max(mp.mpf(1), max(abs(z) for z in zs))
            if moved < target * scale:
                break
        return zs


def _newton_polish(coeffs, z0, prec: int, steps: int = 6):
    """Newton refinement of a root of the exact-coefficient polynomial."""
    with mp.workprec(prec):
        cs = [mp.mpf(c.numerator) / c.denominator for c in coeffs]
        dcs = [i * cs[i] for i in range(1, len(cs))]

        def horner(poly, x):
            acc = mp.mpc(0)
            for c in reversed(poly):
                acc = acc * x + c
            return acc

        z = mp.mpc(z0)
        for _ in range(steps):
            dp = horner(dcs, z)
            if dp == 0:
                break
            z = z - horner(cs, z) / dp
        return z, abs(horner(cs, z))


def find_zeros(m: int, prec: int = 256) -> ZeroSet:
    """All 2m+2 zeros of calB(m) in the phi plane, with residuals.

    Raises ConvergenceError if any polished zero leaves a residual at or
    above 2^-(prec/2).
    """
    if m < 0:
        raise ValueError("m must be >= 0")
    B = calB(m)
    psi_coeffs = _psi_coefficients(B, m)          # even polynomial in psi
    u_coeffs = psi_coeffs[0::2]                    # same polynomial in u = psi^2
    u_roots = _durand_kerner(u_coeffs, prec + GUARD_BITS)

    hprec = 2 * prec + GUARD_BITS
    zeros = []
    residuals = []
    with mp.workprec(hprec):
        pi_pow = mp.pi ** (2 * m + 2)
        for u in u_roots:
            psi = mp.sqrt(mp.mpc(u))
            for branch in (psi, -psi):
                root, res = _newton_polish(psi_coeffs, branch, hprec)
                zeros.append(mp.pi * root)
                residuals.append(res * pi_pow)
        thr = mp.mpf(2) ** (-mp.mpf(prec) / 2)
        bad = [r for r in residuals if r >= thr]
        if bad:
            raise ConvergenceError(
                f"m={m}: {len(bad)} zero(s) left residual >= 2^-(prec/2)"
            )
        order = sorted(range(len(zeros)), key=lambda i: (-mp.im(zeros[i]), mp.re(zeros[i])))
        zeros = [zeros[i] for i in order]
        residuals = [residuals[i] for i in order]
    return ZeroSet(m=m, prec=prec, zeros=zeros, residuals=residuals,
                   method="durand-kerner-u+newton")


def zeros_dataset(m_max: int, prec: int = 256):
    """Rows (m, re, im, residual) for m = 0..m_max, as decimal strings.

    Row order: by m, then descending imaginary part, then real part.
    Coordinates carry prec/4 significant digits.
    """
    if m_max < 0:
        raise ValueError("m_max must be >= 0")
    digits = max(prec // 4, 8)
    rows = []
    for m in range(m_max + 1):
        zs = find_zeros(m, prec)
        for z, r in zip(zs.zeros, zs.residuals):
            rows.append(
                (
                    m,
                    mp.nstr(mp.re(z), digits),
                    mp.nstr(mp.im(z), digits),
                    mp.nstr(r, 8),
                )
            )
    return rows


def write_zeros_csv(rows, out: IO[str]) -> None:
    """CSV with header ``m,re,im,residual``."""
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["m", "re", "im", "residual"])
    for row in rows:
        writer.writerow(row)
