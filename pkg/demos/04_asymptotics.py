"""Asymptotic behavior at phi -> 0.

The even series approaches its exact polynomial exponentially fast
(the gap scales like exp(-4 pi^2 / phi)); the odd series approaches a
zeta-weighted truncation with a power-law gap whose order is read off a
log-log slope.
"""

import mpmath as mp

import hypseries as hs

print("Even series: |S_{2m+2}(phi) - polynomial part| on a halving grid")
for m in (0, 1):
    reports = hs.check_asymptotic_S(m, 256)
    for rep in reports:
        tag = "WARN" if rep.warn else ("PASS" if rep.passed else "FAIL")
        print(f"  m={m} phi={mp.nstr(rep.phi, 4):6s} gap={mp.nstr(rep.residual, 4)} [{tag}]")

print("\nOdd series: truncation-order slopes (expect 2m + 2K + 3)")
for m, K in ((1, 0), (1, 1), (1, 2), (2, 1)):
    reports = hs.check_asymptotic_sinh(m, K, 160)
    slopes = [mp.nstr(r.extra["slope"], 5) for r in reports if "slope" in r.extra]
    print(f"  (m={m}, K={K}): slopes {slopes}  target {2*m + 2*K + 3}")

print("\nTruncations carry formal zeta symbols until evaluation:")
print("  a_sinh_trunc(1, 1) =", hs.a_sinh_trunc(1, 1).to_text())
