"""Construct every exact polynomial family and print the small tables.

All output here is exact: rational coefficients times powers of a formal pi.
"""

import hypseries as hs

print("calB polynomials (the analytic part of the cosecant series)")
for m in range(4):
    print(f"  calB({m}) = {hs.calB(m).to_text()}")

print("\nRamanujan polynomials and the two-parameter generalization")
print(f"  ramanujan(0)        = {hs.ramanujan(0).to_text()}")
print(f"  gen_ramanujan(0,0,1) = {hs.gen_ramanujan(0, 0, 1).to_text()}   (same)")
print(f"  gen_ramanujan(2,3,0) = {hs.gen_ramanujan(2, 3, 0).to_text()}   (= calB(2))")

print("\nInversion numbers frak_b (rational multiples of pi^{-4(k+1)})")
for i in range(4):
    row = ", ".join(
        "+".join(f"{c}*pi^{b}" for b, c in sorted(n.terms.items())) for n in hs.frak_b(i)
    )
    print(f"  i={i}: {row}")

print("\nTransformation polynomials calS")
for m in range(4):
    for k, S in enumerate(hs.calS(m)):
        print(f"  S_{k}^({m}) = {S.to_text()}")

print("\nEvery calB vanishes exactly at phi = +-2 pi i:")
print("  verify_unruh_zero(m) for m = 0..12:",
      all(hs.verify_unruh_zero(m) for m in range(13)))
print("  ramanujan(1) at the same point is nonzero:",
      not hs.ramanujan(1).at_two_pi_i().is_zero())
