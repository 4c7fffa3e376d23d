"""Reduced Bernoulli values, their closed forms, and the exact identity suite."""


import hypseries as hs

print("Reduced Bernoulli values B_n^{(2m+2)}(m+1) as polynomials in m:")
for n in (2, 4, 6):
    row = [hs.reduced_even(n, m) for m in range(6)]
    print(f"  n={n}: {row}")

print("\nHighest-index closed form (-1)^m (m!)^2/(2m+1):")
for m in range(6):
    print(f"  B_{2*m}^{(2*m+2)}({m+1}) = {hs.reduced_even(2*m, m)}")

print("\nThe Bell-polynomial route reproduces the same values:")
for n in range(1, 7):
    a, b = hs.gen_bernoulli_via_bell(n, 2), hs.reduced_even(n, 2)
    assert a == b
    print(f"  n={n}: {a}")

print("\nFour routes to the linearity coefficients agree exactly (m = 4):")
for route in hs.ROUTES:
    vals = hs.c_table(4, route).values
    print(f"  {route:24s} {[str(v) for v in vals]}")

print("\nExact identity suite up to m = 12:")
for result in hs.identity_suite(12):
    print(f"  [{'PASS' if result.passed else 'FAIL'}] {result.name} ({result.cases} cases)")
