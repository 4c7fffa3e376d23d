"""Zeros of the calB polynomials: the exact +-2 pi i pair plus the rest.

Writes a small CSV (m <= 12) in the same schema the CLI emits for the
full m <= 40 dataset.
"""

import io

import mpmath as mp

import hypseries as hs
from hypseries.zeros import write_zeros_csv, zeros_dataset

M_MAX = 12
PREC = 128

print(f"Zero sets for m <= {M_MAX} at prec = {PREC}:")
for m in (0, 1, 4, M_MAX):
    zs = hs.find_zeros(m, PREC)
    with mp.workprec(PREC):
        moduli = sorted(float(abs(z)) for z in zs.zeros)
    print(f"  m={m:2d}: {len(zs.zeros):2d} zeros, |z| in [{moduli[0]:.4f}, {moduli[-1]:.4f}],"
          f" worst residual {mp.nstr(max(zs.residuals), 3)}")
    print(f"         contains +-2 pi i: {zs.contains_two_pi_i(mp.mpf(2) ** (-PREC // 2))}")

rows = zeros_dataset(M_MAX, PREC)
buf = io.StringIO()
write_zeros_csv(rows, buf)
with open("zeros_demo.csv", "w") as fh:
    fh.write(buf.getvalue())
print(f"\nWrote {len(rows)} rows to zeros_demo.csv (header: m,re,im,residual)")

with mp.workprec(PREC):
    min_dist = min(abs(abs(mp.mpf(r[1]) + mp.mpc(0, 1) * mp.mpf(r[2])) - 1) for r in rows)
print("Minimum distance of any zero from the unit circle:", mp.nstr(min_dist, 6))
