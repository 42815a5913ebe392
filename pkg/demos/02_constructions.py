"""The constructions side by side: how close each gets to all pairs comparable.

Run: python3 demos/02_constructions.py
"""

from math import comb

from comppairs import constructions as cons
from comppairs.bounds import af_leading_bound
from comppairs.counting import count_comparable, count_cross


def ratio(f):
    m = len(f)
    return count_comparable(f).comparable / comb(m, 2) if m > 1 else 1.0


n = 12
print(f"n = {n}: fraction of pairs that are comparable")
for k in (1, 2, 3, 4, 6):
    t = cons.tower_of_cubes(n, k)
    lead = af_leading_bound(k, len(t))
    print(f"  tower of {k} cubes: m = {len(t):5d}  c/C(m,2) = {ratio(t):.4f}"
          f"  (leading term 1 - 1/k = {float(lead) / comb(len(t), 2):.4f})")

for k in range(4):
    h = cons.h_family(n, k)
    print(f"  H_{k} (sets of size <= {k} or >= n-{k}): m = {len(h):5d}  c/C(m,2) = {ratio(h):.4f}")

# The two blocks of the fattened construction are linked by many nested pairs.
print("\nfattened blocks, cross count against the 2^(-2d-1) C(|union|, 2) target")
for d in (0, 1, 2):
    f1, f2 = cons.alon_frankl(10, d)
    u = len(f1.union(f2))
    print(f"  d={d}: blocks of {len(f1)}, cross = {count_cross(f1, f2)},"
          f" target = {comb(u, 2) / 2 ** (2 * d + 1):.1f}")

# F*_m fills in between H_{k-1} and H_k; its two new blocks contribute floor(m'^2/4).
print("\nF*_m for n = 8, k = 2")
lo, hi = cons.f_star_range(8, 2)
for m in range(lo, hi + 1, 8):
    f = cons.f_star(8, 2, m)
    _, a, b = cons.f_star_blocks(8, 2, m)
    print(f"  m={m:3d}: c = {count_comparable(f).comparable:5d}, block cross = {count_cross(a, b):4d}"
          f" = floor({m - lo}^2/4)")
