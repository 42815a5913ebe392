"""Numeric checks of the inequalities, with their margins.

Run: python3 demos/03_bounds.py
"""

import random

from comppairs import bounds, constructions as cons, verify
from comppairs.lattice import full_cube

# The entropy bound is tight on subcubes and loose on lopsided families.
for f, label in ((cons.subcube(8, 0b1, 0b1111), "subcube"),
                 (cons.middle_levels(8), "middle layer"),
                 (cons.tower_of_cubes(8, 2), "tower")):
    r = bounds.entropy_bound_check(f)
    print(f"entropy: {label:13s} |F| = {r.observed_value:3d} <= {r.bound_value:8.2f}")

# The binomial tail, counted exactly against its exponential bound.
for r, lam in ((10, 0.5), (20, 1.0), (30, 1.5)):
    rep = bounds.binom_tail_check(r, lam)
    print(f"tail r={r} lambda={lam}: {rep.observed_value} <= {rep.bound_value:.1f}")

# The analytic inequality is tight near p = q = 1: the worst grid margin is tiny but positive.
worst = min(verify.check_calculus(grid="default"), key=lambda rep: rep.margin)
print("calculus grid, tightest point:", worst.inputs, "margin", float(worst.margin))

# The optimisation sequence is smallest at its left end.
print("x_t for n=9, s=4:", bounds.optimisation_sequence(9, 4))

# The cross-pair inequality on a few random pairs; the clamped regime kicks in
# whenever |A||B| <= 2^n.
rng = random.Random(4)
for _ in range(3):
    a, b = verify.random_pair(8, rng)
    rep = bounds.afconj_check(a, b)
    print(f"|A|={len(a):3d} |B|={len(b):3d} d={rep.inputs['d']:+.2f}"
          f"  c(A,B) = {rep.observed_value} <= {rep.bound_value:.1f}")
print("full cube n=2:", bounds.afconj_check(full_cube(2), full_cube(2)).as_row())
