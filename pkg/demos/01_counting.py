"""Counting comparable pairs three ways, and why they agree.

Run: python3 demos/01_counting.py
"""

import random
from math import comb

from comppairs import (
    chain, count_chains, count_comparable, count_comparable_fast, count_comparable_naive,
    count_cross, dual, full_cube, permute, tower_of_cubes,
)
from comppairs.counting import degree_profile
from comppairs.lattice import SetFamily

# A chain is the extreme case: every pair of members is nested.
f = chain(5, 6)
print("chain of 6 sets in 2^[5]:", count_comparable(f), "C(6,2) =", comb(6, 2))

# The full cube obeys c = 3^n - 2^n: each element is in neither, the smaller only,
# or both sets of a nested pair, minus the pairs that are equal.
for n in (3, 6, 10):
    print(f"full cube n={n}: c = {count_comparable(full_cube(n)).comparable}, 3^n - 2^n = {3**n - 2**n}")

# The pairwise engine and the subset-sum engine give identical answers;
# the second touches every mask of the cube, so it wins on dense families.
rng = random.Random(1)
big = SetFamily(14, tuple(sorted(rng.sample(range(1 << 14), 3000))))
print("naive == fast on 3000 random sets over [14]:",
      count_comparable_naive(big) == count_comparable_fast(big))

# Relabelling the ground set or complementing every member changes nothing.
t = tower_of_cubes(4, 2)
print("tower(4,2):", count_comparable(t))
print("  after a permutation:", count_comparable(permute(t, [3, 1, 0, 2])))
print("  after complementing:", count_comparable(dual(t)))

# The two incomparable pairs of the tower, read off the degree profile.
prof = degree_profile(t)
print("  sets with an incomparable partner:",
      [s for s, d in zip(t.sets(), prof.incomparable) if d])

# Cross pairs and longer chains.
print("cross count of the cube of [2] with itself:", count_cross(full_cube(2), full_cube(2)))
print("3-chains inside tower(6,2):", count_chains(tower_of_cubes(6, 2), 3))
