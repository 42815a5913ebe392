"""Exact optima for small n, compared with the constructions.

Run: python3 demos/05_exact_solver.py   (about 20 seconds)
"""

from math import comb

from comppairs.solver import (
    colex_min_shadow, kruskal_katona_crosscheck, solve_max, solve_min, solve_two_layer,
)

# c(4, m) for every m, next to C(m, 2). Equality stops once m passes n + 1.
print(" m  c(4,m)  C(m,2)  min c   lex-least maximiser")
for m in range(17):
    hi, lo = solve_max(4, m), solve_min(4, m)
    print(f"{m:2d}  {hi.optimum:6d}  {comb(m, 2):6d}  {lo.optimum:5d}   {hi.witness.sets()}")

# n = 5 takes a few seconds. The search starts from the best construction of
# each size, which here is already optimal; the search proves it.
print("\nc(5, m):", [solve_max(5, m).optimum for m in range(33)])

# The two-layer problem: a singletons under b triples.
r = solve_two_layer(5, 1, 3, 2, 4)
print("\ntwo-layer n=5, a=2 singletons, b=4 triples:", r.optimum, [f.sets() for f in r.witness])

# Kruskal-Katona from the solver's point of view: the least a that lets every
# (k-1)-subset of the b chosen k-sets be covered is the colex shadow size.
for n, k, b in ((5, 3, 4), (6, 3, 7), (6, 4, 10)):
    rep = kruskal_katona_crosscheck(n, k, b)
    print(f"shadow n={n} k={k} b={b}: search {rep['search_min_a']}, colex {colex_min_shadow(n, k, b)}")
