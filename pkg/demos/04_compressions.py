"""Pushing a family down, up and left, and whether that helps c(A, B).

Run: python3 demos/04_compressions.py
"""

from comppairs.compressions import (
    all_down, all_left, compress_fixpoint, compress_pair, is_down_set, monotonicity_report,
)
from comppairs.counting import count_comparable, count_cross
from comppairs.io import render_family
from comppairs.lattice import make_family, mask_of

f = make_family(4, [mask_of(s) for s in ([2, 3], [1, 4], [3, 4], [2, 4], [4])])
print("start:\n" + render_family(f))

g = compress_fixpoint(f, all_left(4))
print("left-compressed:\n" + render_family(g))

h = compress_fixpoint(g, all_down(4))
print("then down-compressed, a down-set?", is_down_set(h))
print(render_family(h))
print("comparable pairs:", count_comparable(f).comparable, "->", count_comparable(h).comparable)

# Compress A downwards and B upwards together: nested pairs only accumulate.
a = make_family(4, [mask_of([2, 3]), mask_of([3, 4])])
b = make_family(4, [mask_of([1, 2, 3]), mask_of([1, 4])])
a2, b2 = compress_pair(a, b)
print("c(A,B):", count_cross(a, b), "->", count_cross(a2, b2))

rep = monotonicity_report(2, exhaustive=True)
print(f"exhaustive n=2: {rep.trials} pairs, {rep.violations} where compression lowered c(A,B)")
rep = monotonicity_report(6, trials=2000, seed=11)
print(f"random n=6: {rep.trials} pairs, {rep.violations} violations")
