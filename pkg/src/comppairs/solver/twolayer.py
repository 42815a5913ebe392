"""Two-layer cross maximisation and the Kruskal-Katona shadow reference.

For fixed B (b sets of size k2) the best A (a sets of size k1) is simply the
a sets of size k1 lying below the most members of B.  So the search only
branches over B; each node keeps, for every k1-set, how many chosen B-sets
contain it.
"""

from __future__ import annotations

import time
from math import comb

from ..errors import DomainError, RangeViolation
from ..lattice import SetFamily, check_universe, layer_masks
from .search import Budget, SolveResult, SYM_DEPTH, _Stop
from .symmetry import OrbitFilter, group_table


def _k_subsets_of(mask: int, k: int) -> list[int]:
    bits = [1 << i for i in range(mask.bit_length()) if mask >> i & 1]
    out = []

    def rec(start, left, acc):
        if left == 0:
            out.append(acc)
            return
        for i in range(start, len(bits) - left + 1):
            rec(i + 1, left - 1, acc | bits[i])

    rec(0, k, 0)
    return out


def best_lower_family(counts: dict, a: int) -> tuple[int, list[int]]:
    """Top-a k1-sets by containment count; ties go to the smaller mask."""
    ranked = sorted(counts, key=lambda x: (-counts[x], x))[:a]
    return sum(counts[x] for x in ranked), sorted(ranked)


class TwoLayerSearch:
    def __init__(self, n, k1, k2, a, b, budget: Budget, symmetry=True):
        self.n, self.k1, self.k2, self.a, self.b = n, k1, k2, a, b
        self.budget = budget
        self.symmetry = symmetry
        self.lower = layer_masks(n, k1)
        self.upper = layer_masks(n, k2)
        # equal layers never nest: strict containment needs k1 < k2
        self.below = {y: _k_subsets_of(y, k1) if k1 < k2 else [] for y in self.upper}
        self.counts = {x: 0 for x in self.lower}
        self.gain = min(a, comb(k2, k1)) if k1 < k2 else 0
        self.nodes = self.prunes = 0
        self.best_value = -1
        self.best_b: tuple = ()

    def _tick(self):
        self.nodes += 1
        if self.nodes >= self.budget.nodes:
            raise _Stop
        if self.nodes & 1023 == 0 and time.monotonic() > self.deadline:
            raise _Stop

    def _value(self) -> int:
        return best_lower_family(self.counts, self.a)[0]

    def _explore(self, chosen, cands, filt):
        self._tick()
        depth = len(chosen)
        r = self.b - depth
        if r == 0:
            v = self._value()
            fam = tuple(chosen)
            if v > self.best_value or (v == self.best_value and fam < self.best_b):
                self.best_value, self.best_b = v, fam
            return
        if len(cands) < r:
            return
        bound = self._value() + r * self.gain
        if bound < self.best_value or (bound == self.best_value and tuple(chosen) > self.best_b[:depth]):
            self.prunes += 1
            return
        use_filter = filt is not None and depth < SYM_DEPTH
        for i in range(len(cands) - r + 1):
            y = cands[i]
            later = cands[i + 1:]
            nxt = None
            if use_filter:
                ok, later, nxt = filt.admit(y, later)
                if not ok or len(later) < r - 1:
                    continue
            for x in self.below[y]:
                self.counts[x] += 1
            chosen.append(y)
            self._explore(chosen, later, nxt)
            chosen.pop()
            for x in self.below[y]:
                self.counts[x] -= 1

    def run(self) -> bool:
        self.deadline = time.monotonic() + self.budget.seconds
        # incumbent: colex-initial B, a legal family whose value is a floor
        seed = tuple(self.upper[:self.b])
        for y in seed:
            for x in self.below[y]:
                self.counts[x] += 1
        self.best_value, self.best_b = self._value(), seed
        self.counts = {x: 0 for x in self.lower}
        filt = OrbitFilter(group_table(self.n, False)) if self.symmetry else None
        try:
            self._explore([], list(self.upper), filt)
        except _Stop:
            return False
        return True

    def witness(self) -> tuple[SetFamily, SetFamily]:
        counts = {x: 0 for x in self.lower}
        for y in self.best_b:
            for x in self.below[y]:
                counts[x] += 1
        _, a_sets = best_lower_family(counts, self.a)
        return SetFamily(self.n, tuple(a_sets)), SetFamily(self.n, tuple(self.best_b))


def check_two_layer(n, k1, k2, a, b):
    check_universe(n)
    if not 0 <= k1 <= k2 <= n:
        raise RangeViolation(f"need 0 <= k1 <= k2 <= n; got k1={k1}, k2={k2}, n={n}")
    if not 0 <= a <= comb(n, k1) or not 0 <= b <= comb(n, k2):
        raise RangeViolation(f"need 0 <= a <= C(n,k1) and 0 <= b <= C(n,k2); got a={a}, b={b}")


def colex_min_shadow(n: int, k: int, b: int) -> int:
    """Size of the lower shadow of the first b k-sets in colex order."""
    if not 1 <= k <= n or not 0 <= b <= comb(n, k):
        raise DomainError(f"need 1 <= k <= n and 0 <= b <= C(n,k); got n={n}, k={k}, b={b}")
    shadow = set()
    # colex order on k-sets is numeric order of their masks
    for y in layer_masks(n, k)[:b]:
        shadow.update(_k_subsets_of(y, k - 1))
    return len(shadow)
