"""Exact maximum and minimum of c(F) over m-subset families of 2^[n].

Depth-first branch and bound over ascending mask sequences.  A node holds
the chosen prefix, the comparable count so far, and for every mask the
number of chosen masks it is comparable to.  Pruning compares an admissible
bound on the best completion against the incumbent, which is seeded from
the constructions and a greedy local search before the search starts.

Witness rule: among optimal families the lexicographically least ascending
mask sequence is returned.  Ties with the incumbent are pruned only when the
subtree cannot produce a lexicographically smaller family, so the witness
does not depend on symmetry reduction or on how roots are split across
workers.
"""

from __future__ import annotations

import logging
import time
from dataclasses import dataclass, field
from math import comb

from ..errors import BudgetExceeded, RangeViolation
from ..lattice import SetFamily, check_universe
from .symmetry import OrbitFilter, group_table

log = logging.getLogger(__name__)

SYM_DEPTH = 3
MAX_SOLVER_N = 8

# exact optima from completed searches, reused as bounds on c(R) for the
# still-unchosen part R of a family: {(n, objective): {m: value}}
KNOWN: dict[tuple[int, str], dict[int, int]] = {}


@dataclass(frozen=True)
class Budget:
    nodes: int = 10**9
    seconds: float = 600.0

    @classmethod
    def parse(cls, spec: str) -> "Budget":
        """Parse ``nodes=<N>,seconds=<S>`` (either part optional)."""
        kw = {}
        for part in filter(None, (p.strip() for p in spec.split(","))):
            key, _, val = part.partition("=")
            if key == "nodes":
                kw["nodes"] = int(val)
            elif key == "seconds":
                kw["seconds"] = float(val)
            else:
                raise ValueError(f"unknown budget field {key!r}")
        return cls(**kw)


@dataclass
class SolveResult:
    objective: str
    n: int
    params: dict
    optimum: int
    witness: object
    complete: bool
    nodes: int = 0
    prunes: int = 0
    elapsed: float = 0.0
    extra: dict = field(default_factory=dict)

    @property
    def key(self) -> tuple:
        return (self.n, self.objective, tuple(sorted(self.params.items())))


class _Stop(Exception):
    pass


def _comparability(n: int):
    size = 1 << n
    comp_bits = [0] * size
    for x in range(size):
        bits = 0
        for y in range(size):
            if x != y and (x & ~y == 0 or y & ~x == 0):
                bits |= 1 << y
        comp_bits[x] = bits
    comp_list = [[y for y in range(size) if comp_bits[x] >> y & 1] for x in range(size)]
    return comp_bits, comp_list


_COMP_CACHE: dict[int, tuple] = {}


def comparability_tables(n: int):
    if n not in _COMP_CACHE:
        _COMP_CACHE[n] = _comparability(n)
    return _COMP_CACHE[n]


def family_value(members, comp_bits) -> int:
    fam = 0
    for x in members:
        fam |= 1 << x
    return sum((comp_bits[x] & fam).bit_count() for x in members) // 2


class PairSearch:
    """Branch and bound for ``sense * c(F)`` over families of size m.

    ``sense`` is +1 to maximise c and -1 to minimise it.
    """

    def __init__(self, n: int, m: int, sense: int, budget: Budget,
                 symmetry: bool = True, seed: tuple | None = None, shared=None):
        self.n, self.m, self.sense = n, m, sense
        self.size = 1 << n
        self.budget = budget
        self.symmetry = symmetry
        self.comp_bits, self.comp_list = comparability_tables(n)
        self.cnt = [0] * self.size
        self.nodes = 0
        self.prunes = 0
        self.best_value = None
        self.best_family: tuple | None = None
        self.best_from_search = False
        self.shared = shared
        self.deadline = None
        objective = "max_c" if sense > 0 else "min_c"
        known = KNOWN.get((n, objective), {})
        if sense > 0:
            self.rest = [known.get(r, comb(r, 2) if r <= n + 1 else comb(r, 2) - 1)
                         for r in range(m + 1)]
        else:
            self.rest = [known.get(r, 0) for r in range(m + 1)]
        if seed is not None:
            self.best_family = tuple(seed)
            self.best_value = sense * family_value(seed, self.comp_bits)

    # -- bookkeeping -------------------------------------------------------

    def _tick(self):
        self.nodes += 1
        if self.nodes >= self.budget.nodes:
            raise _Stop
        if self.nodes & 1023 == 0:
            if time.monotonic() > self.deadline:
                raise _Stop
            if self.shared is not None:
                v = self.shared.value
                if self.best_value is None or v > self.best_value:
                    self._shared_floor = v

    def _record(self, value: int, family: tuple):
        if (self.best_value is None or value > self.best_value
                or (value == self.best_value and family < self.best_family)):
            self.best_value = value
            self.best_family = family
            self.best_from_search = True
            if self.shared is not None:
                with self.shared.get_lock():
                    if value > self.shared.value:
                        self.shared.value = value

    def _prune(self, bound: int, chosen: list) -> bool:
        floor = getattr(self, "_shared_floor", None)
        if floor is not None and bound < floor:
            return True
        if self.best_value is None or bound > self.best_value:
            return False
        if bound < self.best_value or self.best_from_search:
            return True
        return tuple(chosen) > self.best_family[:len(chosen)]

    # -- bound ---------------------------------------------------------------

    def _bound(self, c: int, r: int, cands: list) -> int:
        """Upper bound on ``sense * c`` over completions drawn from ``cands``."""
        cnt = self.cnt
        if self.sense > 0:
            cbits = 0
            for y in cands:
                cbits |= 1 << y
            comp_bits = self.comp_bits
            cap = r - 1
            # doubled: pairs inside the remainder are shared by two members
            mixed = sorted((2 * cnt[y] + min(cap, (comp_bits[y] & cbits).bit_count())
                            for y in cands), reverse=True)
            plain = sorted((cnt[y] for y in cands), reverse=True)
            a = sum(mixed[:r])
            b = 2 * (sum(plain[:r]) + self.rest[r])
            return (2 * c + min(a, b)) // 2
        low = sorted(cnt[y] for y in cands)
        return -(c + sum(low[:r]) + self.rest[r])

    # -- search ----------------------------------------------------------------

    def _add(self, y):
        cnt = self.cnt
        for z in self.comp_list[y]:
            cnt[z] += 1

    def _remove(self, y):
        cnt = self.cnt
        for z in self.comp_list[y]:
            cnt[z] -= 1

    def _explore(self, chosen: list, c: int, cands: list, filt):
        self._tick()
        depth = len(chosen)
        r = self.m - depth
        if len(cands) < r:
            return
        sense = self.sense
        cnt = self.cnt
        if r == 0:
            self._record(sense * c, tuple(chosen))
            return
        if r == 1:
            best = None
            for y in cands:
                v = sense * (c + cnt[y])
                if best is None or v > best[0]:
                    best = (v, y)
            v, y = best
            fam = tuple(chosen) + (y,)
            if (self.best_value is None or v > self.best_value
                    or (v == self.best_value and fam < self.best_family)):
                self._record(v, fam)
            return
        if self._prune(self._bound(c, r, cands), chosen):
            self.prunes += 1
            return
        use_filter = filt is not None and depth < SYM_DEPTH
        last_start = len(cands) - r
        for i in range(last_start + 1):
            y = cands[i]
            later = cands[i + 1:]
            nxt = None
            if use_filter:
                ok, later, nxt = filt.admit(y, later)
                if not ok or len(later) < r - 1:
                    continue
            chosen.append(y)
            self._add(y)
            self._explore(chosen, c + cnt[y], later, nxt)
            self._remove(y)
            chosen.pop()

    def run(self, roots: list[int] | None = None) -> bool:
        """Explore subtrees whose first member is in ``roots`` (default: all).

        Returns True when the search finished within budget.
        """
        self.deadline = time.monotonic() + self.budget.seconds
        if self.m == 0:
            self._record(0, ())
            return True
        cands = list(range(self.size))
        filt = OrbitFilter(group_table(self.n, True)) if self.symmetry else None
        try:
            self._tick()
            for i, y in enumerate(cands):
                if roots is not None and y not in roots:
                    continue
                if len(cands) - i < self.m:
                    break
                later = cands[i + 1:]
                nxt = None
                if filt is not None:
                    ok, later, nxt = filt.admit(y, later)
                    if not ok or len(later) < self.m - 1:
                        continue
                self._add(y)
                self._explore([y], 0, later, nxt)
                self._remove(y)
        except _Stop:
            self.cnt = [0] * self.size
            return False
        return True
