"""Exact counts of comparable pairs, cross pairs, chains and per-set degrees.

Two engines compute the pair count: a quadratic pairwise scan and a
subset-sum (zeta transform) over a dense ``2**n`` table.  They must agree
exactly; the test suite cross-checks them on random families.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from math import comb

import numpy as np

from .errors import UniverseTooLarge
from .lattice import DENSE_MAX_N, SetFamily, densify, same_universe

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class PairCounts:
    comparable: int
    incomparable: int
    total: int

    def as_record(self) -> dict:
        return {k: str(v) for k, v in vars(self).items()}


@dataclass(frozen=True)
class DegreeProfile:
    members: tuple[int, ...]
    comparable: tuple[int, ...]
    incomparable: tuple[int, ...]


def _pair_counts(m: int, c: int) -> PairCounts:
    total = comb(m, 2)
    return PairCounts(c, total - c, total)


def zeta_subsets(table: np.ndarray, n: int) -> np.ndarray:
    """Sum over submasks: ``out[x] = sum(table[y] for y subset of x)``."""
    out = np.array(table, dtype=np.int64, copy=True)
    for i in range(n):
        view = out.reshape(-1, 2, 1 << i)
        view[:, 1, :] += view[:, 0, :]
    return out


def zeta_supersets(table: np.ndarray, n: int) -> np.ndarray:
    """Sum over supermasks: ``out[x] = sum(table[y] for y superset of x)``."""
    out = np.array(table, dtype=np.int64, copy=True)
    for i in range(n):
        view = out.reshape(-1, 2, 1 << i)
        view[:, 0, :] += view[:, 1, :]
    return out


def count_comparable_naive(f: SetFamily) -> PairCounts:
    ms = f.members
    c = 0
    for i, a in enumerate(ms):
        for b in ms[i + 1:]:
            if a & ~b == 0 or b & ~a == 0:
                c += 1
    return _pair_counts(len(ms), c)


def count_comparable_fast(f: SetFamily) -> PairCounts:
    if f.n > DENSE_MAX_N:
        raise UniverseTooLarge(f"fast engine needs n <= {DENSE_MAX_N}, got {f.n}")
    table = densify(f)
    below = zeta_subsets(table, f.n)
    # each member counts itself once among its submasks
    c = int(below[table.astype(bool)].sum()) - len(f)
    return _pair_counts(len(f), c)


def _prefer_dense(n: int, work: int) -> bool:
    return n <= DENSE_MAX_N and (n * (1 << n)) < work


def count_comparable(f: SetFamily, engine: str = "auto") -> PairCounts:
    """Comparable/incomparable pair counts with the chosen engine.

    ``engine`` is ``"naive"``, ``"fast"`` or ``"auto"``; auto picks the dense
    engine when ``n <= 24`` and ``n * 2**n`` is below ``m**2 / 2``.
    """
    if engine == "naive":
        return count_comparable_naive(f)
    if engine == "fast":
        return count_comparable_fast(f)
    if engine != "auto":
        raise ValueError(f"unknown engine {engine!r}")
    dense = _prefer_dense(f.n, len(f) * len(f) // 2)
    log.info("count_comparable: n=%d m=%d engine=%s", f.n, len(f), "fast" if dense else "naive")
    return count_comparable_fast(f) if dense else count_comparable_naive(f)


def count_cross(a: SetFamily, b: SetFamily, engine: str = "auto") -> int:
    """Ordered pairs ``(A, B)`` in ``a x b`` with ``A`` a proper subset of ``B``.

    A mask present in both families is never paired with itself, so
    ``count_cross(f, f)`` equals the comparable-pair count of ``f``.
    """
    n = same_universe(a, b)
    if not a.members or not b.members:
        return 0
    if engine == "auto":
        engine = "fast" if _prefer_dense(n, len(a) * len(b)) else "naive"
    if engine == "fast":
        if n > DENSE_MAX_N:
            raise UniverseTooLarge(f"fast engine needs n <= {DENSE_MAX_N}, got {n}")
        below = zeta_subsets(densify(a), n)
        idx = np.fromiter(b.members, dtype=np.int64, count=len(b))
        shared = len(set(a.members).intersection(b.members))
        return int(below[idx].sum()) - shared
    if engine != "naive":
        raise ValueError(f"unknown engine {engine!r}")
    total = 0
    for x in a.members:
        for y in b.members:
            if x != y and x & ~y == 0:
                total += 1
    return total


def _predecessors(members: list[int]) -> list[list[int]]:
    """For each member (in the given order), indices of its proper submasks."""
    arr = np.asarray(members, dtype=np.int64)
    preds = []
    for i, x in enumerate(members):
        sub = np.flatnonzero((arr[:i] & ~np.int64(x)) == 0)
        preds.append(sub.tolist())
    return preds


def count_chains(f: SetFamily, r: int) -> int:
    """Number of r-element subfamilies of ``f`` that form a chain.

    Chains are exactly the cliques of the comparability graph.  Members are
    processed by (size, mask); two distinct sets of equal size are never
    nested, so every proper submask appears earlier in that order.
    """
    if r < 1:
        raise ValueError(f"chain length must be >= 1, got {r}")
    m = len(f)
    if r == 1 or m == 0:
        return m if r == 1 else 0
    order = sorted(f.members, key=lambda x: (x.bit_count(), x))
    preds = _predecessors(order)
    ways = [1] * m
    for _ in range(r - 1):
        ways = [sum(ways[j] for j in p) for p in preds]
    return sum(ways)


def degree_profile(f: SetFamily) -> DegreeProfile:
    """Comparable and incomparable degree of every member, in member order."""
    m = len(f)
    if f.n <= DENSE_MAX_N and m * m > f.n * (1 << f.n):
        table = densify(f)
        idx = np.fromiter(f.members, dtype=np.int64, count=m)
        comp = zeta_subsets(table, f.n)[idx] + zeta_supersets(table, f.n)[idx] - 2
        comp = [int(v) for v in comp]
    else:
        ms = f.members
        comp = [0] * m
        for i, a in enumerate(ms):
            for j in range(i + 1, m):
                b = ms[j]
                if a & ~b == 0 or b & ~a == 0:
                    comp[i] += 1
                    comp[j] += 1
    return DegreeProfile(f.members, tuple(comp), tuple(m - 1 - c for c in comp))
