"""Exact solvers: max/min comparable pairs for m-set families, the two-layer
cross problem, and the Kruskal-Katona cross-check."""

from __future__ import annotations

import multiprocessing as mp
import time
from concurrent.futures import ProcessPoolExecutor
from math import comb

from ..errors import BudgetExceeded, RangeViolation
from ..lattice import SetFamily, check_universe
from .cache import load_result, store_result
from .search import KNOWN, MAX_SOLVER_N, Budget, PairSearch, SolveResult
from .seeds import seed_family
from .twolayer import TwoLayerSearch, check_two_layer, colex_min_shadow

__all__ = [
    "Budget", "SolveResult", "solve_max", "solve_min", "solve_two_layer",
    "colex_min_shadow", "kruskal_katona_crosscheck", "load_result", "store_result",
]

_SHARED = None


def _init_worker(shared):
    global _SHARED
    _SHARED = shared


def _run_roots(n, m, sense, budget, symmetry, seed, roots):
    s = PairSearch(n, m, sense, budget, symmetry=symmetry, seed=seed, shared=_SHARED)
    done = s.run(roots)
    return s.best_value, s.best_family, done, s.nodes, s.prunes


def _root_masks(n: int, symmetry: bool) -> list[int]:
    if symmetry:
        # a lex-least family under permutations and complementation starts
        # with an initial segment [s] with s <= n/2
        return [(1 << s) - 1 for s in range(n // 2 + 1)]
    return list(range(1 << n))


def _solve_pairs(n, m, sense, budget, symmetry, workers, strict) -> SolveResult:
    n = check_universe(n)
    if n > MAX_SOLVER_N:
        raise RangeViolation(f"exact solver supports n <= {MAX_SOLVER_N}, got {n}")
    if not 0 <= m <= 1 << n:
        raise RangeViolation(f"m={m} outside 0..{1 << n}")
    budget = budget or Budget()
    objective = "max_c" if sense > 0 else "min_c"
    start = time.monotonic()
    seed = seed_family(n, m, sense) if m else ()
    if workers <= 1:
        s = PairSearch(n, m, sense, budget, symmetry=symmetry, seed=seed)
        done = s.run()
        value, family, nodes, prunes = s.best_value, s.best_family, s.nodes, s.prunes
    else:
        roots = _root_masks(n, symmetry)
        chunks = [roots[i::workers] for i in range(workers)]
        shared = mp.get_context("fork").Value("q", sense * -(1 << 62))
        with ProcessPoolExecutor(workers, mp_context=mp.get_context("fork"),
                                 initializer=_init_worker, initargs=(shared,)) as pool:
            parts = list(pool.map(_run_roots, *zip(*[
                (n, m, sense, budget, symmetry, seed, set(chunk)) for chunk in chunks])))
        value, family = None, None
        done, nodes, prunes = True, 0, 0
        for v, fam, ok, nd, pr in parts:
            done &= ok
            nodes += nd
            prunes += pr
            if value is None or v > value or (v == value and fam < family):
                value, family = v, fam
    optimum = sense * value
    if done:
        KNOWN.setdefault((n, objective), {})[m] = optimum
    result = SolveResult(objective, n, {"m": m}, optimum, SetFamily(n, tuple(family)),
                         done, nodes, prunes, time.monotonic() - start)
    if not done and strict:
        raise BudgetExceeded(result)
    return result


def solve_max(n: int, m: int, budget: Budget | None = None, symmetry: bool = True,
              workers: int = 1, strict: bool = False) -> SolveResult:
    """Maximum number of comparable pairs over families of m subsets of [n].

    If the budget runs out the best family found is returned with
    ``complete=False``; pass ``strict=True`` to raise :class:`BudgetExceeded`
    instead.
    """
    return _solve_pairs(n, m, +1, budget, symmetry, workers, strict)


def solve_min(n: int, m: int, budget: Budget | None = None, symmetry: bool = True,
              workers: int = 1, strict: bool = False) -> SolveResult:
    """Minimum number of comparable pairs over families of m subsets of [n]."""
    return _solve_pairs(n, m, -1, budget, symmetry, workers, strict)


def solve_two_layer(n: int, k1: int, k2: int, a: int, b: int, budget: Budget | None = None,
                    symmetry: bool = True, strict: bool = False) -> SolveResult:
    """Max of c(A, B) over a k1-sets A and b k2-sets B."""
    check_two_layer(n, k1, k2, a, b)
    if n > MAX_SOLVER_N:
        raise RangeViolation(f"exact solver supports n <= {MAX_SOLVER_N}, got {n}")
    start = time.monotonic()
    s = TwoLayerSearch(n, k1, k2, a, b, budget or Budget(), symmetry=symmetry)
    done = s.run()
    result = SolveResult("two_layer_max", n, {"k1": k1, "k2": k2, "a": a, "b": b},
                         s.best_value, s.witness(), done, s.nodes, s.prunes,
                         time.monotonic() - start)
    if not done and strict:
        raise BudgetExceeded(result)
    return result


def min_shadow_by_search(n: int, k: int, b: int, budget: Budget | None = None) -> int:
    """Least a for which some a (k-1)-sets lie under all k subsets of b k-sets.

    Found by bisection on a: the two-layer optimum is nondecreasing in a and
    reaches b*k at a = C(n, k-1).
    """
    target = b * k
    lo, hi = 0, comb(n, k - 1)
    while lo < hi:
        mid = (lo + hi) // 2
        res = solve_two_layer(n, k - 1, k, mid, b, budget, strict=True)
        if res.optimum == target:
            hi = mid
        else:
            lo = mid + 1
    return lo


def kruskal_katona_crosscheck(n: int, k: int, b: int, budget: Budget | None = None) -> dict:
    if n > 7:
        raise RangeViolation(f"cross-check supports n <= 7, got {n}")
    searched = min_shadow_by_search(n, k, b, budget)
    colex = colex_min_shadow(n, k, b)
    return {"n": n, "k": k, "b": b, "search_min_a": searched, "colex_shadow": colex,
            "agree": searched == colex}
