"""Named verification sweeps.

Each sweep yields :class:`~comppairs.bounds.BoundReport` rows.  ``grid`` is
``"default"`` (the full sweep) or ``"quick"`` (a reduced sweep for smoke
runs).  Randomised sweeps draw every trial from ``random.Random`` seeded by
``(seed, name, trial)``, so results do not depend on the order sweeps run in.
"""

from __future__ import annotations

import random
from fractions import Fraction
from math import comb

from . import bounds, constructions as cons
from .compressions import monotonicity_report
from .counting import count_comparable, count_cross
from .lattice import SetFamily, cube_degree, full_cube, random_family

RANDOMIZED = {"entropy", "afconj", "monotonicity"}
SOLVER_CHECKS = {"chain-equality", "sperner", "kruskal-katona"}


def _rng(seed: int, name: str, t: int) -> random.Random:
    return random.Random(f"{seed}:{name}:{t}")


def _exact(name, inputs, bound, observed, holds):
    return bounds.BoundReport(name, inputs, bound, observed, holds, bound - observed)


def check_cube_degree(grid="default", **_):
    top = 10 if grid == "default" else 6
    for n in range(1, top + 1):
        cube = full_cube(n).members
        for s in range(n + 1):
            x = (1 << s) - 1
            brute = sum(1 for y in cube if y != x and (x & ~y == 0 or y & ~x == 0))
            formula = cube_degree(n, s)
            yield _exact("cube_degree", {"n": n, "s": s}, formula, brute, brute == formula)


def check_tower(grid="default", **_):
    top = 16 if grid == "default" else 10
    for n in range(1, top + 1):
        for k in range(1, n + 1):
            if n % k:
                continue
            f = cons.tower_of_cubes(n, k)
            m = len(f)
            c = count_comparable(f).comparable
            lead = bounds.af_leading_bound(k, m)
            ok = m == cons.tower_size(n, k) and c >= lead
            yield _exact("tower", {"n": n, "k": k, "m": m}, lead, c, ok)


def check_alon_frankl(grid="default", **_):
    ns = (4, 6, 8, 10, 12) if grid == "default" else (4, 6, 8)
    for n in ns:
        for d in (0, 1, 2):
            if d > n // 2:
                continue
            f1, f2 = cons.alon_frankl(n, d)
            union = len(f1.union(f2))
            cross = count_cross(f1, f2)
            need = Fraction(comb(union, 2), 2 ** (2 * d + 1))
            ok = cross >= need and len(f1) == len(f2) == cons.alon_frankl_block_size(n, d)
            # reported as observed >= bound, so the margin is cross - bound
            yield bounds.BoundReport("alon_frankl", {"n": n, "d": d, "union": union},
                                     need, cross, ok, cross - need)


def check_f_star(grid="default", **_):
    for n in (4, 6, 8):
        for k in range(n // 2):
            lo, hi = cons.f_star_range(n, k)
            for m in range(lo, hi + 1):
                _, a, b = cons.f_star_blocks(n, k, m)
                extra = m - lo
                want = extra * extra // 4
                got = count_cross(a, b)
                yield bounds.BoundReport("f_star", {"n": n, "k": k, "m": m}, want, got,
                                         got == want, want - got)


def check_entropy(grid="default", seed=0, trials=None, **_):
    trials = trials or (500 if grid == "default" else 50)
    for t in range(trials):
        rng = _rng(seed, "entropy", t)
        n = rng.randint(1, 12)
        f = random_family(n, rng)
        if not f.members:
            f = SetFamily(n, (rng.randrange(1 << n),))
        yield bounds.entropy_bound_check(f)
    top = 12 if grid == "default" else 6
    for n in range(1, top + 1):
        for dim in range(n + 1):
            f = cons.subcube(n, 0, (1 << dim) - 1)
            rep = bounds.entropy_bound_check(f)
            tight = abs(rep.bound_value - len(f)) <= bounds.REL_TOL * len(f)
            yield bounds.BoundReport("entropy_subcube", rep.inputs, rep.bound_value,
                                     rep.observed_value, rep.holds and tight, rep.margin)


def check_binom_tail(grid="default", **_):
    top = 30 if grid == "default" else 12
    for r in range(1, top + 1):
        for step in range(11):
            yield bounds.binom_tail_check(r, step * 0.25)


def calculus_grid(grid="default"):
    steps = 100 if grid == "default" else 10
    for alpha in (1 / 300, 1 / 600, 1 / 3000):
        for i in range(steps + 1):
            for j in range(steps + 1):
                yield bounds.CalcPoint(i / steps, j / steps, alpha)


def check_calculus(grid="default", **_):
    for pt in calculus_grid(grid):
        yield bounds.calculus_check(pt)


def check_optimisation(grid="default", **_):
    top = 40 if grid == "default" else 16
    for n in range(1, top + 1):
        for s in range(n // 3 + 1, n // 2 + 1):
            if 3 * s > n:
                yield bounds.optimisation_check(n, s)


def _closure_pair(n, rng):
    # a down-closed A and up-closed B: the shape that makes c(A, B) large
    top = (1 << n) - 1
    gens_a = [rng.randrange(1 << n) for _ in range(rng.randint(1, 3))]
    gens_b = [rng.randrange(1 << n) for _ in range(rng.randint(1, 3))]
    a = {x for x in range(1 << n) if any(x & ~g == 0 for g in gens_a)}
    b = {x for x in range(1 << n) if any(g & ~x == 0 for g in gens_b)}
    return SetFamily(n, tuple(sorted(a))), SetFamily(n, tuple(sorted(b & set(range(top + 1)))))


def _subcube_pair(n, rng):
    out = []
    for _ in range(2):
        hi = rng.randrange(1 << n)
        lo = hi & rng.randrange(1 << n)
        out.append(cons.subcube(n, lo, hi))
    return tuple(out)


def random_pair(n: int, rng: random.Random) -> tuple[SetFamily, SetFamily]:
    style = rng.randrange(3)
    if style == 0:
        a, b = random_family(n, rng), random_family(n, rng)
    elif style == 1:
        a, b = _closure_pair(n, rng)
    else:
        a, b = _subcube_pair(n, rng)
    if not a.members:
        a = SetFamily(n, (0,))
    if not b.members:
        b = SetFamily(n, ((1 << n) - 1,))
    return a, b


def all_nonempty_families(n: int):
    size = 1 << n
    for code in range(1, 1 << size):
        yield SetFamily(n, tuple(x for x in range(size) if code >> x & 1))


def check_afconj(grid="default", seed=0, trials=None, **_):
    for n in (2, 3):
        fams = list(all_nonempty_families(n))
        for a in fams:
            for b in fams:
                yield bounds.afconj_check(a, b)
    trials = trials or (10_000 if grid == "default" else 200)
    for n in range(6, 13):
        for t in range(trials):
            a, b = random_pair(n, _rng(seed, f"afconj{n}", t))
            yield bounds.afconj_check(a, b)


def check_sparse_tower(grid="default", eps=0.25, **_):
    # the bound is asymptotic; below n = 6 the towers are too small for it
    top = 16 if grid == "default" else 10
    for n in range(6, top + 1):
        for k in (2, 4):
            if n % k:
                continue
            f = cons.tower_of_cubes(n, k)
            inc = count_comparable(f).incomparable
            floor = bounds.sparse_lower_bound(n, len(f) / n, eps)
            yield bounds.BoundReport("sparse_tower", {"n": n, "k": k, "eps": eps},
                                     floor, inc, inc >= floor, inc - floor)


def check_monotonicity(grid="default", seed=0, trials=None, **_):
    rep = monotonicity_report(2, exhaustive=True)
    yield bounds.BoundReport("monotonicity", {"n": 2, "mode": "exhaustive"}, 0,
                             rep.violations, rep.violations == 0, -rep.violations)
    n = 6 if grid == "default" else 4
    trials = trials or (2_000 if grid == "default" else 100)
    rep = monotonicity_report(n, trials=trials, seed=seed)
    yield bounds.BoundReport("monotonicity", {"n": n, "trials": rep.trials}, 0,
                             rep.violations, rep.violations == 0, -rep.violations)


def check_chain_equality(grid="default", **_):
    from .solver import solve_max

    top = 5 if grid == "default" else 4
    for n in range(2, top + 1):
        for m in range(1 << n | 1):
            res = solve_max(n, m)
            full = comb(m, 2)
            ok = res.complete and (res.optimum == full if m <= n + 1 else res.optimum < full)
            yield _exact("chain_equality", {"n": n, "m": m}, full, res.optimum, ok)


def check_sperner(grid="default", **_):
    from .solver import solve_min

    top = 5 if grid == "default" else 4
    for n in range(1, top + 1):
        width = comb(n, n // 2)
        for m in range((1 << n) + 1):
            res = solve_min(n, m)
            ok = res.complete and ((res.optimum == 0) == (m <= width))
            yield _exact("sperner", {"n": n, "m": m, "width": width}, 0, res.optimum, ok)


def check_kruskal_katona(grid="default", **_):
    from .solver import kruskal_katona_crosscheck

    top = 6 if grid == "default" else 4
    for n in range(1, top + 1):
        for k in range(1, n + 1):
            for b in range(min(comb(n, k), 12) + 1):
                rep = kruskal_katona_crosscheck(n, k, b)
                yield bounds.BoundReport("kruskal_katona", {"n": n, "k": k, "b": b},
                                         rep["colex_shadow"], rep["search_min_a"], rep["agree"],
                                         rep["colex_shadow"] - rep["search_min_a"])


CHECKS = {
    "cube-degree": check_cube_degree,
    "tower": check_tower,
    "alon-frankl": check_alon_frankl,
    "f-star": check_f_star,
    "entropy": check_entropy,
    "binom-tail": check_binom_tail,
    "calculus": check_calculus,
    "optimisation": check_optimisation,
    "afconj": check_afconj,
    "sparse-tower": check_sparse_tower,
    "monotonicity": check_monotonicity,
    "chain-equality": check_chain_equality,
    "sperner": check_sperner,
    "kruskal-katona": check_kruskal_katona,
}


def run_check(name: str, grid: str = "default", seed: int = 0, trials: int | None = None):
    if name not in CHECKS:
        raise KeyError(f"unknown check {name!r}; choose from {sorted(CHECKS)}")
    if grid not in ("default", "quick"):
        raise ValueError(f"unknown grid {grid!r}")
    return CHECKS[name](grid=grid, seed=seed, trials=trials)
