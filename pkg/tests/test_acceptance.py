"""Acceptance criteria, each at full size and under its time limit.

Every test prints one line ``[PASS|FAIL] <number> <name> (<seconds>s / limit)``
to the terminal, whether or not pytest output capture is on.
"""

import random
import time
from math import comb

import pytest

from comppairs import verify
from comppairs.bounds import ABS_TOL
from comppairs.compressions import (
    all_down, all_left, all_up, compress_fixpoint, is_down_set, is_left_compressed, is_up_set,
    monotonicity_report,
)
from comppairs.counting import count_comparable, count_comparable_fast, count_comparable_naive, count_cross
from comppairs.lattice import SetFamily
from comppairs.solver import solve_max, solve_min, solve_two_layer


@pytest.fixture
def criterion(capsys):
    def record(number, name, limit, body):
        start = time.monotonic()
        ok, detail = body()
        took = time.monotonic() - start
        ok = ok and took < limit
        with capsys.disabled():
            print(f"\n[{'PASS' if ok else 'FAIL'}] {number:2d} {name} ({took:.1f}s / {limit}s) {detail}")
        assert ok, detail
    return record


def sweep(name, **kw):
    def body():
        rows = list(verify.run_check(name, seed=0, **kw))
        bad = [r.as_row() for r in rows if not r.holds]
        return not bad and bool(rows), f"{len(rows)} rows, {len(bad)} failing {bad[:3]}"
    return body


def test_01_oracle_equivalence(criterion):
    def body():
        for t in range(1000):
            rng = random.Random(f"oracle:{t}")
            n = rng.randint(1, 12)
            m = rng.randint(0, min(300, 1 << n))
            f = SetFamily(n, tuple(sorted(rng.sample(range(1 << n), m))))
            if count_comparable_fast(f) != count_comparable_naive(f):
                return False, f"mismatch on trial {t}"
        return True, "1000 families"
    criterion(1, "oracle equivalence", 60, body)


def test_02_chain_equality(criterion):
    criterion(2, "chain equality", 600, sweep("chain-equality"))


def test_03_tower(criterion):
    criterion(3, "tower inequality", 30, sweep("tower"))


def test_04_alon_frankl(criterion):
    criterion(4, "alon-frankl construction", 60, sweep("alon-frankl"))


def test_05_afconj(criterion):
    criterion(5, "cross-pair predicate, exhaustive n=2,3 and 10^4 pairs per n in 6..12", 600,
              sweep("afconj", trials=10_000))


def test_06_calculus(criterion):
    def body():
        rows = list(verify.check_calculus())
        worst = min(float(r.margin) for r in rows)
        ok = len(rows) == 3 * 101 * 101 and worst >= -ABS_TOL and all(r.holds for r in rows)
        return ok, f"{len(rows)} points, worst margin {worst:.3e}"
    criterion(6, "analytic inequality grid", 10, body)


def test_07_entropy(criterion):
    criterion(7, "entropy bound", 30, sweep("entropy", trials=500))


def test_08_binom_tail(criterion):
    criterion(8, "binomial tail", 5, sweep("binom-tail"))


def test_09_optimisation(criterion):
    criterion(9, "optimisation sequence", 5, sweep("optimisation"))


def test_10_f_star(criterion):
    criterion(10, "F* block cross count", 30, sweep("f-star"))


def test_11_cube_degree(criterion):
    criterion(11, "cube degree", 5, sweep("cube-degree"))


def test_12_kruskal_katona(criterion):
    criterion(12, "kruskal-katona cross-check", 600, sweep("kruskal-katona"))


def test_13_sperner(criterion):
    def body():
        ok, detail = sweep("sperner")()
        special = solve_min(2, 3).optimum
        return ok and special == 2, f"{detail}; min(2,3)={special}"
    criterion(13, "sperner cross-check", 300, body)


def test_14_solver_soundness(criterion):
    def body():
        checked = 0
        for n in range(1, 5):
            for m in range((1 << n) + 1):
                for solve in (solve_max, solve_min):
                    values = set()
                    for workers in (1, 2):
                        for sym in (True, False):
                            r = solve(n, m, symmetry=sym, workers=workers)
                            if not r.complete or count_comparable(r.witness).comparable != r.optimum:
                                return False, f"{solve.__name__}({n},{m}) witness mismatch"
                            values.add(r.optimum)
                            checked += 1
                    if len(values) != 1:
                        return False, f"{solve.__name__}({n},{m}) varies: {values}"
            for k1 in range(n + 1):
                for k2 in range(k1, n + 1):
                    for a in range(comb(n, k1) + 1):
                        for b in range(comb(n, k2) + 1):
                            values = set()
                            for sym in (True, False):
                                r = solve_two_layer(n, k1, k2, a, b, symmetry=sym)
                                if count_cross(*r.witness) != r.optimum:
                                    return False, f"two-layer {(n, k1, k2, a, b)} witness mismatch"
                                values.add(r.optimum)
                                checked += 1
                            if len(values) != 1:
                                return False, f"two-layer {(n, k1, k2, a, b)} varies"
        return True, f"{checked} solves"
    criterion(14, "solver soundness", 300, body)


def test_15_compressions(criterion):
    def body():
        for t in range(500):
            rng = random.Random(f"compress:{t}")
            n = rng.randint(1, 10)
            dens = rng.random()
            f = SetFamily(n, tuple(x for x in range(1 << n) if rng.random() < dens))
            for kinds, closed in ((all_down(n), is_down_set), (all_up(n), is_up_set),
                                  (all_left(n), is_left_compressed)):
                g = compress_fixpoint(f, kinds)
                if len(g) != len(f) or not closed(g) or compress_fixpoint(g, kinds) != g:
                    return False, f"trial {t} fails for {kinds[:1]}"
        rep = monotonicity_report(2, exhaustive=True)
        return rep.violations == 0, f"500 families; n=2 exhaustive: {rep.trials} pairs, {rep.violations} violations"
    criterion(15, "compression suite", 120, body)
