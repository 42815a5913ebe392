import pytest

from comppairs.compressions import (
    all_down, all_left, all_up, compress_fixpoint, compress_pair, compress_step, down,
    is_down_set, is_left_compressed, is_up_set, left, monotonicity_report, up,
)
from comppairs.counting import count_cross
from comppairs.errors import IndexOutOfRange
from comppairs.lattice import full_cube, make_family, mask_of

from conftest import seeded_families


def fam(n, *sets):
    return make_family(n, [mask_of(s) for s in sets])


def test_single_steps():
    assert compress_step(fam(2, [2]), left(0, 1)) == fam(2, [1])
    assert compress_step(fam(2, [], [1]), down(0)) == fam(2, [], [1])
    assert compress_step(fam(3, [1], [2]), up(2)) == fam(3, [1, 3], [2, 3])


def test_fixpoints():
    assert compress_fixpoint(fam(2, [1]), all_up(2)) == fam(2, [1, 2])
    f = fam(4, [2, 3], [1, 4], [3])
    g = compress_fixpoint(f, all_down(4))
    assert is_down_set(g) and len(g) == len(f)
    h = compress_fixpoint(f, all_left(4))
    assert is_left_compressed(h) and compress_fixpoint(h, all_left(4)) == h


def test_bad_index():
    with pytest.raises(IndexOutOfRange):
        compress_step(fam(3, [1]), left(2, 1))
    with pytest.raises(IndexOutOfRange):
        compress_step(fam(3, [1]), down(3))


def test_suite_on_seeded_families():
    for f in seeded_families(500, 10, seed=7):
        n = f.n
        for kinds, closed in ((all_down(n), is_down_set), (all_up(n), is_up_set),
                              (all_left(n), is_left_compressed)) if n > 1 else ():
            g = compress_fixpoint(f, kinds)
            assert len(g) == len(f)
            assert closed(g)
            assert compress_fixpoint(g, kinds) == g


def test_pair_harness_identity_on_full_cube():
    cube = full_cube(3)
    a, b = compress_pair(cube, cube)
    assert (a, b) == (cube, cube)
    assert count_cross(a, b) == count_cross(cube, cube)


def test_monotonicity_exhaustive_n2():
    rep = monotonicity_report(2, exhaustive=True)
    assert rep.trials == 256 and rep.violations == 0


def test_monotonicity_seeded_is_reproducible():
    r1 = monotonicity_report(4, trials=50, seed=3)
    r2 = monotonicity_report(4, trials=50, seed=3)
    assert r1.as_record() == r2.as_record()
