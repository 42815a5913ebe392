"""Invariants checked on generated families."""

from hypothesis import given, settings, strategies as st

from comppairs.compressions import all_down, all_left, all_up, compress_fixpoint, compress_step, left
from comppairs.counting import (
    count_chains, count_comparable, count_comparable_fast, count_comparable_naive, count_cross,
    degree_profile,
)
from comppairs.io import parse_family, render_family
from comppairs.lattice import SetFamily, dual, make_family, permute

from conftest import brute_pairs


@st.composite
def families(draw, max_n=7):
    n = draw(st.integers(1, max_n))
    masks = draw(st.sets(st.integers(0, (1 << n) - 1), max_size=40))
    return make_family(n, masks)


@st.composite
def family_and_perm(draw):
    f = draw(families())
    perm = draw(st.permutations(range(f.n)))
    return f, perm


@given(families())
def test_engines_match_brute_force(f):
    ref = brute_pairs(f)
    assert count_comparable_naive(f).comparable == ref
    assert count_comparable_fast(f).comparable == ref


@given(family_and_perm())
def test_permutation_and_dual_invariance(fp):
    f, perm = fp
    base = count_comparable(f)
    assert count_comparable(permute(f, perm)) == base
    assert count_comparable(dual(f)) == base


@given(families())
def test_self_cross_and_two_chains(f):
    c = count_comparable(f).comparable
    assert count_cross(f, f) == c
    assert count_chains(f, 2) == c


@given(families(), st.integers(0, 127))
def test_adding_a_set_never_lowers_c(f, x):
    x &= (1 << f.n) - 1
    bigger = make_family(f.n, f.members + (x,))
    assert count_comparable(bigger).comparable >= count_comparable(f).comparable


@given(families())
def test_degree_sums(f):
    prof = degree_profile(f)
    counts = count_comparable(f)
    assert sum(prof.comparable) == 2 * counts.comparable
    assert sum(prof.incomparable) == 2 * counts.incomparable


@given(families())
def test_compression_closure(f):
    n = f.n
    for kinds in (all_down(n), all_up(n), all_left(n)):
        g = compress_fixpoint(f, kinds)
        assert len(g) == len(f)
        assert all(compress_step(g, c) == g for c in kinds)


@given(families(max_n=5))
def test_left_step_preserves_size(f):
    if f.n >= 2:
        assert len(compress_step(f, left(0, f.n - 1))) == len(f)


@settings(max_examples=200)
@given(families(max_n=10))
def test_family_file_round_trip(f):
    assert parse_family(render_family(f)) == f


@given(families())
def test_cross_is_strict(f):
    # a family crossed with itself never counts a set against itself
    singles = SetFamily(f.n, f.members[:1])
    assert count_cross(singles, singles) == 0
