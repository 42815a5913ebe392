import numpy as np
import pytest

from comppairs.counting import count_comparable
from comppairs.constructions import tower_of_cubes
from comppairs.errors import InvalidPermutation, MaskOutOfRange, UniverseOutOfRange, UniverseTooLarge
from comppairs.lattice import (
    SetFamily, cube_degree, densify, dual, elements, full_cube, is_comparable, layer_masks,
    make_family, mask_of, permute, sparsify,
)


def test_make_family_dedups():
    f = make_family(2, [0b00, 0b01, 0b01])
    assert f.members == (0, 1)
    assert f.duplicates_removed == 1


def test_make_family_single_and_out_of_range():
    assert len(make_family(3, [0b111])) == 1
    with pytest.raises(MaskOutOfRange):
        make_family(2, [0b100])


@pytest.mark.parametrize("n", [0, 63, -1])
def test_universe_bounds(n):
    with pytest.raises(UniverseOutOfRange):
        make_family(n, [])


def test_is_comparable():
    assert is_comparable(mask_of([1]), mask_of([1, 2]))
    assert not is_comparable(mask_of([1]), mask_of([2]))
    assert is_comparable(mask_of([1, 2]), mask_of([1, 2]))


def test_elements_round_trip():
    assert elements(0b1011) == [1, 2, 4]
    assert mask_of([1, 2, 4]) == 0b1011


def test_dual():
    f = make_family(2, [0, mask_of([1])])
    assert dual(f).members == (mask_of([2]), mask_of([1, 2]))
    assert dual(dual(f)) == f
    t = tower_of_cubes(4, 2)
    assert count_comparable(dual(t)) == count_comparable(t)


def test_permute():
    t = tower_of_cubes(4, 2)
    assert permute(t, [0, 1, 2, 3]) == t
    assert permute(make_family(2, [1]), [1, 0]).members == (2,)
    assert count_comparable(permute(t, [2, 0, 3, 1])) == count_comparable(t)
    with pytest.raises(InvalidPermutation):
        permute(t, [0, 0, 1, 2])


def test_cube_degree_examples():
    assert cube_degree(4, 0) == 15
    assert cube_degree(4, 2) == 6


def test_layer_masks_ascending():
    assert layer_masks(4, 2) == sorted(layer_masks(4, 2))
    assert len(layer_masks(5, 2)) == 10
    assert layer_masks(3, 4) == []


def test_dense_round_trip():
    f = make_family(5, [0, 3, 17, 31])
    table = densify(f)
    assert table.dtype == np.uint8 and table.sum() == 4
    assert sparsify(5, table) == f
    with pytest.raises(UniverseTooLarge):
        densify(SetFamily(25, ()))


def test_contains():
    f = full_cube(3)
    assert 5 in f and 8 not in f
