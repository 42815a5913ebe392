from fractions import Fraction

import pytest

from comppairs import bounds
from comppairs.constructions import subcube
from comppairs.errors import DomainError
from comppairs.lattice import SetFamily, full_cube


def test_binary_entropy():
    assert bounds.binary_entropy(0.5) == 1
    assert bounds.binary_entropy(0) == 0
    assert bounds.binary_entropy(0.1) < 0.5


def test_entropy_bound():
    rep = bounds.entropy_bound_check(full_cube(5))
    assert rep.holds and rep.bound_value == pytest.approx(32)
    rep = bounds.entropy_bound_check(SetFamily(4, (5,)))
    assert rep.holds and rep.bound_value == pytest.approx(1)
    rep = bounds.entropy_bound_check(subcube(6, 1, 0b1011))
    assert rep.bound_value == pytest.approx(len(subcube(6, 1, 0b1011)))


def test_binom_tail():
    rep = bounds.binom_tail_check(4, 0)
    assert rep.observed_value == 11 and rep.bound_value == pytest.approx(16) and rep.holds
    rep = bounds.binom_tail_check(4, 1)
    assert rep.observed_value == 1 and rep.bound_value == pytest.approx(2.165, abs=1e-3)


def test_calculus():
    rep = bounds.calculus_check(bounds.CalcPoint(0, 0.3, 1 / 300))
    assert rep.holds and float(rep.observed_value) == pytest.approx(0.3 ** (1 - 1 / 300))
    rep = bounds.calculus_check(bounds.CalcPoint(0.5, 0.5, 1 / 300))
    assert float(rep.observed_value) == pytest.approx(0.7535, abs=1e-3)
    assert float(rep.bound_value) == pytest.approx(3 ** (1 / 300))
    with pytest.raises(DomainError):
        bounds.CalcPoint(1.5, 0, 0.01)


def test_optimisation():
    assert bounds.optimisation_sequence(6, 3) == [16, 19, 28, 43]
    seq = bounds.optimisation_sequence(9, 4)
    assert seq[0] == min(seq)
    assert bounds.optimisation_check(9, 4).holds


def test_afconj():
    cube = full_cube(2)
    rep = bounds.afconj_check(cube, cube)
    assert rep.observed_value == 5 and rep.bound_value == pytest.approx(15.93, abs=0.01)
    a, b = SetFamily(4, (0, 1)), SetFamily(4, (3, 7))
    rep = bounds.afconj_check(a, b)
    assert rep.bound_value == 4 and rep.holds


def test_leading_and_sparse():
    assert bounds.af_leading_bound(2, 31) == Fraction(465, 2)
    assert bounds.af_leading_bound(1, 9) == 0
    assert bounds.af_leading_bound(3, 10) == 30
    assert bounds.sparse_lower_bound(8, 1, 0.25) == 0
    assert bounds.sparse_lower_bound(8, 4, 0.25) == pytest.approx(64)


def test_report_row():
    row = bounds.binom_tail_check(4, 0).as_row()
    assert set(row) == {"name", "inputs", "bound", "observed", "margin", "holds"}
    assert row["holds"] == "true"
