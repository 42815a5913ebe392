"""Counting, bounding and optimising comparable pairs in set families."""

from .bounds import BoundReport
from .constructions import (
    alon_frankl, chain, f_star, h_family, middle_levels, subcube, tower_of_cubes,
)
from .counting import (
    PairCounts, count_chains, count_comparable, count_comparable_fast,
    count_comparable_naive, count_cross, degree_profile,
)
from .errors import BudgetExceeded, ComparablesError
from .lattice import SetFamily, dual, full_cube, make_family, mask_of, permute

__all__ = [
    "BoundReport", "BudgetExceeded", "ComparablesError", "PairCounts", "SetFamily",
    "alon_frankl", "chain", "count_chains", "count_comparable", "count_comparable_fast",
    "count_comparable_naive", "count_cross", "degree_profile", "dual", "f_star",
    "full_cube", "h_family", "make_family", "mask_of", "middle_levels", "permute",
    "subcube", "tower_of_cubes",
]
