"""Ground-set symmetries acting on masks, used for orbit-minimum rejection.

The search enumerates families as ascending mask sequences.  Every orbit of
families under a group G has a lexicographically least member F*, and F*
satisfies, for each prefix depth d: all later members y have
``min(Stab(x_1..x_{d-1}) . y) >= x_d``.  Rejecting candidates that break this
at shallow depth is therefore sound, and it never discards the lex-least
optimal family.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations

import numpy as np


@lru_cache(maxsize=None)
def group_table(n: int, with_dual: bool) -> np.ndarray:
    """Array ``g[k, x]`` = image of mask x under the k-th group element.

    Elements are all permutations of [n], optionally each composed with
    complementation.  Row 0 is the identity.
    """
    size = 1 << n
    perms = np.array(list(permutations(range(n))), dtype=np.int64)
    bits = (np.arange(size)[:, None] >> np.arange(n)) & 1
    images = (bits @ (1 << perms).T).T.astype(np.int32)
    if with_dual:
        table = np.empty((2 * len(perms), size), dtype=np.int32)
        table[0::2] = images
        table[1::2] = images ^ (size - 1)
    else:
        table = images
    assert (table[0] == np.arange(size)).all()
    table.setflags(write=False)
    return table


class OrbitFilter:
    """Stabilizer chain state for the first few chosen masks."""

    def __init__(self, table: np.ndarray, rows: np.ndarray | None = None):
        self.table = table
        self.rows = np.arange(table.shape[0]) if rows is None else rows

    def orbit_min(self, masks) -> np.ndarray:
        sub = self.table[self.rows][:, masks]
        return sub.min(axis=0)

    def admit(self, chosen: int, candidates: list[int]) -> tuple[bool, list[int], "OrbitFilter"]:
        """Check ``chosen`` as the next member and filter later candidates.

        Returns (ok, surviving candidates, filter for the next depth).
        """
        col = self.table[self.rows, chosen]
        if col.min() < chosen:
            return False, [], self
        if candidates:
            mins = self.orbit_min(candidates)
            keep = [y for y, lo in zip(candidates, mins.tolist()) if lo >= chosen]
        else:
            keep = []
        nxt = OrbitFilter(self.table, self.rows[col == chosen])
        return True, keep, nxt
