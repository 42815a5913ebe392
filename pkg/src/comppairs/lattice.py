"""Subsets of [n] as integer bitmasks, and families of them.

Element ``i`` of the ground set (1-indexed in any text a user sees) lives at
bit position ``i - 1``.  A family is stored as a sorted tuple of distinct
masks together with its universe size.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    InvalidPermutation,
    MaskOutOfRange,
    UniverseMismatch,
    UniverseOutOfRange,
    UniverseTooLarge,
)

MAX_N = 62
DENSE_MAX_N = 24


def check_universe(n: int) -> int:
    if not isinstance(n, (int, np.integer)) or isinstance(n, bool):
        raise UniverseOutOfRange(f"universe size must be an integer, got {n!r}")
    if not 1 <= n <= MAX_N:
        raise UniverseOutOfRange(f"universe size {n} outside 1..{MAX_N}")
    return int(n)


def popcount(x: int) -> int:
    return x.bit_count()


def elements(mask: int) -> list[int]:
    """1-indexed elements of ``mask``."""
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def mask_of(elems: Iterable[int]) -> int:
    """Bitmask of a collection of 1-indexed elements."""
    m = 0
    for e in elems:
        if e < 1:
            raise MaskOutOfRange(f"element {e} is not a positive integer")
        m |= 1 << (e - 1)
    return m


def is_subset(a: int, b: int) -> bool:
    return a & ~b == 0


def is_comparable(a: int, b: int) -> bool:
    """True when one of the masks contains the other (equal masks included)."""
    return a & ~b == 0 or b & ~a == 0


def cube_degree(n: int, s: int) -> int:
    """Number of other subsets of [n] comparable to a fixed set of size ``s``.

    The set has ``2**s - 1`` proper subsets and ``2**(n-s) - 1`` proper
    supersets.
    """
    if not 0 <= s <= n:
        raise ValueError(f"set size {s} outside 0..{n}")
    return (1 << s) + (1 << (n - s)) - 2


@dataclass(frozen=True)
class SetFamily:
    """A duplicate-free family of subsets of [n], members sorted by mask.

    Build through :func:`make_family`; the constructor trusts its input.
    """

    n: int
    members: tuple[int, ...]
    duplicates_removed: int = field(default=0, compare=False, repr=False)

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, mask) -> bool:
        return mask in self._lookup

    @property
    def m(self) -> int:
        return len(self.members)

    @property
    def _lookup(self) -> frozenset:
        # cached on first use; the dataclass is frozen so go through __dict__
        s = self.__dict__.get("_set")
        if s is None:
            s = frozenset(self.members)
            object.__setattr__(self, "_set", s)
        return s

    def union(self, other: "SetFamily") -> "SetFamily":
        same_universe(self, other)
        return make_family(self.n, self.members + other.members)

    def sets(self) -> list[list[int]]:
        """Members as lists of 1-indexed elements."""
        return [elements(x) for x in self.members]


def make_family(n: int, masks: Iterable[int]) -> SetFamily:
    """Validate, deduplicate and sort ``masks`` into a :class:`SetFamily`.

    The number of dropped duplicates is kept on ``duplicates_removed``.
    """
    n = check_universe(n)
    raw = [int(x) for x in masks]
    limit = 1 << n
    for x in raw:
        if x < 0 or x >= limit:
            raise MaskOutOfRange(f"mask {x:#b} has a bit outside a universe of {n}")
    members = tuple(sorted(set(raw)))
    return SetFamily(n, members, len(raw) - len(members))


def same_universe(a: SetFamily, b: SetFamily) -> int:
    if a.n != b.n:
        raise UniverseMismatch(f"universe sizes differ: {a.n} vs {b.n}")
    return a.n


def full_cube(n: int) -> SetFamily:
    n = check_universe(n)
    return SetFamily(n, tuple(range(1 << n)))


def layer_masks(n: int, k: int) -> list[int]:
    """All k-subsets of [n] as masks, ascending."""
    if not 0 <= k <= n:
        return []
    return sorted(sum(1 << i for i in c) for c in combinations(range(n), k))


def dual(f: SetFamily) -> SetFamily:
    """Complement every member within [n]."""
    top = (1 << f.n) - 1
    return SetFamily(f.n, tuple(sorted(top ^ x for x in f.members)))


def apply_permutation(mask: int, perm: Sequence[int]) -> int:
    out = 0
    i = 0
    while mask:
        if mask & 1:
            out |= 1 << perm[i]
        mask >>= 1
        i += 1
    return out


def permute(f: SetFamily, perm: Sequence[int]) -> SetFamily:
    """Relabel the ground set: element at bit ``i`` moves to bit ``perm[i]``.

    ``perm`` is 0-indexed and must be a bijection of ``range(n)``.
    """
    perm = [int(p) for p in perm]
    if len(perm) != f.n or sorted(perm) != list(range(f.n)):
        raise InvalidPermutation(f"{perm} is not a permutation of range({f.n})")
    return SetFamily(f.n, tuple(sorted(apply_permutation(x, perm) for x in f.members)))


def densify(f: SetFamily) -> np.ndarray:
    """Membership table of length ``2**n`` (uint8, 1 where a mask is present)."""
    if f.n > DENSE_MAX_N:
        raise UniverseTooLarge(f"dense table needs n <= {DENSE_MAX_N}, got {f.n}")
    table = np.zeros(1 << f.n, dtype=np.uint8)
    if f.members:
        table[np.fromiter(f.members, dtype=np.int64, count=len(f.members))] = 1
    return table


def sparsify(n: int, table: np.ndarray) -> SetFamily:
    n = check_universe(n)
    table = np.asarray(table)
    if table.shape != (1 << n,):
        raise ValueError(f"expected a table of length {1 << n}, got shape {table.shape}")
    return SetFamily(n, tuple(int(x) for x in np.flatnonzero(table)))


def random_family(n: int, rng, density: float | None = None) -> SetFamily:
    """Each subset of [n] kept independently with probability ``density``
    (drawn uniformly from ``rng`` when not given)."""
    if density is None:
        density = rng.random()
    return SetFamily(n, tuple(x for x in range(1 << n) if rng.random() < density))
