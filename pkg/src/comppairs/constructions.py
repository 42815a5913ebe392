"""Generators for the named families: chains, subcubes, towers of cubes,
the fattened two-block construction, the extreme-layer families ``H_k`` and
the dense candidates ``F*_m``.

Each generator has a companion ``*_size`` function giving the predicted
family size from its closed form.
"""

from __future__ import annotations

from math import comb

from .errors import (
    ChainTooLong,
    CutoffTooLarge,
    NotDivisible,
    NotNested,
    OddUniverse,
    RadiusTooLarge,
    RangeViolation,
)
from .lattice import SetFamily, check_universe, layer_masks, make_family


def _submasks(mask: int):
    """All submasks of ``mask`` in descending numeric order."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def chain(n: int, m: int) -> SetFamily:
    """The initial segments ``{}, [1], ..., [m-1]``; all C(m,2) pairs comparable."""
    n = check_universe(n)
    if m < 0:
        raise ValueError(f"chain length must be nonnegative, got {m}")
    if m > n + 1:
        raise ChainTooLong(f"a chain in 2^[{n}] has at most {n + 1} sets, asked for {m}")
    return SetFamily(n, tuple((1 << i) - 1 for i in range(m)))


def subcube(n: int, lo: int, hi: int) -> SetFamily:
    """All sets F with ``lo <= F <= hi``."""
    n = check_universe(n)
    if lo & ~hi:
        raise NotNested(f"{lo:#b} is not contained in {hi:#b}")
    free = hi & ~lo
    return make_family(n, (lo | s for s in _submasks(free)))


def tower_size(n: int, k: int) -> int:
    return k * (1 << (n // k)) - k + 1


def tower_of_cubes(n: int, k: int) -> SetFamily:
    """Union of the k subcubes between consecutive initial segments ``[i*l]``, ``l = n/k``."""
    n = check_universe(n)
    if k < 1 or n % k:
        raise NotDivisible(f"tower needs k >= 1 dividing n; got n={n}, k={k}")
    ell = n // k
    masks = []
    for i in range(1, k + 1):
        lo = (1 << ((i - 1) * ell)) - 1
        hi = (1 << (i * ell)) - 1
        masks.extend(lo | s for s in _submasks(hi & ~lo))
    return make_family(n, masks)


def alon_frankl_block_size(n: int, d: int) -> int:
    half = n // 2
    return (1 << half) * sum(comb(half, j) for j in range(d + 1))


def alon_frankl(n: int, d: int) -> tuple[SetFamily, SetFamily]:
    """The two fattened blocks over an even universe.

    The first block holds every set with at most ``d`` elements outside
    ``X = [n/2]``; the second every set missing at most ``d`` elements of X.
    The blocks overlap once ``d >= n/4``, so they are returned separately.
    """
    n = check_universe(n)
    if n % 2:
        raise OddUniverse(f"the fattened construction needs even n, got {n}")
    half = n // 2
    if not 0 <= d <= half:
        raise RadiusTooLarge(f"radius d={d} outside 0..{half}")
    x = (1 << half) - 1
    inside = list(_submasks(x))
    lower = [s | (t << half) for j in range(d + 1) for t in layer_masks(half, j) for s in inside]
    upper = [(x & ~s) | (t << half) for j in range(d + 1) for s in layer_masks(half, j)
             for t in _submasks(x)]
    return make_family(n, lower), make_family(n, upper)


def h_size(n: int, k: int) -> int:
    """``M_k = 2 * sum_{i<=k} C(n, i)``; counts the middle layer twice when 2k = n."""
    if k < 0:
        return 0
    return 2 * sum(comb(n, i) for i in range(k + 1))


def h_family(n: int, k: int) -> SetFamily:
    """Sets of size at most k or at least n - k."""
    n = check_universe(n)
    if k < 0 or 2 * k > n:
        raise CutoffTooLarge(f"cutoff k={k} outside 0..{n // 2}")
    return SetFamily(n, tuple(x for x in range(1 << n)
                              if x.bit_count() <= k or x.bit_count() >= n - k))


def f_star_range(n: int, k: int) -> tuple[int, int]:
    """Inclusive range of m for which ``F*_m`` is defined at level k."""
    base = h_size(n, k - 1)
    return base, base + 2 * comb(n // 2, k)


def f_star_blocks(n: int, k: int, m: int) -> tuple[SetFamily, SetFamily, SetFamily]:
    """``(H_{k-1}, A, B)`` making up ``F*_m``.

    With ``X = {1..n/2}`` and ``m' = m - M_{k-1}``: A is the first
    ``floor(m'/2)`` k-subsets of X in colex order, B is X joined with each of
    the first ``ceil(m'/2)`` (n/2 - k)-subsets of the other half in colex
    order, so every A-set lies below every B-set.  Colex order on masks is
    plain numeric order.
    """
    n = check_universe(n)
    if n % 2:
        raise OddUniverse(f"F*_m needs even n, got {n}")
    half = n // 2
    if not 0 <= k < half:
        raise RangeViolation(f"level k={k} outside 0..{half - 1}")
    lo, hi = f_star_range(n, k)
    if not lo <= m <= hi:
        raise RangeViolation(f"m={m} outside [{lo}, {hi}] for n={n}, k={k}")
    extra = m - lo
    a_count, b_count = extra // 2, extra - extra // 2
    x = (1 << half) - 1
    a = layer_masks(half, k)[:a_count]
    b = [x | (t << half) for t in layer_masks(half, half - k)[:b_count]]
    base = h_family(n, k - 1) if k >= 1 else SetFamily(n, ())
    return base, make_family(n, a), make_family(n, b)


def f_star(n: int, k: int, m: int) -> SetFamily:
    base, a, b = f_star_blocks(n, k, m)
    return make_family(n, base.members + a.members + b.members)


def middle_levels(n: int) -> SetFamily:
    """All sets of size floor(n/2): a largest antichain."""
    n = check_universe(n)
    return SetFamily(n, tuple(layer_masks(n, n // 2)))
