"""Incumbent families for the exact search: constructions resized greedily,
then improved by single swaps."""

from __future__ import annotations

from .. import constructions as cons
from ..lattice import layer_masks
from .search import comparability_tables, family_value


def _resize(members: set, m: int, comp_bits, sense: int) -> set:
    """Greedily drop or add masks until the family has m members."""
    size = len(comp_bits)
    fam = set(members)

    def deg(x, pool):
        bits = 0
        for y in pool:
            bits |= 1 << y
        return (comp_bits[x] & bits).bit_count()

    while len(fam) > m:
        # drop the member whose removal hurts the objective least
        worst = max(sorted(fam), key=lambda x: -sense * deg(x, fam))
        fam.discard(worst)
    while len(fam) < m:
        best = max((x for x in range(size) if x not in fam), key=lambda x: sense * deg(x, fam))
        fam.add(best)
    return fam


def _swap_improve(fam: set, comp_bits, sense: int, rounds: int = 50) -> set:
    size = len(comp_bits)
    fam = set(fam)
    for _ in range(rounds):
        bits = 0
        for y in fam:
            bits |= 1 << y
        deg = {x: (comp_bits[x] & bits).bit_count() for x in range(size)}
        improved = False
        for out in sorted(fam, key=lambda x: sense * deg[x]):
            for inn in sorted((x for x in range(size) if x not in fam), key=lambda x: -sense * deg[x]):
                # change in c from replacing out by inn
                delta = deg[inn] - (comp_bits[inn] >> out & 1) - deg[out]
                if sense * delta > 0:
                    fam.discard(out)
                    fam.add(inn)
                    improved = True
                    break
            if improved:
                break
        if not improved:
            break
    return fam


def construction_pool(n: int, sense: int) -> list[set]:
    pool = [set()]
    if sense > 0:
        pool.append(set(cons.chain(n, n + 1).members))
        for k in range(1, n + 1):
            if n % k == 0:
                pool.append(set(cons.tower_of_cubes(n, k).members))
        for k in range(n // 2 + 1):
            pool.append(set(cons.h_family(n, k).members))
        if n % 2 == 0:
            for k in range(n // 2):
                lo, hi = cons.f_star_range(n, k)
                pool.append(set(cons.f_star(n, k, hi).members))
    else:
        # layers taken outward from the middle
        order = sorted(range(n + 1), key=lambda s: (abs(2 * s - n), s))
        acc = []
        for s in order:
            acc.extend(layer_masks(n, s))
            pool.append(set(acc))
    return pool


def seed_family(n: int, m: int, sense: int) -> tuple[int, ...]:
    """Best of the resized constructions after swap improvement."""
    comp_bits, _ = comparability_tables(n)
    best = None
    for base in construction_pool(n, sense):
        fam = _swap_improve(_resize(base, m, comp_bits, sense), comp_bits, sense)
        fam = tuple(sorted(fam))
        v = sense * family_value(fam, comp_bits)
        if best is None or v > best[0] or (v == best[0] and fam < best[1]):
            best = (v, fam)
    return best[1]
