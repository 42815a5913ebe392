"""Left, down and up compressions of set families.

A step moves every member that can move to its target mask, unless the
target is already a member (the usual collision rule).  Targets of distinct
movers are distinct, so a step is well defined and preserves size.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import product

from .counting import count_cross
from .errors import IndexOutOfRange
from .lattice import SetFamily, make_family, random_family


@dataclass(frozen=True)
class CompressionKind:
    """One compression operator; indices are 0-based bit positions.

    ``kind`` is ``"left"`` (uses ``i < j``), ``"down"`` or ``"up"`` (use ``i``).
    """

    kind: str
    i: int
    j: int | None = None

    def validate(self, n: int) -> None:
        if self.kind == "left":
            if self.j is None or not 0 <= self.i < self.j < n:
                raise IndexOutOfRange(f"{self} needs elements 1 <= i < j <= {n}")
        elif self.kind in ("down", "up"):
            if not 0 <= self.i < n:
                raise IndexOutOfRange(f"{self} needs an element in 1..{n}")
        else:
            raise ValueError(f"unknown compression kind {self.kind!r}")

    def target(self, x: int) -> int | None:
        """Where ``x`` wants to move, or None if the operator leaves it alone."""
        if self.kind == "left":
            bi, bj = 1 << self.i, 1 << self.j
            if x & bj and not x & bi:
                return (x & ~bj) | bi
            return None
        b = 1 << self.i
        if self.kind == "down":
            return x & ~b if x & b else None
        return x | b if not x & b else None

    def __str__(self) -> str:
        if self.kind == "left":
            return f"left:{self.i + 1}:{self.j + 1}"
        return f"{self.kind}:{self.i + 1}"


def left(i: int, j: int) -> CompressionKind:
    return CompressionKind("left", i, j)


def down(x: int) -> CompressionKind:
    return CompressionKind("down", x)


def up(x: int) -> CompressionKind:
    return CompressionKind("up", x)


def all_left(n: int) -> list[CompressionKind]:
    return [left(i, j) for i in range(n) for j in range(i + 1, n)]


def all_down(n: int) -> list[CompressionKind]:
    return [down(x) for x in range(n)]


def all_up(n: int) -> list[CompressionKind]:
    return [up(x) for x in range(n)]


def _step(members: frozenset, c: CompressionKind) -> frozenset:
    out = set(members)
    for x in members:
        t = c.target(x)
        if t is not None and t not in members:
            out.discard(x)
            out.add(t)
    return frozenset(out)


def compress_step(f: SetFamily, c: CompressionKind) -> SetFamily:
    c.validate(f.n)
    return make_family(f.n, _step(frozenset(f.members), c))


def compress_fixpoint(f: SetFamily, kinds) -> SetFamily:
    """Apply ``kinds`` round-robin until a full round changes nothing."""
    kinds = list(kinds)
    for c in kinds:
        c.validate(f.n)
    cur = frozenset(f.members)
    changed = bool(kinds)
    while changed:
        changed = False
        for c in kinds:
            nxt = _step(cur, c)
            if nxt != cur:
                cur, changed = nxt, True
    return make_family(f.n, cur)


def is_down_set(f: SetFamily) -> bool:
    s = set(f.members)
    return all(x & ~(1 << i) in s for x in s for i in range(f.n) if x >> i & 1)


def is_up_set(f: SetFamily) -> bool:
    s = set(f.members)
    return all(x | (1 << i) in s for x in s for i in range(f.n) if not x >> i & 1)


def is_left_compressed(f: SetFamily) -> bool:
    s = frozenset(f.members)
    return all(_step(s, c) == s for c in all_left(f.n))


def compress_pair(a: SetFamily, b: SetFamily) -> tuple[SetFamily, SetFamily]:
    """Left-compress both families in lockstep, down-compress ``a`` and
    up-compress ``b``, until neither changes."""
    n = a.n
    cur_a, cur_b = frozenset(a.members), frozenset(b.members)
    changed = True
    while changed:
        changed = False
        for c in all_left(n):
            na, nb = _step(cur_a, c), _step(cur_b, c)
            if na != cur_a or nb != cur_b:
                cur_a, cur_b, changed = na, nb, True
        for x in range(n):
            na, nb = _step(cur_a, down(x)), _step(cur_b, up(x))
            if na != cur_a or nb != cur_b:
                cur_a, cur_b, changed = na, nb, True
    return make_family(n, cur_a), make_family(n, cur_b)


@dataclass
class MonotonicityReport:
    n: int
    trials: int
    violations: int
    witnesses: list

    def as_record(self) -> dict:
        from .io import render_family

        return {
            "n": self.n,
            "trials": self.trials,
            "violations": self.violations,
            "witnesses": [
                {"a": render_family(a), "b": render_family(b),
                 "before": str(before), "after": str(after)}
                for a, b, before, after in self.witnesses
            ],
        }


def _all_families(n: int):
    universe = range(1 << n)
    for bits in product((0, 1), repeat=1 << n):
        yield SetFamily(n, tuple(x for x, keep in zip(universe, bits) if keep))


def monotonicity_report(n: int, trials: int | None = None, seed: int = 0,
                        exhaustive: bool = False, max_witnesses: int = 10) -> MonotonicityReport:
    """Measure whether compressing (A down-left, B up-left) ever lowers c(A, B).

    This is an empirical harness: violations are counted and the first few
    witness pairs are kept, never raised.  ``exhaustive`` runs every pair of
    families over [n] (only sensible for n <= 2); otherwise ``trials`` random
    pairs are drawn, trial t using its own generator seeded from (seed, t).
    """
    if n > 12:
        raise ValueError(f"monotonicity harness supports n <= 12, got {n}")
    if exhaustive:
        fams = list(_all_families(n))
        pairs = ((a, b) for a in fams for b in fams)
    else:
        if trials is None:
            raise ValueError("trials is required unless exhaustive=True")

        def gen():
            for t in range(trials):
                rng = random.Random(f"{seed}:{t}")
                yield random_family(n, rng), random_family(n, rng)

        pairs = gen()
    count = violations = 0
    witnesses = []
    for a, b in pairs:
        count += 1
        before = count_cross(a, b)
        ca, cb = compress_pair(a, b)
        after = count_cross(ca, cb)
        if after < before:
            violations += 1
            if len(witnesses) < max_witnesses:
                witnesses.append((a, b, before, after))
    return MonotonicityReport(n, count, violations, witnesses)
