"""Closed-form bounds and numeric verifiers.

Every ``*_check`` returns a :class:`BoundReport`.  Combinatorial quantities
are exact integers; only the entropy and exponential bounds are floats, and
those comparisons use a relative tolerance of 1e-9 (exponential scale) or an
absolute tolerance of 1e-12 (unit scale).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Any

import mpmath

from .counting import count_cross
from .errors import DomainError, EmptyFamily, UniverseTooSmall
from .lattice import SetFamily, same_universe

REL_TOL = 1e-9
ABS_TOL = 1e-12


@dataclass(frozen=True)
class BoundReport:
    name: str
    inputs: dict[str, Any]
    bound_value: Any
    observed_value: Any
    holds: bool
    margin: Any = field(default=None)

    def as_row(self) -> dict[str, str]:
        inputs = ";".join(f"{k}={v}" for k, v in self.inputs.items())
        return {
            "name": self.name,
            "inputs": inputs,
            "bound": _fmt(self.bound_value),
            "observed": _fmt(self.observed_value),
            "margin": _fmt(self.margin),
            "holds": "true" if self.holds else "false",
        }


def _fmt(v) -> str:
    if isinstance(v, float):
        return repr(v)
    if isinstance(v, Fraction):
        return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"
    if isinstance(v, mpmath.mpf):
        return mpmath.nstr(v, 20)
    return str(v)


def binary_entropy(p: float) -> float:
    """``H(p) = -p log2 p - (1-p) log2 (1-p)``, with ``H(0) = H(1) = 0``."""
    if not 0 <= p <= 1:
        raise DomainError(f"entropy argument {p} outside [0, 1]")
    if p == 0 or p == 1:
        return 0.0
    return -p * math.log2(p) - (1 - p) * math.log2(1 - p)


def entropy_bound_check(f: SetFamily) -> BoundReport:
    """|F| <= 2^(sum_i H(p_i)), p_i the fraction of members containing i."""
    m = len(f)
    if m == 0:
        raise EmptyFamily("entropy bound needs a nonempty family")
    counts = [0] * f.n
    for x in f.members:
        i = 0
        while x:
            if x & 1:
                counts[i] += 1
            x >>= 1
            i += 1
    exponent = math.fsum(binary_entropy(c / m) for c in counts)
    bound = 2.0 ** exponent
    return BoundReport(
        "entropy",
        {"n": f.n, "m": m},
        bound,
        m,
        m <= bound * (1 + REL_TOL),
        bound - m,
    )


def tail_count(r: int, lam: float) -> int:
    """Exact number of subsets of [r] with size >= r/2 + lam*sqrt(r)."""
    lam_q = Fraction(lam)
    total = 0
    for j in range(r + 1):
        gap = 2 * j - r
        # j >= r/2 + lam*sqrt(r)  <=>  gap >= 2*lam*sqrt(r), decided exactly
        if gap >= 0 and gap * gap >= 4 * lam_q * lam_q * r:
            total += comb(r, j)
    return total


def binom_tail_check(r: int, lam: float) -> BoundReport:
    if r < 1:
        raise DomainError(f"r must be >= 1, got {r}")
    if lam < 0:
        raise DomainError(f"lambda must be >= 0, got {lam}")
    observed = tail_count(r, lam)
    bound = math.exp(-2 * lam * lam) * 2.0 ** r
    return BoundReport(
        "binom_tail",
        {"r": r, "lambda": lam},
        bound,
        observed,
        observed <= bound * (1 + REL_TOL),
        bound - observed,
    )


@dataclass(frozen=True)
class CalcPoint:
    p: float
    q: float
    alpha: float

    def __post_init__(self):
        if not (0 <= self.p <= 1 and 0 <= self.q <= 1):
            raise DomainError(f"p, q must lie in [0, 1]; got {self.p}, {self.q}")
        if not 0 < self.alpha <= 1 / 300 + 1e-15:
            raise DomainError(f"alpha must lie in (0, 1/300]; got {self.alpha}")


def _calc_sides(p, q, alpha):
    with mpmath.workdps(40):
        p, q, a = mpmath.mpf(p), mpmath.mpf(q), mpmath.mpf(alpha)
        e = 1 - a
        lhs = (p * (1 - q)) ** e + (p * q) ** e + ((1 - p) * q) ** e
        rhs = (2 + mpmath.power(2, 1 - 1 / (300 * a))) ** a
        return +lhs, +rhs


def calculus_lhs(p, q, alpha):
    return _calc_sides(p, q, alpha)[0]


def calculus_check(pt: CalcPoint) -> BoundReport:
    """(p(1-q))^(1-a) + (pq)^(1-a) + ((1-p)q)^(1-a) <= (2 + 2^(1 - 1/(300a)))^a."""
    lhs, rhs = _calc_sides(pt.p, pt.q, pt.alpha)
    margin = rhs - lhs
    return BoundReport(
        "calculus",
        {"p": pt.p, "q": pt.q, "alpha": pt.alpha},
        rhs,
        lhs,
        bool(margin >= -ABS_TOL),
        margin,
    )


def optimisation_sequence(n: int, s: int) -> list[int]:
    """``x_t = 2^(n-t) + sum_{j<=s} C(t, j)`` for ``t = n-s, ..., n``."""
    if not (3 * s > n and 2 * s <= n):
        raise DomainError(f"s={s} outside (n/3, n/2] for n={n}")
    return [(1 << (n - t)) + sum(comb(t, j) for j in range(s + 1)) for t in range(n - s, n + 1)]


def optimisation_check(n: int, s: int) -> BoundReport:
    xs = optimisation_sequence(n, s)
    drops = [b - a for a, b in zip(xs, xs[1:])]
    worst = min(drops) if drops else 0
    return BoundReport(
        "optimisation",
        {"n": n, "s": s},
        xs[0],
        min(xs),
        worst >= 0,
        worst,
    )


def afconj_exponent(n: int, size_a: int, size_b: int) -> float:
    """The d with ``|A||B| = n^d 2^n``."""
    return (math.log2(size_a) + math.log2(size_b) - n) / math.log2(n)


def afconj_check(a: SetFamily, b: SetFamily) -> BoundReport:
    """c(A,B) <= 2^(-d/300) |A||B| where |A||B| = n^d 2^n (clamped at d <= 0)."""
    n = same_universe(a, b)
    if n < 2:
        raise UniverseTooSmall(f"the exponent d needs n >= 2, got {n}")
    if not a.members or not b.members:
        raise EmptyFamily("both families must be nonempty")
    prod = len(a) * len(b)
    d = afconj_exponent(n, len(a), len(b))
    bound = prod * 2.0 ** (-d / 300) if d > 0 else float(prod)
    observed = count_cross(a, b)
    return BoundReport(
        "afconj",
        {"n": n, "size_a": len(a), "size_b": len(b), "d": d},
        bound,
        observed,
        observed <= bound * (1 + REL_TOL),
        bound - observed,
    )


def af_leading_bound(k: int, m: int) -> Fraction:
    """Leading term ``(1 - 1/k) C(m, 2)`` of the k-cube bound, exactly."""
    if k < 1 or m < 0:
        raise DomainError(f"need k >= 1 and m >= 0; got k={k}, m={m}")
    return (1 - Fraction(1, k)) * comb(m, 2)


def sparse_lower_bound(n: int, ell: float, eps: float) -> float:
    """``(1/2 - eps) n l^2 log2 l``, the sparse-regime incomparable-pair floor."""
    if n < 1 or ell <= 0 or not 0 < eps < 0.5:
        raise DomainError(f"need n >= 1, l > 0, 0 < eps < 1/2; got {n}, {ell}, {eps}")
    return (0.5 - eps) * n * ell * ell * math.log2(ell)
