"""Exact binomial coefficients, Macaulay representations, and shift operators.

Every nonnegative integer A has a unique expansion

    A = C(a_n, n) + C(a_{n-1}, n-1) + ... + C(a_delta, delta)

with a_n > a_{n-1} > ... > a_delta, a_j >= j and delta >= 1 (the n-th
Macaulay representation; A = 0 gets the empty expansion).  The shift
operator replaces each C(a_j, j) by C(a_j + t, j + s) and sums.  These two
devices drive all the growth bounds in the rest of the package, so
everything here is arbitrary-precision integer arithmetic with no rounding
of any kind.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple


def binom_coeff(a: int, b: int) -> int:
    """Binomial coefficient C(a, b) extended to a total function.

    Returns 0 when b < 0 or a < b, and 1 when b == 0 <= a.  This is the
    convention every shifted term below relies on: shifts may push a lower
    index to zero or below, and such terms must contribute 1 or 0 rather
    than raise.
    """
    if b < 0 or a < b:
        return 0
    return math.comb(a, b)


@dataclass(frozen=True, slots=True)
class MacaulayRep:
    """The n-th Macaulay representation of a nonnegative integer.

    ``terms`` holds pairs (a_j, j) with j strictly decreasing from n down
    to some delta >= 1; each pair stands for C(a_j, j).  Upper indices are
    strictly decreasing and a_j >= j.  The empty tuple represents 0.
    """

    n: int
    terms: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"representation index must be >= 1, got {self.n}")
        prev_a = None
        prev_j = self.n + 1
        for a, j in self.terms:
            if not 1 <= j < prev_j or j > self.n:
                raise ValueError(f"lower indices must strictly decrease from {self.n}: {self.terms}")
            if a < j:
                raise ValueError(f"term ({a},{j}) violates a_j >= j")
            if prev_a is not None and a >= prev_a:
                raise ValueError(f"upper indices must strictly decrease: {self.terms}")
            prev_a, prev_j = a, j

    @property
    def value(self) -> int:
        return rep_value(self)


class ShiftSpec(NamedTuple):
    """A lower-index shift s and upper-index shift t, either possibly negative."""

    s: int
    t: int


def macaulay_rep(a: int, n: int) -> MacaulayRep:
    """Compute the unique n-th Macaulay representation of a >= 0.

    Greedy construction: at index j pick the largest upper index u with
    C(u, j) <= remainder, subtract, and continue at j - 1 until the
    remainder is zero.  The classical uniqueness argument shows this is
    the one and only valid expansion.
    """
    if a < 0:
        raise ValueError(f"cannot represent negative integer {a}")
    if n < 1:
        raise ValueError(f"representation index must be >= 1, got {n}")
    terms = []
    remainder = a
    j = n
    while remainder > 0:
        u = _largest_upper_index(remainder, j)
        terms.append((u, j))
        remainder -= math.comb(u, j)
        j -= 1
    return MacaulayRep(n, tuple(terms))


def _largest_upper_index(bound: int, j: int) -> int:
    """Largest u with C(u, j) <= bound, for bound >= 1. Exponential bracket + bisection."""
    lo = j  # C(j, j) = 1 <= bound
    hi = j + 1
    while math.comb(hi, j) <= bound:
        lo = hi
        hi *= 2
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if math.comb(mid, j) <= bound:
            lo = mid
        else:
            hi = mid
    return lo


def rep_value(rep: MacaulayRep) -> int:
    """Sum the binomial terms of a representation (inverse of macaulay_rep)."""
    return sum(math.comb(a, j) for a, j in rep.terms)


def shift_apply(a: int, n: int, s: int, t: int) -> int:
    """Apply the shift operator to the n-th Macaulay representation of a.

    Each term C(a_j, j) becomes binom_coeff(a_j + t, j + s); the total-
    function conventions make this well defined for negative shifts.
    Returns 0 when a == 0 (empty representation).
    """
    rep = macaulay_rep(a, n)
    return sum(binom_coeff(u + t, j + s) for u, j in rep.terms)


def split_shift_identity(a: int, b: int, m: int, d: int, s: int) -> bool:
    """Check the complementary-split shift identity for a + b = C(m+d, d).

    For any split of C(m+d, d) into a + b with m, d, s >= 1,

        a_(m)|_0^s  +  b_(d)|_s^s  ==  C(m+d+s, d+s)

    must hold.  Raises ValueError when a + b is not C(m+d, d); a False
    return would indicate a bug in the shift machinery, not in the
    identity.
    """
    if min(m, d, s) < 1:
        raise ValueError("m, d, s must all be >= 1")
    total = math.comb(m + d, d)
    if a + b != total:
        raise ValueError(f"split {a} + {b} != C({m + d},{d}) = {total}")
    lhs = shift_apply(a, m, 0, s) + shift_apply(b, d, s, s)
    return lhs == math.comb(m + d + s, d + s)


def scan_split_shift_identity(m_max: int, d_max: int, s_max: int) -> list[tuple[int, int, int, int, int]]:
    """Exhaustively test split_shift_identity over all splits for every
    1 <= m <= m_max, 1 <= d <= d_max, 1 <= s <= s_max.

    Returns the list of failing (a, b, m, d, s) tuples, empty on success.
    """
    failures = []
    for m in range(1, m_max + 1):
        for d in range(1, d_max + 1):
            total = math.comb(m + d, d)
            for s in range(1, s_max + 1):
                for a in range(total + 1):
                    if not split_shift_identity(a, total - a, m, d, s):
                        failures.append((a, total - a, m, d, s))
    return failures


def shift_difference_bound_holds(m: int, n: int, l: int) -> bool:
    """Check  m_(n)|_0^l - m  >=  m_(n)|_{-1}^{l-1}  for m, n, l >= 1."""
    if min(m, n, l) < 1:
        raise ValueError("m, n, l must all be >= 1")
    return shift_apply(m, n, 0, l) - m >= shift_apply(m, n, -1, l - 1)


def shift_monotone_in_value_holds(m: int, n: int, k: int) -> bool:
    """Check  m_(n)|_{-1}^k  >=  (m-1)_(n)|_{-1}^k  for m >= 1."""
    if m < 1:
        raise ValueError("m must be >= 1")
    return shift_apply(m, n, -1, k) >= shift_apply(m - 1, n, -1, k)


def scan_shift_inequalities(m_max: int, n_max: int, shift_max: int) -> list[tuple[str, int, int, int]]:
    """Scan both shift inequalities over 1 <= m <= m_max, 1 <= n <= n_max,
    1 <= l (or k) <= shift_max.  Returns failing cases, empty on success.
    """
    failures = []
    for m in range(1, m_max + 1):
        for n in range(1, n_max + 1):
            for w in range(1, shift_max + 1):
                if not shift_difference_bound_holds(m, n, w):
                    failures.append(("difference", m, n, w))
                if not shift_monotone_in_value_holds(m, n, w):
                    failures.append(("monotone", m, n, w))
    return failures
