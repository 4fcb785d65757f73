"""Homogeneous polynomials over exact scalars, graded ideals, and Hilbert functions.

A monomial is an exponent tuple, a polynomial is a dict from exponent
tuples to nonzero exact coefficients, and the degree-d piece of an ideal
is the row space of the matrix of all monomial multiples of its
generators.  Dimensions come out of fraction-free (Bareiss) elimination,
so every Hilbert function value is exact; an optional modular mode gives
a fast probabilistic rank for cross-checking.

Coefficients are ``fractions.Fraction`` throughout, but nothing here
inspects the scalar type beyond field arithmetic, so Gaussian-rational
coefficients (see :mod:`macaulay.hermitian`) work unchanged.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, NamedTuple

from .binom import shift_apply

Monomial = tuple[int, ...]


@lru_cache(maxsize=None)
def monomials_of_degree(n_vars: int, d: int) -> tuple[Monomial, ...]:
    """All C(n_vars-1+d, d) exponent tuples of total degree d.

    Order contract: graded reverse lexicographic, descending, with
    z1 > z2 > ... > zn.  Concretely the tuples are sorted ascending by
    their reversal, e.g. for n=3, d=2:

        (2,0,0), (1,1,0), (0,2,0), (1,0,1), (0,1,1), (0,0,2)

    The order is deterministic across runs and platforms; matrix columns
    and Hermitian form bases elsewhere in the package index into it.
    """
    if n_vars < 1:
        raise ValueError(f"need at least one variable, got {n_vars}")
    if d < 0:
        raise ValueError(f"degree must be nonnegative, got {d}")
    exps = []

    def fill(prefix: list[int], remaining: int, slots: int) -> None:
        if slots == 1:
            exps.append(tuple(prefix + [remaining]))
            return
        for e in range(remaining, -1, -1):
            fill(prefix + [e], remaining - e, slots - 1)

    fill([], d, n_vars)
    exps.sort(key=lambda e: e[::-1])
    return tuple(exps)


def monomial_degree(m: Monomial) -> int:
    return sum(m)


class HomogPoly:
    """A homogeneous polynomial: sparse exponent-tuple terms, exact coefficients.

    The zero polynomial keeps an explicit degree tag so graded arithmetic
    stays well typed.  Zero coefficients are never stored.
    """

    __slots__ = ("n_vars", "degree", "terms")

    def __init__(self, n_vars: int, degree: int, terms: Mapping[Monomial, object] | None = None):
        if n_vars < 1:
            raise ValueError(f"need at least one variable, got {n_vars}")
        if degree < 0:
            raise ValueError(f"degree must be nonnegative, got {degree}")
        clean: dict[Monomial, object] = {}
        for mono, coeff in (terms or {}).items():
            mono = tuple(mono)
            if len(mono) != n_vars:
                raise ValueError(f"monomial {mono} has {len(mono)} exponents, expected {n_vars}")
            if any(e < 0 for e in mono):
                raise ValueError(f"negative exponent in {mono}")
            if monomial_degree(mono) != degree:
                raise ValueError(f"monomial {mono} has degree {monomial_degree(mono)}, expected {degree}")
            if coeff:
                clean[mono] = coeff
        self.n_vars = n_vars
        self.degree = degree
        self.terms = clean

    @classmethod
    def zero(cls, n_vars: int, degree: int) -> "HomogPoly":
        return cls(n_vars, degree, {})

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, HomogPoly):
            return NotImplemented
        return (self.n_vars, self.degree, self.terms) == (other.n_vars, other.degree, other.terms)

    def __hash__(self) -> int:
        return hash((self.n_vars, self.degree, frozenset(self.terms.items())))

    def __add__(self, other: "HomogPoly") -> "HomogPoly":
        if not isinstance(other, HomogPoly):
            return NotImplemented
        if self.n_vars != other.n_vars:
            raise ValueError("variable count mismatch")
        if self.degree != other.degree:
            raise ValueError(f"cannot add degrees {self.degree} and {other.degree}")
        merged = dict(self.terms)
        for mono, coeff in other.terms.items():
            merged[mono] = merged.get(mono, 0) + coeff
        return HomogPoly(self.n_vars, self.degree, merged)

    def __neg__(self) -> "HomogPoly":
        return HomogPoly(self.n_vars, self.degree, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "HomogPoly") -> "HomogPoly":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, HomogPoly):
            return poly_multiply(self, other)
        prod: dict[Monomial, object] = {}
        for mono, coeff in self.terms.items():
            prod[mono] = coeff * other
        return HomogPoly(self.n_vars, self.degree, prod)

    __rmul__ = __mul__

    def __repr__(self) -> str:
        if self.is_zero():
            return f"HomogPoly(0; n_vars={self.n_vars}, degree={self.degree})"
        bits = " + ".join(f"{c}*z^{list(m)}" for m, c in sorted(self.terms.items(), key=lambda kv: kv[0][::-1]))
        return f"HomogPoly({bits})"


def variable(i: int, n_vars: int) -> HomogPoly:
    """The degree-1 polynomial z_{i+1} (zero-based index i)."""
    if not 0 <= i < n_vars:
        raise ValueError(f"variable index {i} out of range for {n_vars} variables")
    exps = tuple(1 if k == i else 0 for k in range(n_vars))
    return HomogPoly(n_vars, 1, {exps: Fraction(1)})


def monomial_poly(exponents: Iterable[int], coeff=Fraction(1)) -> HomogPoly:
    """The single-term polynomial coeff * z^exponents."""
    exps = tuple(exponents)
    return HomogPoly(len(exps), monomial_degree(exps), {exps: coeff})


def poly_multiply(f: HomogPoly, g: HomogPoly) -> HomogPoly:
    """Exact product of two homogeneous polynomials over the same variables."""
    if f.n_vars != g.n_vars:
        raise ValueError(f"variable count mismatch: {f.n_vars} vs {g.n_vars}")
    prod: dict[Monomial, object] = {}
    for ma, ca in f.terms.items():
        for mb, cb in g.terms.items():
            mono = tuple(ea + eb for ea, eb in zip(ma, mb))
            acc = prod.get(mono, 0) + ca * cb
            if acc:
                prod[mono] = acc
            else:
                prod.pop(mono, None)
    return HomogPoly(f.n_vars, f.degree + g.degree, prod)


@dataclass(frozen=True)
class GradedIdeal:
    """A homogeneous ideal given by finitely many homogeneous generators.

    An empty generator tuple is the zero ideal.  Generators may have
    different degrees but must be nonzero and share the variable count.
    """

    n_vars: int
    generators: tuple[HomogPoly, ...]

    def __post_init__(self) -> None:
        for g in self.generators:
            if g.n_vars != self.n_vars:
                raise ValueError("generator variable count mismatch")
            if g.is_zero():
                raise ValueError("zero polynomial is not a valid generator")

    @classmethod
    def zero(cls, n_vars: int) -> "GradedIdeal":
        return cls(n_vars, ())

    @classmethod
    def from_generators(cls, gens: Iterable[HomogPoly]) -> "GradedIdeal":
        gens = tuple(gens)
        if not gens:
            raise ValueError("use GradedIdeal.zero for the zero ideal")
        return cls(gens[0].n_vars, gens)


class HilbertRecord(NamedTuple):
    """H_I(d) and H_{R/I}(d) at one degree; the two always sum to dim R_d."""

    degree: int
    h_ideal: int
    h_quotient: int


class BoundChecks(NamedTuple):
    """Outcome of the three growth-bound checks for the step d -> d+1."""

    degree: int
    forward_ok: bool
    quotient_ok: bool
    reverse_ok: bool


# ---------------------------------------------------------------------------
# Exact rank machinery
# ---------------------------------------------------------------------------

def _scale_row_integral(row: dict[int, object]) -> dict[int, object]:
    """Scale a sparse row by the lcm of denominators and divide out the
    integer content.  Both operations preserve the row space."""
    denom = 1
    for v in row.values():
        denom = math.lcm(denom, getattr(v, "denominator", 1))
    scaled = {c: v * denom for c, v in row.items()}
    content = 0
    for v in scaled.values():
        content = math.gcd(content, _integer_content(v))
    if content > 1:
        scaled = {c: _divide_by_int(v, content) for c, v in scaled.items()}
    return scaled


def _integer_content(v) -> int:
    got = getattr(v, "integer_content", None)
    if got is not None:
        return got
    return abs(v.numerator)


def _divide_by_int(v, k: int):
    if isinstance(v, int):
        return v // k
    return v * Fraction(1, k)


def _as_plain_int(v):
    """Collapse integral Fractions (and Fraction parts) to int."""
    if isinstance(v, Fraction):
        if v.denominator == 1:
            return v.numerator
        raise AssertionError("row not integral after scaling")
    if isinstance(v, int):
        return v
    demote = getattr(v, "demote", None)
    return demote() if demote else v


def exact_rank(rows: Iterable[dict[int, object]]) -> int:
    """Rank of a sparse matrix by fraction-free Bareiss elimination.

    Rows are ``{column: value}`` dicts; values may be int, Fraction, or any
    exact field scalar exposing ``denominator``/``integer_content`` (the
    Gaussian rationals do).  Rows are first scaled to integral entries and
    deduplicated; the Bareiss update

        a'[j][c] = (a[j][c] * pivot - a[j][pc] * prow[c]) / previous_pivot

    keeps every intermediate entry a minor of the scaled matrix, so the
    division is always exact and entry growth stays polynomial.
    """
    active: list[dict[int, object]] = []
    seen: set = set()
    for row in rows:
        row = {c: v for c, v in row.items() if v}
        if not row:
            continue
        row = {c: _as_plain_int(v) for c, v in _scale_row_integral(row).items()}
        key = tuple(sorted(row.items(), key=lambda kv: kv[0]))
        if key in seen:
            continue
        seen.add(key)
        active.append(row)

    rank = 0
    prev = 1
    while active:
        pcol = min(min(r) for r in active)
        pidx = next(i for i, r in enumerate(active) if pcol in r)
        prow = active.pop(pidx)
        pivot = prow[pcol]
        rank += 1
        updated = []
        for row in active:
            factor = row.get(pcol)
            new_row: dict[int, object] = {}
            if factor is None or not factor:
                for c, v in row.items():
                    if c == pcol:
                        continue
                    new_row[c] = _bareiss_div(v * pivot, prev)
            else:
                for c in row.keys() | prow.keys():
                    if c == pcol:
                        continue
                    v = row.get(c, 0) * pivot - factor * prow.get(c, 0)
                    if v:
                        new_row[c] = _bareiss_div(v, prev)
            if new_row:
                updated.append(new_row)
        active = updated
        prev = pivot
    return rank


def _bareiss_div(v, prev):
    if isinstance(v, int) and isinstance(prev, int):
        q, r = divmod(v, prev)
        if r:
            raise AssertionError("inexact Bareiss division: non-integral input matrix?")
        return q
    out = v / prev
    demote = getattr(out, "demote", None)
    return demote() if demote else out


def _mod_inverse(a: int, p: int) -> int:
    return pow(a, p - 2, p)


def rank_mod_prime(rows: Iterable[dict[int, object]], p: int) -> int:
    """Rank over GF(p) by sparse Gaussian elimination.

    A modular rank never exceeds the rational rank and equals it unless p
    divides the wrong minors, so agreement across a few large random
    primes is strong probabilistic evidence for the exact value.
    """
    reduced: list[dict[int, int]] = []
    for row in rows:
        r: dict[int, int] = {}
        for c, v in row.items():
            num = v.numerator
            den = getattr(v, "denominator", 1)
            if den % p == 0:
                raise ValueError(f"prime {p} divides a denominator")
            x = (num % p) * _mod_inverse(den % p, p) % p
            if x:
                r[c] = x
        if r:
            reduced.append(r)
    rank = 0
    pivots: dict[int, dict[int, int]] = {}
    for row in reduced:
        while row:
            lead = min(row)
            piv = pivots.get(lead)
            if piv is None:
                inv = _mod_inverse(row[lead], p)
                pivots[lead] = {c: (v * inv) % p for c, v in row.items()}
                rank += 1
                break
            f = row[lead]
            for c, v in piv.items():
                nv = (row.get(c, 0) - f * v) % p
                if nv:
                    row[c] = nv
                else:
                    row.pop(c, None)
    return rank


def _is_probable_prime(n: int) -> bool:
    """Deterministic Miller-Rabin for 64-bit integers."""
    if n < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % q == 0:
            return n == q
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for base in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(base, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def random_rank_primes(seed: int, count: int = 3) -> list[int]:
    """Deterministic distinct primes >= 2**31 derived from a seed."""
    primes: list[int] = []
    state = (seed * 0x9E3779B97F4A7C15 + 0xD1B54A32D192ED03) % 2**64
    while len(primes) < count:
        state = (state * 6364136223846793005 + 1442695040888963407) % 2**64
        candidate = 2**31 + (state % 2**31) | 1
        while not _is_probable_prime(candidate):
            candidate += 2
        if candidate not in primes:
            primes.append(candidate)
    return primes


# ---------------------------------------------------------------------------
# Graded pieces and Hilbert functions
# ---------------------------------------------------------------------------

def _graded_piece_rows(ideal: GradedIdeal, d: int) -> list[dict[int, object]]:
    """Sparse rows spanning I_d: every monomial multiple m*g with
    deg m + deg g = d, in the monomials_of_degree column basis.
    Generators of degree > d contribute nothing."""
    col_index = {m: i for i, m in enumerate(monomials_of_degree(ideal.n_vars, d))}
    rows = []
    for g in ideal.generators:
        if g.degree > d:
            continue
        for mult in monomials_of_degree(ideal.n_vars, d - g.degree):
            row = {}
            for mono, coeff in g.terms.items():
                shifted = tuple(a + b for a, b in zip(mono, mult))
                row[col_index[shifted]] = coeff
            rows.append(row)
    return rows


def graded_piece_dim(ideal: GradedIdeal, d: int, mode: str = "exact", seed: int = 0) -> int:
    """dim I_d, the Hilbert function of the ideal at degree d.

    The degree-d piece of an ideal with homogeneous generators g_i is
    spanned by the products m * g_i over monomials m of degree d - deg g_i,
    so its dimension is the rank of that product matrix; no syzygy or basis
    computation is needed for a single graded piece.

    mode="exact" (default) uses fraction-free Bareiss elimination.
    mode="modular-checked" is the fast probabilistic alternative: ranks
    over three seeded random primes >= 2**31 that must agree with each
    other; the result is certainly a lower bound and is overwhelmingly
    likely exact.  Tests cross-check the two modes.
    """
    if d < 0:
        raise ValueError(f"degree must be nonnegative, got {d}")
    rows = _graded_piece_rows(ideal, d)
    if mode == "exact":
        return exact_rank(rows)
    if mode == "modular-checked":
        ranks = {rank_mod_prime(rows, p) for p in random_rank_primes(seed)}
        if len(ranks) > 1:
            # unlucky primes: fall back to the certain answer
            return exact_rank(rows)
        return ranks.pop()
    raise ValueError(f"unknown mode {mode!r}")


def hilbert_record(ideal: GradedIdeal, d: int, mode: str = "exact") -> HilbertRecord:
    """H_I(d) together with H_{R/I}(d) = C(n-1+d, d) - H_I(d)."""
    h_ideal = graded_piece_dim(ideal, d, mode=mode)
    total = math.comb(ideal.n_vars - 1 + d, d)
    return HilbertRecord(d, h_ideal, total - h_ideal)


def macaulay_bound_quotient(h_d: int, d: int) -> int:
    """Largest permitted H_{R/I}(d+1) given H_{R/I}(d) = h_d: apply the
    (1,1) shift to the d-th representation of h_d."""
    if d < 1:
        raise ValueError("quotient bound needs d >= 1")
    return shift_apply(h_d, d, 1, 1)


def macaulay_bound_ideal(h_d: int, n_vars: int) -> int:
    """Smallest permitted H_I(d+1) given H_I(d) = h_d: apply the (0,1)
    shift to the (n-1)-th representation.  Depends on the variable count
    only, never on the degree."""
    if n_vars < 2:
        raise ValueError("ideal bound needs at least 2 variables")
    return shift_apply(h_d, n_vars - 1, 0, 1)


def macaulay_reverse_bound_ideal(h_d1: int, n_vars: int) -> int:
    """Largest permitted H_I(d) given H_I(d+1) = h_d1: the (0,-1) shift."""
    if n_vars < 2:
        raise ValueError("ideal bound needs at least 2 variables")
    return shift_apply(h_d1, n_vars - 1, 0, -1)


def verify_macaulay(ideal: GradedIdeal, d_max: int, mode: str = "exact") -> list[BoundChecks]:
    """Check all three growth bounds on H_I / H_{R/I} for 1 <= d < d_max.

    Every row must come back all-True for every homogeneous ideal; a False
    anywhere means the implementation (not the mathematics) is broken.
    """
    if d_max < 1:
        raise ValueError("d_max must be >= 1")
    if ideal.n_vars < 2:
        raise ValueError("growth bounds need at least 2 variables")
    records = [hilbert_record(ideal, d, mode=mode) for d in range(1, d_max + 1)]
    checks = []
    for rec, nxt in zip(records, records[1:]):
        forward_ok = nxt.h_ideal >= macaulay_bound_ideal(rec.h_ideal, ideal.n_vars)
        quotient_ok = nxt.h_quotient <= macaulay_bound_quotient(rec.h_quotient, rec.degree)
        reverse_ok = rec.h_ideal <= macaulay_reverse_bound_ideal(nxt.h_ideal, ideal.n_vars)
        checks.append(BoundChecks(rec.degree, forward_ok, quotient_ok, reverse_ok))
    return checks


def bridge_identity_check(n_vars: int, d: int) -> bool:
    """Check, over every split A + B = C(n-1+d, d), that

        A_(n-1)|_0^1  +  B_(d)|_1^1  ==  C(n+d, d+1).

    This is the split identity at m = n-1, s = 1 and is exactly what makes
    the ideal-side and quotient-side growth bounds equivalent.
    """
    if n_vars < 2 or d < 1:
        raise ValueError("need n_vars >= 2 and d >= 1")
    total = math.comb(n_vars - 1 + d, d)
    target = math.comb(n_vars + d, d + 1)
    return all(
        shift_apply(a, n_vars - 1, 0, 1) + shift_apply(total - a, d, 1, 1) == target
        for a in range(total + 1)
    )


# ---------------------------------------------------------------------------
# Shared text format for ideals
# ---------------------------------------------------------------------------

def format_ideal(ideal: GradedIdeal) -> str:
    """Serialize to the shared JSON document; rationals as "p/q" strings,
    so the round trip is bit exact."""
    doc = {
        "n_vars": ideal.n_vars,
        "generators": [
            [
                {"coeff": str(Fraction(coeff)), "exponents": list(mono)}
                for mono, coeff in sorted(g.terms.items(), key=lambda kv: kv[0][::-1])
            ]
            for g in ideal.generators
        ],
    }
    return json.dumps(doc, indent=2)


def parse_ideal(text: str) -> GradedIdeal:
    """Parse the shared ideal document.

    Each generator is a list of terms {"coeff": "p/q", "exponents": [..]}.
    Degree-0 generators are rejected: a nonzero constant generates the
    unit ideal and every Hilbert value would be the full space.
    """
    doc = json.loads(text)
    n_vars = int(doc["n_vars"])
    gens = []
    for gen_terms in doc["generators"]:
        terms: dict[Monomial, Fraction] = {}
        degree = None
        for term in gen_terms:
            mono = tuple(int(e) for e in term["exponents"])
            coeff = Fraction(term["coeff"])
            degree = monomial_degree(mono) if degree is None else degree
            terms[mono] = terms.get(mono, Fraction(0)) + coeff
        if degree is None:
            raise ValueError("generator with no terms")
        poly = HomogPoly(n_vars, degree, terms)
        if poly.is_zero():
            raise ValueError("generator cancels to zero")
        if poly.degree == 0:
            raise ValueError("degree-0 generator defines the unit ideal; not supported")
        gens.append(poly)
    if not gens:
        return GradedIdeal.zero(n_vars)
    return GradedIdeal(n_vars, tuple(gens))
