"""Exact counting of commuting matrix tuples in GL_n over finite fields.

The counts are polynomials in the field size q, built from two memoized
weight recursions over factorization types.  A commuting tuple of semisimple
invertible matrices decomposes the space into blocks indexed by the type of
the first matrix's characteristic polynomial: a (degree i, size r) pair
contributes a block that behaves like GL_r over the degree-i extension
field.  Each recursion level therefore substitutes q^(i*m) for q^m in the
type counts and recurses on smaller block sizes.

``ss_weight(level, r, m)`` is the per-block weight when every matrix in the
tuple is semisimple; its leaf is 1/|GL_r(q^m)|, and the full count of
commuting all-semisimple k-tuples is |GL_n(q)| * ss_weight(k, n, 1).

``mixed_weight`` drops the semisimplicity constraint on the final matrix:
its leaf (q^m - 1) * q^(m*(r-1)) counts the possible characteristic
polynomials with nonzero constant term of the unconstrained commuting
matrix on an r-dimensional block over the q^m-element field.  Mixed k-tuples
(k - 1 semisimple plus one free) number |GL_n(q)| * mixed_weight(k-2, n, 1),
and simultaneous-conjugation classes of all-semisimple k-tuples number
mixed_weight(k-1, n, 1) with no group-order prefactor.

Every public count certifies integrality by exact division before returning;
a failure raises instead of rounding, since it would mean the recursion or
the type combinatorics is wrong.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from typing import Literal, NamedTuple, Optional

from .exactpoly import (
    LaurentPoly,
    NotDivisible,
    NotLaurent,
    RationalFunction,
    UnivariatePoly,
    to_laurent,
)
from .typecomb import FactorizationType, count_monic_with_type, enumerate_types, type_pairs

MODE_SEMISIMPLE = "all-semisimple"
MODE_MIXED = "mixed"
MODE_CONJUGACY = "conjugacy-classes"
Mode = Literal["all-semisimple", "mixed", "conjugacy-classes"]


class IntegralityViolation(ArithmeticError):
    """A count that must be an integer polynomial failed exact division."""


class InvalidArity(ValueError):
    """Tuple length outside the domain of the requested count."""


class DegreeViolation(AssertionError):
    """Computed degree fell below the proven lower bound."""


class MonicViolation(AssertionError):
    """Top-degree behaviour at k = 2 is pinned down and was violated."""


class NonIntegerCoefficient(ArithmeticError):
    """Laurent quotient by the group order must have integer coefficients."""


class CountKey(NamedTuple):
    """Memoization key: recursion level, block size, field-power exponent."""

    level: int
    r: int
    m: int


class WeightCache:
    """Memo tables for the two weight recursions, optionally JSON-persisted.

    Shared use is benign: values are keyed deterministically, so a duplicated
    computation under concurrent access inserts the same value twice.
    """

    def __init__(self) -> None:
        self._tables: dict[str, dict[CountKey, RationalFunction]] = {"ss": {}, "mixed": {}}

    def get(self, kind: str, key: CountKey) -> Optional[RationalFunction]:
        return self._tables[kind].get(key)

    def put(self, kind: str, key: CountKey, value: RationalFunction) -> None:
        self._tables[kind][key] = value

    def __len__(self) -> int:
        return sum(len(t) for t in self._tables.values())

    def to_json(self) -> dict:
        return {
            "version": 1,
            **{
                kind: {
                    f"{k.level}:{k.r}:{k.m}": value.to_json()
                    for k, value in sorted(table.items())
                }
                for kind, table in self._tables.items()
            },
        }

    @classmethod
    def from_json(cls, doc: dict) -> "WeightCache":
        cache = cls()
        for kind in ("ss", "mixed"):
            for key, value in doc.get(kind, {}).items():
                level, r, m = (int(part) for part in key.split(":"))
                cache.put(kind, CountKey(level, r, m), RationalFunction.from_json(value))
        return cache

    def save(self, path: str) -> None:
        with open(path, "w", encoding="utf-8") as handle:
            json.dump(self.to_json(), handle, sort_keys=True)
            handle.write("\n")

    @classmethod
    def load(cls, path: str) -> "WeightCache":
        with open(path, "r", encoding="utf-8") as handle:
            return cls.from_json(json.load(handle))


class NullCache(WeightCache):
    """Cache that never stores anything; for memoization-transparency checks."""

    def get(self, kind: str, key: CountKey) -> Optional[RationalFunction]:
        return None

    def put(self, kind: str, key: CountKey, value: RationalFunction) -> None:
        pass


_shared_cache = WeightCache()


@lru_cache(maxsize=None)
def gl_order(n: int) -> UnivariatePoly:
    """|GL_n(F_q)| as a polynomial in q: product of (q^n - q^j) for j < n."""
    if n < 1:
        raise ValueError("gl_order needs n >= 1")
    qn = UnivariatePoly.monomial(1, n)
    result = UnivariatePoly.one()
    for j in range(n):
        result = result * (qn - UnivariatePoly.monomial(1, j))
    return result


@lru_cache(maxsize=None)
def _type_count_at_power(t: FactorizationType, m: int) -> UnivariatePoly:
    return count_monic_with_type(t).compose_monomial(m)


def ss_weight(level: int, r: int, m: int, cache: WeightCache | None = None) -> RationalFunction:
    """Block weight for all-semisimple commuting tuples.

    Level 0 is 1/|GL_r(q^m)|; level j sums, over the factorization types of
    r evaluated at q^m, the type count times the product of level j-1 child
    weights, one child per (degree, size) pair with the exponent multiplied
    by the pair's degree.
    """
    if level < 0 or r < 1 or m < 1:
        raise ValueError("ss_weight needs level >= 0, r >= 1, m >= 1")
    if cache is None:
        cache = _shared_cache
    key = CountKey(level, r, m)
    hit = cache.get("ss", key)
    if hit is not None:
        return hit
    if level == 0:
        value = RationalFunction(UnivariatePoly.one(), gl_order(r).compose_monomial(m))
    else:
        value = RationalFunction.zero()
        for t in enumerate_types(r):
            term = RationalFunction.from_poly(_type_count_at_power(t, m))
            for degree, size in type_pairs(t):
                term = term * ss_weight(level - 1, size, m * degree, cache)
            value = value + term
    cache.put("ss", key, value)
    return value


def mixed_weight(level: int, r: int, m: int, cache: WeightCache | None = None) -> RationalFunction:
    """Block weight when the last matrix is merely invertible and commuting.

    Same recursion shape as ``ss_weight`` but the leaf counts the candidate
    characteristic polynomials of the free matrix on the block:
    (q^m - 1) * q^(m*(r-1)).
    """
    if level < 0 or r < 1 or m < 1:
        raise ValueError("mixed_weight needs level >= 0, r >= 1, m >= 1")
    if cache is None:
        cache = _shared_cache
    key = CountKey(level, r, m)
    hit = cache.get("mixed", key)
    if hit is not None:
        return hit
    if level == 0:
        qm = UnivariatePoly.monomial(1, m)
        leaf = (qm - 1) * UnivariatePoly.monomial(1, m * (r - 1))
        value = RationalFunction.from_poly(leaf)
    else:
        value = RationalFunction.zero()
        for t in enumerate_types(r):
            term = RationalFunction.from_poly(_type_count_at_power(t, m))
            for degree, size in type_pairs(t):
                term = term * mixed_weight(level - 1, size, m * degree, cache)
            value = value + term
    cache.put("mixed", key, value)
    return value


@dataclass(frozen=True)
class CountingPolynomial:
    """An integer-coefficient count in q, tagged with what it counts."""

    poly: UnivariatePoly
    n: int
    k: int
    mode: Mode

    def __post_init__(self) -> None:
        if self.mode not in (MODE_SEMISIMPLE, MODE_MIXED, MODE_CONJUGACY):
            raise ValueError(f"unknown mode {self.mode!r}")
        if not self.poly.is_integer():
            raise IntegralityViolation(f"non-integer coefficients in {self.poly}")

    def evaluate(self, q: int) -> int:
        value = self.poly.evaluate(q)
        return value.numerator  # integer coefficients, so denominator is 1

    def to_json(self) -> dict:
        return {"n": self.n, "k": self.k, "mode": self.mode, "poly": self.poly.to_json()}


def _certified_quotient(numerator: UnivariatePoly, denominator: UnivariatePoly) -> UnivariatePoly:
    """Exact division that upgrades failures to IntegralityViolation."""
    try:
        poly = numerator.exact_div(denominator)
    except NotDivisible as exc:
        raise IntegralityViolation(str(exc)) from exc
    if not poly.is_integer():
        raise IntegralityViolation(f"fractional coefficients in {poly}")
    return poly


def count_semisimple_tuples(n: int, k: int, cache: WeightCache | None = None) -> CountingPolynomial:
    """Commuting k-tuples of semisimple elements of GL_n(F_q), as a polynomial.

    k = 0 counts the empty tuple: the constant polynomial 1.
    """
    if n < 1:
        raise InvalidArity("matrix size n must be >= 1")
    if k < 0:
        raise InvalidArity("tuple length k must be >= 0")
    if k == 0:
        return CountingPolynomial(UnivariatePoly.one(), n, 0, MODE_SEMISIMPLE)
    w = ss_weight(k, n, 1, cache)
    poly = _certified_quotient(gl_order(n) * w.num, w.den)
    return CountingPolynomial(poly, n, k, MODE_SEMISIMPLE)


def count_mixed_tuples(n: int, k: int, cache: WeightCache | None = None) -> CountingPolynomial:
    """Commuting k-tuples with the first k-1 semisimple and the last free.

    Needs k >= 2: with no free slot the all-semisimple count applies instead.
    """
    if n < 1:
        raise InvalidArity("matrix size n must be >= 1")
    if k < 2:
        raise InvalidArity("mixed tuples need k >= 2")
    w = mixed_weight(k - 2, n, 1, cache)
    poly = _certified_quotient(gl_order(n) * w.num, w.den)
    return CountingPolynomial(poly, n, k, MODE_MIXED)


def count_conjugacy_classes(n: int, k: int, cache: WeightCache | None = None) -> CountingPolynomial:
    """Simultaneous-conjugation classes of commuting semisimple k-tuples."""
    if n < 1:
        raise InvalidArity("matrix size n must be >= 1")
    if k < 1:
        raise InvalidArity("conjugacy classes need k >= 1")
    w = mixed_weight(k - 1, n, 1, cache)
    poly = _certified_quotient(w.num, w.den)
    return CountingPolynomial(poly, n, k, MODE_CONJUGACY)


def hom_count(n: int, g: int, prank: int, cache: WeightCache | None = None) -> CountingPolynomial:
    """Representation count for a genus-g surface-like source of rank 2g.

    The source group is abelian of rank 2g; p-rank 0 forces every image
    matrix semisimple, p-rank 1 frees exactly one of the 2g generators.
    """
    if g < 1:
        raise InvalidArity("genus g must be >= 1")
    if prank == 0:
        return count_semisimple_tuples(n, 2 * g, cache)
    if prank == 1:
        return count_mixed_tuples(n, 2 * g, cache)
    raise InvalidArity("p-rank must be 0 or 1")


@dataclass(frozen=True)
class DegreeReport:
    """Outcome of the degree and leading-coefficient checks on a count."""

    n: int
    k: int
    degree: int
    bound: int
    bound_met: bool
    bound_enforced: bool
    monic_checked: bool
    is_monic: bool
    degree_exact: bool

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "degree": self.degree,
            "bound": self.bound,
            "boundMet": self.bound_met,
            "boundEnforced": self.bound_enforced,
            "monicChecked": self.monic_checked,
            "isMonic": self.is_monic,
            "degreeExact": self.degree_exact,
        }


def check_degree_monic(cp: CountingPolynomial) -> DegreeReport:
    """Degree bound n^2 + (k-1)n and monic top behaviour at k = 2.

    The bound is asserted (raising DegreeViolation) for even k >= 2, where it
    is proven; for odd k and for k = 0 it is reported only.  At k = 2 the
    degree must equal the bound with leading coefficient 1, else
    MonicViolation.  Only all-semisimple counts are covered.
    """
    if cp.mode != MODE_SEMISIMPLE:
        raise ValueError("degree check applies to all-semisimple counts only")
    n, k = cp.n, cp.k
    bound = n * n + (k - 1) * n
    degree = int(cp.poly.degree)  # counts are never the zero polynomial
    bound_met = degree >= bound
    enforced = k >= 2 and k % 2 == 0
    if enforced and not bound_met:
        raise DegreeViolation(f"degree {degree} < bound {bound} at n={n}, k={k}")
    is_monic = cp.poly.is_monic()
    degree_exact = degree == bound
    if k == 2 and not (is_monic and degree_exact):
        raise MonicViolation(f"k=2 count must be monic of degree {bound}, got degree {degree}")
    return DegreeReport(
        n=n,
        k=k,
        degree=degree,
        bound=bound,
        bound_met=bound_met,
        bound_enforced=enforced,
        monic_checked=k == 2,
        is_monic=is_monic,
        degree_exact=degree_exact,
    )


def check_laurent_quotient(cp: CountingPolynomial) -> LaurentPoly:
    """The count divided by |GL_n(q)|, certified an integer Laurent polynomial.

    Applies to all-semisimple and mixed counts.  A NotLaurent escape means
    the computed count was wrong, so it propagates; fractional coefficients
    raise NonIntegerCoefficient.
    """
    if cp.mode not in (MODE_SEMISIMPLE, MODE_MIXED):
        raise ValueError("Laurent quotient applies to tuple counts, not class counts")
    quotient = to_laurent(cp.poly, gl_order(cp.n))
    if not quotient.is_integer():
        raise NonIntegerCoefficient(f"quotient {quotient} has fractional coefficients")
    return quotient
