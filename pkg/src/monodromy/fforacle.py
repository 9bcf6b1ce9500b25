"""Brute-force ground truth over small finite fields.

Everything here is deliberately naive: explicit field tables, explicit
matrix enumeration, centralizer scans.  The point is to be an independent
check on the polynomial engine, so nothing is shared with it beyond the
factorization-type vocabulary.

Supported fields are F_{p^e} for p in {2, 3, 5, 7} and e <= 3, with a fixed
modulus per (p, e) so element encodings are stable across runs.  Elements
are encoded as integers 0 .. p^e - 1 whose base-p digits, little-endian, are
the coefficients of the residue polynomial; 0 and 1 are the field's zero
and one under this encoding.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from math import prod

from .typecomb import FactorizationType, enumerate_types

GL_ORDER_BUDGET = 200_000   # largest |GL_n(F_q)| enumerated without override
POWER_BUDGET = 10**6        # largest q^n for vector spans and poly censuses
PAIRWISE_BUDGET = 4 * 10**7  # largest |GL|^2 for centralizer scans


class UnsupportedField(ValueError):
    """Field outside the fixed (p, e) table."""


class BudgetExceeded(RuntimeError):
    """Requested enumeration is larger than the configured ceiling."""


_MODULI: dict[tuple[int, int], tuple[int, ...]] = {
    (2, 2): (1, 1, 1),     # x^2 + x + 1
    (2, 3): (1, 1, 0, 1),  # x^3 + x + 1
    (3, 2): (1, 0, 1),     # x^2 + 1
    (3, 3): (1, 2, 0, 1),  # x^3 + 2x + 1
    (5, 2): (2, 0, 1),     # x^2 + 2
    (5, 3): (1, 1, 0, 1),  # x^3 + x + 1
    (7, 2): (1, 0, 1),     # x^2 + 1
    (7, 3): (2, 0, 0, 1),  # x^3 + 2
}

_SUPPORTED_PRIMES = (2, 3, 5, 7)


def _pp_trim(cs: list[int]) -> tuple[int, ...]:
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


def _pp_divmod(p: int, a: tuple[int, ...], b: tuple[int, ...]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Long division of base-p coefficient tuples over the prime field."""
    inv_lead = pow(b[-1], p - 2, p)
    rem = list(a)
    quo = [0] * max(len(a) - len(b) + 1, 0)
    while len(rem) >= len(b):
        factor = rem[-1] * inv_lead % p
        shift = len(rem) - len(b)
        quo[shift] = factor
        for i, c in enumerate(b):
            rem[shift + i] = (rem[shift + i] - factor * c) % p
        while rem and rem[-1] == 0:
            rem.pop()
    return _pp_trim(quo), _pp_trim(rem)


class FieldSpec:
    """A small finite field with fully materialized arithmetic tables."""

    __slots__ = ("p", "e", "modulus", "size", "add_table", "mul_table", "neg_table", "inv_table")

    def __init__(self, p: int, e: int, modulus: tuple[int, ...]):
        self.p = p
        self.e = e
        self.modulus = modulus
        self.size = p**e
        self._verify_modulus()
        self._build_tables()

    def _verify_modulus(self) -> None:
        mod = self.modulus
        if len(mod) != self.e + 1 or mod[-1] != 1 or any(not 0 <= c < self.p for c in mod):
            raise UnsupportedField(f"modulus {mod} is not monic of degree {self.e} over F_{self.p}")
        # trial division against every lower-degree monic polynomial
        for d in range(1, self.e):
            for low in itertools.product(range(self.p), repeat=d):
                candidate = low + (1,)
                if _pp_divmod(self.p, mod, candidate)[1] == ():
                    raise UnsupportedField(f"modulus {mod} is divisible by {candidate}")

    def _digits(self, value: int) -> list[int]:
        out = []
        for _ in range(self.e):
            out.append(value % self.p)
            value //= self.p
        return out

    def _undigits(self, digits) -> int:
        value = 0
        for d in reversed(list(digits)):
            value = value * self.p + d
        return value

    def _build_tables(self) -> None:
        p, e, size = self.p, self.e, self.size
        digits = [self._digits(v) for v in range(size)]
        add = []
        mul = []
        for a in range(size):
            da = digits[a]
            add.append(tuple(self._undigits((x + y) % p for x, y in zip(da, digits[b])) for b in range(size)))
            row = []
            for b in range(size):
                conv = [0] * (2 * e - 1 if e > 1 else 1)
                for i, x in enumerate(da):
                    if x:
                        for j, y in enumerate(digits[b]):
                            conv[i + j] = (conv[i + j] + x * y) % p
                _, rem = _pp_divmod(p, _pp_trim(conv), self.modulus)
                row.append(self._undigits(list(rem) + [0] * (e - len(rem))))
            mul.append(tuple(row))
        self.add_table = tuple(add)
        self.mul_table = tuple(mul)
        self.neg_table = tuple(self._undigits((-d) % p for d in digits[a]) for a in range(size))
        inv = [0] * size
        for a in range(1, size):
            for b in range(1, size):
                if self.mul_table[a][b] == 1:
                    inv[a] = b
                    break
            else:
                raise UnsupportedField(f"element {a} has no inverse; modulus {self.modulus} reducible")
        self.inv_table = tuple(inv)

    # element arithmetic

    def add(self, a: int, b: int) -> int:
        return self.add_table[a][b]

    def sub(self, a: int, b: int) -> int:
        return self.add_table[a][self.neg_table[b]]

    def mul(self, a: int, b: int) -> int:
        return self.mul_table[a][b]

    def neg(self, a: int) -> int:
        return self.neg_table[a]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return self.inv_table[a]

    def elements(self) -> range:
        return range(self.size)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FieldSpec)
            and (self.p, self.e, self.modulus) == (other.p, other.e, other.modulus)
        )

    def __hash__(self) -> int:
        return hash((self.p, self.e, self.modulus))

    def __repr__(self) -> str:
        return f"FieldSpec(p={self.p}, e={self.e}, modulus={self.modulus})"


@lru_cache(maxsize=None)
def field_make(p: int, e: int) -> FieldSpec:
    """The supported field F_{p^e}; raises UnsupportedField outside the table."""
    if p not in _SUPPORTED_PRIMES:
        raise UnsupportedField(f"characteristic {p} not supported (use one of {_SUPPORTED_PRIMES})")
    if not 1 <= e <= 3:
        raise UnsupportedField(f"extension degree {e} not supported (use 1 <= e <= 3)")
    modulus = (0, 1) if e == 1 else _MODULI[(p, e)]
    return FieldSpec(p, e, modulus)


def gl_order_int(q: int, n: int) -> int:
    return prod(q**n - q**j for j in range(n))


# ---------------------------------------------------------------------------
# polynomials over F_q: coefficient tuples ascending, no trailing zeros


def _fq_trim(cs: list[int]) -> tuple[int, ...]:
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


def _fq_sub(f: FieldSpec, a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    out = [0] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] = c
    for i, c in enumerate(b):
        out[i] = f.sub(out[i], c)
    return _fq_trim(out)


def _fq_mul(f: FieldSpec, a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = f.add(out[i + j], f.mul(x, y))
    return _fq_trim(out)


def _fq_divmod(f: FieldSpec, a: tuple[int, ...], b: tuple[int, ...]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    inv_lead = f.inv(b[-1])
    rem = list(a)
    quo = [0] * max(len(a) - len(b) + 1, 0)
    while len(rem) >= len(b):
        factor = f.mul(rem[-1], inv_lead)
        shift = len(rem) - len(b)
        quo[shift] = factor
        for i, c in enumerate(b):
            rem[shift + i] = f.sub(rem[shift + i], f.mul(factor, c))
        while rem and rem[-1] == 0:
            rem.pop()
    return _fq_trim(quo), _fq_trim(rem)


def _fq_monic(f: FieldSpec, a: tuple[int, ...]) -> tuple[int, ...]:
    if not a or a[-1] == 1:
        return a
    inv_lead = f.inv(a[-1])
    return tuple(f.mul(c, inv_lead) for c in a)


def _fq_gcd(f: FieldSpec, a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    while b:
        a, b = b, _fq_divmod(f, a, b)[1]
    return _fq_monic(f, a)


def _fq_lcm(f: FieldSpec, a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    g = _fq_gcd(f, a, b)
    return _fq_monic(f, _fq_mul(f, a, _fq_divmod(f, b, g)[0]))


def _fq_derivative(f: FieldSpec, a: tuple[int, ...]) -> tuple[int, ...]:
    # d/dT: coefficient k of T^k becomes k*a_k at T^(k-1); k acts through k mod p,
    # which is exactly the small-integer element encoding
    out = []
    for k in range(1, len(a)):
        out.append(f.mul(a[k], k % f.p))
    return _fq_trim(out)


# ---------------------------------------------------------------------------
# matrices


@dataclass(frozen=True)
class FFMatrix:
    """Square matrix over a FieldSpec; entries are field-element encodings."""

    field: FieldSpec
    n: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if len(self.entries) != self.n or any(len(row) != self.n for row in self.entries):
            raise ValueError(f"entries are not {self.n}x{self.n}")
        size = self.field.size
        if any(not 0 <= v < size for row in self.entries for v in row):
            raise ValueError("entry out of range for the field")


def identity_matrix(f: FieldSpec, n: int) -> FFMatrix:
    return FFMatrix(f, n, tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)))


def _mat_mul_raw(add_t, mul_t, a, b) -> tuple[tuple[int, ...], ...]:
    cols = tuple(zip(*b))
    out = []
    for row in a:
        orow = []
        for col in cols:
            acc = 0
            for x, y in zip(row, col):
                acc = add_t[acc][mul_t[x][y]]
            orow.append(acc)
        out.append(tuple(orow))
    return tuple(out)


def mat_mul(a: FFMatrix, b: FFMatrix) -> FFMatrix:
    if a.field != b.field or a.n != b.n:
        raise ValueError("matrix shapes or fields differ")
    return FFMatrix(a.field, a.n, _mat_mul_raw(a.field.add_table, a.field.mul_table, a.entries, b.entries))


def mat_vec(m: FFMatrix, v: tuple[int, ...]) -> tuple[int, ...]:
    """Apply the matrix to a column vector."""
    f = m.field
    return tuple(
        _dot(f, row, v)
        for row in m.entries
    )


def _dot(f: FieldSpec, row, col) -> int:
    acc = 0
    for x, y in zip(row, col):
        acc = f.add(acc, f.mul(x, y))
    return acc


def mat_det(m: FFMatrix) -> int:
    f = m.field
    a = [list(row) for row in m.entries]
    n = m.n
    det = 1
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col] != 0), None)
        if pivot is None:
            return 0
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            det = f.neg(det)
        det = f.mul(det, a[col][col])
        inv_p = f.inv(a[col][col])
        for r in range(col + 1, n):
            if a[r][col] != 0:
                factor = f.mul(a[r][col], inv_p)
                for c in range(col, n):
                    a[r][c] = f.sub(a[r][c], f.mul(factor, a[col][c]))
    return det


def mat_inv(m: FFMatrix) -> FFMatrix:
    f, n = m.field, m.n
    a = [list(row) + [1 if i == j else 0 for j in range(n)] for i, row in enumerate(m.entries)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col] != 0), None)
        if pivot is None:
            raise ZeroDivisionError("matrix is singular")
        a[col], a[pivot] = a[pivot], a[col]
        inv_p = f.inv(a[col][col])
        a[col] = [f.mul(c, inv_p) for c in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                factor = a[r][col]
                a[r] = [f.sub(x, f.mul(factor, y)) for x, y in zip(a[r], a[col])]
    return FFMatrix(f, n, tuple(tuple(row[n:]) for row in a))


def enumerate_invertible(n: int, f: FieldSpec, override_budget: bool = False):
    """Stream every invertible n x n matrix, deterministically.

    Rows are chosen in ascending vector order, each required to lie outside
    the span of the rows above it, so the stream has exactly |GL_n(F_q)|
    entries and its order is reproducible.
    """
    if n < 1:
        raise ValueError("matrix size must be >= 1")
    order = gl_order_int(f.size, n)
    if not override_budget and (order > GL_ORDER_BUDGET or f.size**n > POWER_BUDGET):
        raise BudgetExceeded(
            f"|GL_{n}(F_{f.size})| = {order} with q^n = {f.size ** n}; pass override to enumerate anyway"
        )
    vectors = tuple(itertools.product(range(f.size), repeat=n))
    add_t = f.add_table
    mul_t = f.mul_table

    def extend(rows: list, span: set):
        if len(rows) == n:
            yield FFMatrix(f, n, tuple(rows))
            return
        for v in vectors:
            if v in span:
                continue
            scaled = [tuple(mul_t[c][x] for x in v) for c in range(f.size)]
            new_span = {
                tuple(add_t[a][b] for a, b in zip(s, cv)) for s in span for cv in scaled
            }
            rows.append(v)
            yield from extend(rows, new_span)
            rows.pop()

    return extend([], {(0,) * n})


def min_poly(m: FFMatrix) -> tuple[int, ...]:
    """Minimal polynomial of a matrix, ascending coefficients, monic.

    Builds the Krylov chain of each standard basis vector not yet covered,
    reads off that vector's monic annihilator from the first linear
    dependence, and accumulates the least common multiple.
    """
    f, n = m.field, m.n
    result = (1,)
    covered: list[tuple[int, tuple[int, ...]]] = []  # echelonized (pivot, vector)

    def reduce_against(rows, vec):
        for pivot, row in rows:
            c = vec[pivot]
            if c != 0:
                factor = f.mul(c, f.inv(row[pivot]))
                vec = tuple(f.sub(x, f.mul(factor, y)) for x, y in zip(vec, row))
        return vec

    for i in range(n):
        basis = tuple(1 if j == i else 0 for j in range(n))
        if all(x == 0 for x in reduce_against(covered, basis)):
            continue
        chain: list[tuple[int, tuple[int, ...], tuple[int, ...]]] = []  # (pivot, vec, combo)
        v = basis
        while True:
            r = v
            combo = [0] * (len(chain) + 1)
            combo[-1] = 1
            for pivot, row, row_combo in chain:
                c = r[pivot]
                if c != 0:
                    factor = f.mul(c, f.inv(row[pivot]))
                    r = tuple(f.sub(x, f.mul(factor, y)) for x, y in zip(r, row))
                    for t, u in enumerate(row_combo):
                        combo[t] = f.sub(combo[t], f.mul(factor, u))
            if all(x == 0 for x in r):
                annihilator = tuple(combo)  # monic: the new vector's slot stayed 1
                break
            pivot = next(t for t, x in enumerate(r) if x != 0)
            chain.append((pivot, r, tuple(combo)))
            v = mat_vec(m, v)
        result = _fq_lcm(f, result, annihilator)
        for pivot, row, _ in chain:
            reduced = reduce_against(covered, row)
            if any(x != 0 for x in reduced):
                covered.append((next(t for t, x in enumerate(reduced) if x != 0), reduced))
        if len(covered) == n:
            break
    return result


def is_semisimple(m: FFMatrix) -> bool:
    """Squarefree minimal polynomial, detected by gcd with its derivative.

    A zero derivative (possible in characteristic p) falls out correctly:
    gcd(mp, 0) is mp itself, which is not constant, so the test fails.
    """
    mp = min_poly(m)
    return _fq_gcd(m.field, mp, _fq_derivative(m.field, mp)) == (1,)


# ---------------------------------------------------------------------------
# group-level scans

MODE_ALL_SEMISIMPLE = "all-semisimple"
MODE_LAST_FREE = "last-free"


class _GroupContext:
    """Everything enumerated once per (field, n): elements, flags, centralizers."""

    def __init__(self, f: FieldSpec, n: int):
        self.field = f
        self.n = n
        mats = [m.entries for m in enumerate_invertible(n, f, override_budget=True)]
        self.mats = tuple(mats)
        self.index = {entries: i for i, entries in enumerate(mats)}
        self.semisimple = tuple(is_semisimple(FFMatrix(f, n, entries)) for entries in mats)
        self.ss_set = frozenset(i for i, flag in enumerate(self.semisimple) if flag)
        self.inverse = tuple(self.index[mat_inv(FFMatrix(f, n, entries)).entries] for entries in mats)
        self._centralizers: tuple[frozenset, ...] | None = None
        self._conj_memo: dict[tuple[int, int], int] = {}

    @property
    def centralizers(self) -> tuple[frozenset, ...]:
        if self._centralizers is None:
            add_t, mul_t = self.field.add_table, self.field.mul_table
            size = len(self.mats)
            sets: list[set[int]] = [set() for _ in range(size)]
            for i in range(size):
                sets[i].add(i)
                a = self.mats[i]
                for j in range(i + 1, size):
                    b = self.mats[j]
                    if _mat_mul_raw(add_t, mul_t, a, b) == _mat_mul_raw(add_t, mul_t, b, a):
                        sets[i].add(j)
                        sets[j].add(i)
            self._centralizers = tuple(frozenset(s) for s in sets)
        return self._centralizers

    def conjugate(self, g: int, x: int) -> int:
        key = (g, x)
        hit = self._conj_memo.get(key)
        if hit is not None:
            return hit
        add_t, mul_t = self.field.add_table, self.field.mul_table
        gx = _mat_mul_raw(add_t, mul_t, self.mats[g], self.mats[x])
        result = self.index[_mat_mul_raw(add_t, mul_t, gx, self.mats[self.inverse[g]])]
        self._conj_memo[key] = result
        return result


@lru_cache(maxsize=None)
def _group_context(f: FieldSpec, n: int) -> _GroupContext:
    return _GroupContext(f, n)


def _check_scan_budget(f: FieldSpec, n: int, override_budget: bool) -> None:
    if override_budget:
        return
    order = gl_order_int(f.size, n)
    if order > GL_ORDER_BUDGET or f.size**n > POWER_BUDGET or order * order > PAIRWISE_BUDGET:
        raise BudgetExceeded(
            f"group scan for n={n}, q={f.size} needs {order}^2 pair tests; pass override to force"
        )


def brute_hom_count(n: int, f: FieldSpec, k: int, mode: str, override_budget: bool = False) -> int:
    """Count commuting k-tuples of invertible matrices by direct scan.

    Mode ``all-semisimple`` constrains every entry; ``last-free`` leaves the
    final entry merely invertible-and-commuting.  Partial tuples are extended
    through intersections of centralizer sets, never by raw enumeration of
    q^(k n^2) candidates.
    """
    if k < 1:
        raise ValueError("tuple length must be >= 1")
    if mode not in (MODE_ALL_SEMISIMPLE, MODE_LAST_FREE):
        raise ValueError(f"unknown mode {mode!r}")
    _check_scan_budget(f, n, override_budget)
    ctx = _group_context(f, n)
    everything = frozenset(range(len(ctx.mats)))
    if mode == MODE_LAST_FREE and k == 1:
        return len(everything)
    cents = ctx.centralizers
    last_free = mode == MODE_LAST_FREE
    ss_slots = k - 1 if last_free else k

    def extend(allowed_ss: frozenset, allowed_all: frozenset, slots_left: int) -> int:
        if slots_left == 0:
            return len(allowed_all) if last_free else 1
        if slots_left == 1 and not last_free:
            return len(allowed_ss)
        total = 0
        for x in allowed_ss:
            c = cents[x]
            total += extend(allowed_ss & c, allowed_all & c if last_free else allowed_all, slots_left - 1)
        return total

    return extend(ctx.ss_set, everything, ss_slots)


def brute_conj_count(n: int, f: FieldSpec, k: int, override_budget: bool = False) -> int:
    """Orbit count of commuting all-semisimple k-tuples under conjugation.

    Sweeps tuples in lexicographic order, marking each new orbit by
    conjugating the representative with every group element.
    """
    if k < 1:
        raise ValueError("tuple length must be >= 1")
    _check_scan_budget(f, n, override_budget)
    ctx = _group_context(f, n)
    cents = ctx.centralizers
    tuples: list[tuple[int, ...]] = []

    def collect(prefix: list[int], allowed: frozenset) -> None:
        if len(prefix) == k:
            tuples.append(tuple(prefix))
            return
        for x in sorted(allowed):
            prefix.append(x)
            collect(prefix, allowed & cents[x])
            prefix.pop()

    collect([], ctx.ss_set)
    visited: set[tuple[int, ...]] = set()
    orbits = 0
    for t in tuples:
        if t in visited:
            continue
        orbits += 1
        for g in range(len(ctx.mats)):
            visited.add(tuple(ctx.conjugate(g, x) for x in t))
    return orbits


def count_semisimple_elements(n: int, f: FieldSpec, override_budget: bool = False) -> int:
    """Number of semisimple invertible matrices, by direct flags."""
    _check_scan_budget(f, n, override_budget)
    return len(_group_context(f, n).ss_set)


# ---------------------------------------------------------------------------
# polynomial census


@dataclass(frozen=True)
class CensusRecord:
    """Tally of monic degree-n polynomials of one factorization type."""

    type: FactorizationType
    count: int

    def to_json(self) -> dict:
        return {"type": self.type.to_json(), "count": self.count}


@lru_cache(maxsize=None)
def _irreducibles_up_to(f: FieldSpec, max_degree: int) -> dict[int, tuple[tuple[int, ...], ...]]:
    """Monic irreducibles over f of each degree <= max_degree, by trial division."""
    table: dict[int, tuple[tuple[int, ...], ...]] = {}
    for d in range(1, max_degree + 1):
        found = []
        divisors = [irr for dd in range(1, d // 2 + 1) for irr in table[dd]]
        for low in itertools.product(range(f.size), repeat=d):
            candidate = low + (1,)
            if all(_fq_divmod(f, candidate, irr)[1] != () for irr in divisors):
                found.append(candidate)
        table[d] = tuple(found)
    return table


def poly_type_census(f: FieldSpec, n: int, override_budget: bool = False) -> tuple[CensusRecord, ...]:
    """Factor every monic degree-n polynomial with nonzero constant term.

    Returns one record per factorization type of weight n, in enumeration
    order, including zero tallies.  The counts sum to (q - 1) q^(n - 1).
    """
    if n < 1:
        raise ValueError("census degree must be >= 1")
    if not override_budget and f.size**n > POWER_BUDGET:
        raise BudgetExceeded(f"census would scan {f.size ** n} polynomials; pass override to force")
    irreducibles = _irreducibles_up_to(f, n)
    tally: dict[FactorizationType, int] = {t: 0 for t in enumerate_types(n)}
    for low in itertools.product(range(f.size), repeat=n):
        if low[0] == 0:
            continue
        remaining = low + (1,)
        exponents: dict[int, list[int]] = {}
        for d in range(1, n + 1):
            if len(remaining) - 1 < d:
                break
            for irr in irreducibles[d]:
                mult = 0
                while True:
                    quo, rem = _fq_divmod(f, remaining, irr)
                    if rem:
                        break
                    remaining = quo
                    mult += 1
                if mult:
                    exponents.setdefault(d, []).append(mult)
        assert remaining == (1,), "trial division failed to exhaust the polynomial"
        parts = tuple(
            sorted((d for d, exps in exponents.items() for e in exps for _ in range(e)), reverse=True)
        )
        refinements = tuple(
            (d, tuple(sorted(exponents[d], reverse=True))) for d in sorted(exponents, reverse=True)
        )
        tally[FactorizationType(parts, refinements)] += 1
    return tuple(CensusRecord(t, tally[t]) for t in enumerate_types(n))
