"""Divisibility checks for homomorphism counts into small finite groups.

Groups live here as explicit permutation tables generated from a handful of
generators.  The checks mirror classical counting facts: the number of
solutions of x^n = e is divisible by n whenever n divides the group order;
cosets of a normalized subgroup carry p-power-order elements in multiples of
the p-part of the subgroup order; and counts of commuting tuples whose
orders avoid a prime set S are divisible by the away-from-S part of the
group order.

Composition convention: ``compose(a, b)`` applies b first, then a.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources
from typing import Iterable, Optional, Sequence

from .fforacle import FieldSpec, enumerate_invertible, mat_vec

CLOSURE_BUDGET = 10_000
HOM_GROUP_BUDGET = 2_000
SWEEP_GROUP_BUDGET = 400


class ClosureBudgetExceeded(RuntimeError):
    """Generated group outgrew the closure ceiling."""


class PreconditionViolated(ValueError):
    """Input fails a stated hypothesis (normalization or element order)."""


class BudgetExceeded(RuntimeError):
    """Group too large for the requested scan."""


# ---------------------------------------------------------------------------
# permutations


def compose_perms(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(a[x] for x in b)


def parse_cycles(text: str, domain: int) -> tuple[int, ...]:
    """Cycle notation with 1-based points, e.g. ``(1 2 3)(4 5)``.

    Multiple cycles are applied left to right (irrelevant when disjoint).
    ``()`` is the identity.
    """
    perm = tuple(range(domain))
    body = text.strip()
    if not re.fullmatch(r"(\(\s*([0-9]+[\s,]*)*\)\s*)+", body):
        raise ValueError(f"bad cycle notation: {text!r}")
    for cycle_text in re.findall(r"\(([^)]*)\)", body):
        points = [int(tok) for tok in re.split(r"[\s,]+", cycle_text.strip()) if tok]
        if not points:
            continue
        if any(not 1 <= pt <= domain for pt in points) or len(set(points)) != len(points):
            raise ValueError(f"cycle {cycle_text!r} is not valid on 1..{domain}")
        mapping = list(range(domain))
        for at, nxt in zip(points, points[1:] + points[:1]):
            mapping[at - 1] = nxt - 1
        perm = compose_perms(tuple(mapping), perm)
    return perm


def cycle_string(perm: tuple[int, ...]) -> str:
    """Inverse of parse_cycles; fixed points omitted, identity is ``()``."""
    seen = [False] * len(perm)
    cycles = []
    for start in range(len(perm)):
        if seen[start] or perm[start] == start:
            seen[start] = True
            continue
        cycle = [start]
        seen[start] = True
        at = perm[start]
        while at != start:
            cycle.append(at)
            seen[at] = True
            at = perm[at]
        cycles.append("(" + " ".join(str(pt + 1) for pt in cycle) + ")")
    return "".join(cycles) if cycles else "()"


# ---------------------------------------------------------------------------
# group tables


class FiniteGroupTable:
    """A finite permutation group with a fixed, deterministic element order."""

    def __init__(self, elements: Sequence[tuple[int, ...]], name: str = ""):
        elems = tuple(tuple(p) for p in elements)
        if not elems:
            raise ValueError("a group table needs at least the identity")
        domain = len(elems[0])
        identity = tuple(range(domain))
        for p in elems:
            if len(p) != domain or sorted(p) != list(range(domain)):
                raise ValueError(f"{p!r} is not a permutation of 0..{domain - 1}")
        if len(set(elems)) != len(elems):
            raise ValueError("duplicate elements in group table")
        if identity not in elems:
            raise ValueError("group table lacks the identity")
        self.name = name
        self.elements = elems
        self.domain = domain
        self._index = {p: i for i, p in enumerate(elems)}
        self.identity_index = self._index[identity]
        self._orders: Optional[tuple[int, ...]] = None
        self._inverses: Optional[tuple[int, ...]] = None

    def __len__(self) -> int:
        return len(self.elements)

    def index_of(self, perm: tuple[int, ...]) -> int:
        return self._index[perm]

    def compose_idx(self, i: int, j: int) -> int:
        product = compose_perms(self.elements[i], self.elements[j])
        try:
            return self._index[product]
        except KeyError:
            raise ValueError("element list is not closed under composition") from None

    @property
    def inverses(self) -> tuple[int, ...]:
        if self._inverses is None:
            self._inverses = tuple(
                self._index[tuple(_invert(p))] for p in self.elements
            )
        return self._inverses

    def power_idx(self, i: int, t: int) -> int:
        """i-th element to the t-th power, by repeated squaring."""
        if t < 0:
            return self.power_idx(self.inverses[i], -t)
        acc = self.identity_index
        base = i
        while t:
            if t & 1:
                acc = self.compose_idx(acc, base)
            base = self.compose_idx(base, base)
            t >>= 1
        return acc

    @property
    def orders(self) -> tuple[int, ...]:
        """Element orders: least divisor d of |G| with x^d = e."""
        if self._orders is None:
            divisors = _divisors(len(self))
            out = []
            for i in range(len(self)):
                out.append(next(d for d in divisors if self.power_idx(i, d) == self.identity_index))
            self._orders = tuple(out)
        return self._orders

    def subgroup_closure(self, gens: Iterable[int]) -> frozenset[int]:
        """Indices of the subgroup generated by the given element indices."""
        seen = {self.identity_index}
        queue = [self.identity_index]
        gen_list = [g for g in gens]
        while queue:
            x = queue.pop()
            for g in gen_list:
                y = self.compose_idx(x, g)
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        return frozenset(seen)


def _invert(perm: tuple[int, ...]) -> list[int]:
    out = [0] * len(perm)
    for i, x in enumerate(perm):
        out[x] = i
    return out


def group_generate(gens: Sequence[tuple[int, ...]], name: str = "", budget: int = CLOSURE_BUDGET) -> FiniteGroupTable:
    """Breadth-first closure of the generators, identity first."""
    if not gens:
        raise ValueError("need at least one generator")
    domain = len(gens[0])
    if any(len(g) != domain for g in gens):
        raise ValueError("generators act on different domains")
    identity = tuple(range(domain))
    order: list[tuple[int, ...]] = [identity]
    seen = {identity}
    at = 0
    while at < len(order):
        x = order[at]
        at += 1
        for g in gens:
            y = compose_perms(x, g)
            if y not in seen:
                if len(order) >= budget:
                    raise ClosureBudgetExceeded(f"closure exceeded {budget} elements")
                seen.add(y)
                order.append(y)
    return FiniteGroupTable(order, name=name)


def matrix_group_table(f: FieldSpec, n: int, override_budget: bool = False) -> FiniteGroupTable:
    """GL_n over a small field as permutations of the nonzero column vectors."""
    vectors = [v for v in itertools.product(range(f.size), repeat=n) if any(v)]
    vec_index = {v: i for i, v in enumerate(vectors)}
    perms = []
    for m in enumerate_invertible(n, f, override_budget=override_budget):
        perms.append(tuple(vec_index[mat_vec(m, v)] for v in vectors))
    return FiniteGroupTable(perms, name=f"GL{n}F{f.size}")


# ---------------------------------------------------------------------------
# number-theory helpers


def _divisors(n: int) -> tuple[int, ...]:
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return tuple(small + large[::-1])


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def _prime_factors(n: int) -> tuple[int, ...]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return tuple(out)


def _valuation(n: int, p: int) -> int:
    if n == 0:
        raise ValueError("valuation of zero")
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def _is_prime_power_or_one(n: int, p: int) -> bool:
    while n % p == 0:
        n //= p
    return n == 1


# ---------------------------------------------------------------------------
# counting checks


def frobenius_count(table: FiniteGroupTable, n: int) -> tuple[int, bool]:
    """Count solutions of x^n = e and report whether n divides the count.

    The divisibility is guaranteed when n divides |G|; for other n the
    verdict is still returned but means nothing.
    """
    if n < 1:
        raise ValueError("exponent must be >= 1")
    count = sum(1 for order in table.orders if n % order == 0)
    return count, count % n == 0


def coset_p_power_count(
    table: FiniteGroupTable, h_gens: Sequence[int], x: int, p: int
) -> tuple[int, bool]:
    """Count p-power-order elements in the coset Hx; verdict: p-part of |H| divides it.

    Requires x to normalize H = <h_gens> and to have p-power order (1 counts).
    """
    if not _is_prime(p):
        raise PreconditionViolated(f"{p} is not prime")
    subgroup = table.subgroup_closure(h_gens)
    if not _is_prime_power_or_one(table.orders[x], p):
        raise PreconditionViolated(f"element {x} has order {table.orders[x]}, not a power of {p}")
    x_inv = table.inverses[x]
    for g in h_gens:
        if table.compose_idx(table.compose_idx(x, g), x_inv) not in subgroup:
            raise PreconditionViolated(f"element {x} does not normalize the subgroup")
    required = p ** _valuation(len(subgroup), p)
    count = sum(
        1 for h in subgroup if _is_prime_power_or_one(table.orders[table.compose_idx(h, x)], p)
    )
    return count, count % required == 0


def _centralizer_sets(table: FiniteGroupTable) -> tuple[frozenset[int], ...]:
    size = len(table)
    sets: list[set[int]] = [set() for _ in range(size)]
    for i in range(size):
        sets[i].add(i)
        for j in range(i + 1, size):
            if table.compose_idx(i, j) == table.compose_idx(j, i):
                sets[i].add(j)
                sets[j].add(i)
    return tuple(frozenset(s) for s in sets)


def hom_count_profinite_abelian(table: FiniteGroupTable, k: int, primes: Iterable[int]) -> int:
    """Commuting k-tuples whose element orders avoid every prime in the set.

    These are exactly the homomorphisms from a free profinite-abelian group
    of rank k with the given primes deleted.
    """
    if k < 1:
        raise ValueError("rank must be >= 1")
    prime_set = frozenset(primes)
    if any(not _is_prime(p) for p in prime_set):
        raise ValueError(f"prime set {sorted(prime_set)} contains a non-prime")
    if len(table) > HOM_GROUP_BUDGET:
        raise BudgetExceeded(f"group order {len(table)} exceeds {HOM_GROUP_BUDGET}")
    eligible = frozenset(
        i for i, order in enumerate(table.orders) if all(order % p for p in prime_set)
    )
    cents = _centralizer_sets(table)

    def extend(allowed: frozenset[int], slots_left: int) -> int:
        if slots_left == 0:
            return 1
        if slots_left == 1:
            return len(allowed)
        return sum(extend(allowed & cents[x], slots_left - 1) for x in allowed)

    return extend(eligible, k)


@dataclass(frozen=True)
class PrimeValuation:
    prime: int
    count_valuation: int
    order_valuation: int
    ok: bool

    def to_json(self) -> dict:
        return {
            "prime": self.prime,
            "countValuation": self.count_valuation,
            "orderValuation": self.order_valuation,
            "ok": self.ok,
        }


@dataclass(frozen=True)
class DivisibilityReport:
    """Hom count against group order, prime by prime away from the deleted set."""

    group_name: str
    group_order: int
    k: int
    primes: tuple[int, ...]
    hom_count: int
    checks: tuple[PrimeValuation, ...]
    passed: bool

    @property
    def quotient(self) -> Fraction:
        return Fraction(self.hom_count, self.group_order)

    def to_json(self) -> dict:
        return {
            "group": self.group_name,
            "order": self.group_order,
            "k": self.k,
            "S": list(self.primes),
            "homCount": str(self.hom_count),
            "quotient": str(self.quotient),
            "checks": [c.to_json() for c in self.checks],
            "ok": self.passed,
        }


def divisibility_report(table: FiniteGroupTable, k: int, primes: Iterable[int]) -> DivisibilityReport:
    """For every prime l outside the set: l-valuation of the hom count >= that of |G|."""
    prime_set = tuple(sorted(frozenset(primes)))
    hom = hom_count_profinite_abelian(table, k, prime_set)
    checks = []
    for ell in _prime_factors(len(table)):
        if ell in prime_set:
            continue
        cv = _valuation(hom, ell)
        ov = _valuation(len(table), ell)
        checks.append(PrimeValuation(ell, cv, ov, cv >= ov))
    return DivisibilityReport(
        group_name=table.name,
        group_order=len(table),
        k=k,
        primes=prime_set,
        hom_count=hom,
        checks=tuple(checks),
        passed=all(c.ok for c in checks),
    )


# ---------------------------------------------------------------------------
# subgroup sweep for the coset check


def enumerate_subgroups(table: FiniteGroupTable) -> tuple[frozenset[int], ...]:
    """Every subgroup, as index sets: cyclic subgroups closed under joins."""
    if len(table) > SWEEP_GROUP_BUDGET:
        raise BudgetExceeded(f"subgroup sweep on order {len(table)} exceeds {SWEEP_GROUP_BUDGET}")
    cyclics = sorted(
        {table.subgroup_closure([i]) for i in range(len(table))},
        key=lambda s: (len(s), sorted(s)),
    )
    known = set(cyclics)
    queue = list(cyclics)
    while queue:
        current = queue.pop(0)
        for cyc in cyclics:
            if cyc <= current:
                continue
            joined = table.subgroup_closure(current | cyc)
            if joined not in known:
                known.add(joined)
                queue.append(joined)
    return tuple(sorted(known, key=lambda s: (len(s), sorted(s))))


@dataclass(frozen=True)
class CosetLemmaCheck:
    subgroup_order: int
    prime: int
    coset_rep: int
    count: int
    required_divisor: int
    ok: bool

    def to_json(self) -> dict:
        return {
            "subgroupOrder": self.subgroup_order,
            "prime": self.prime,
            "cosetRep": self.coset_rep,
            "count": self.count,
            "requiredDivisor": self.required_divisor,
            "ok": self.ok,
        }


def coset_lemma_sweep(table: FiniteGroupTable) -> tuple[CosetLemmaCheck, ...]:
    """Run the coset count over every (subgroup, normalizing p-power element, p).

    Covers each subgroup H of the group, each prime p dividing |G|, and each
    element x of the normalizer of H whose order is a power of p.
    """
    results = []
    orders = table.orders
    for subgroup in enumerate_subgroups(table):
        members = sorted(subgroup)
        normalizer = [
            x
            for x in range(len(table))
            if all(
                table.compose_idx(table.compose_idx(x, h), table.inverses[x]) in subgroup
                for h in members
            )
        ]
        for p in _prime_factors(len(table)):
            required = p ** _valuation(len(subgroup), p)
            for x in normalizer:
                if not _is_prime_power_or_one(orders[x], p):
                    continue
                count = sum(
                    1
                    for h in members
                    if _is_prime_power_or_one(orders[table.compose_idx(h, x)], p)
                )
                results.append(
                    CosetLemmaCheck(
                        subgroup_order=len(subgroup),
                        prime=p,
                        coset_rep=x,
                        count=count,
                        required_divisor=required,
                        ok=count % required == 0,
                    )
                )
    return tuple(results)


# ---------------------------------------------------------------------------
# corpus


def parse_corpus(text: str) -> tuple[FiniteGroupTable, ...]:
    """Corpus lines: ``name domain gens`` with generators ';'-separated.

    Example: ``S3 3 (1 2); (1 2 3)``.  Blank lines and ``#`` comments skipped.
    """
    groups = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            name, domain_text, rest = line.split(None, 2)
            domain = int(domain_text)
            gens = [parse_cycles(g, domain) for g in rest.split(";")]
        except (ValueError, IndexError) as exc:
            raise ValueError(f"corpus line {line_no}: {exc}") from exc
        groups.append(group_generate(gens, name=name))
    return tuple(groups)


def load_corpus(path: Optional[str] = None) -> tuple[FiniteGroupTable, ...]:
    """Groups from a corpus file, or the packaged default corpus."""
    if path is None:
        text = resources.files("monodromy.data").joinpath("corpus.txt").read_text(encoding="utf-8")
    else:
        with open(path, "r", encoding="utf-8") as handle:
            text = handle.read()
    return parse_corpus(text)
