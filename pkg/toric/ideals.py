"""Monomials, binomials and monomial ideals of S = k[x_1, ..., x_n].

Monomials are exponent vectors (tuples of nonnegative ints). Variable
indices are 0-based everywhere in the library and 1-based only when printed.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import FrozenSet, Iterable, Iterator, Optional, Sequence, Tuple

from toric.errors import CapExceeded, NotAChamber, NotProper
from toric.geometry2d import Chamber, chamber_complex, pairs_containing
from toric.intlinalg import GaleLattice, IntMat, IntVec, hnf, nonzero_rows

logger = logging.getLogger("ideals")

Monomial = IntVec
IndexSet = FrozenSet[int]


def divides(a: Sequence[int], b: Sequence[int]) -> bool:
    return all(x <= y for x, y in zip(a, b))


def mono_lcm(a: Sequence[int], b: Sequence[int]) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_mul(a: Sequence[int], b: Sequence[int]) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def mono_div(a: Sequence[int], b: Sequence[int]) -> Monomial:
    return tuple(x - y for x, y in zip(a, b))


def support(u: Sequence[int]) -> IndexSet:
    return frozenset(i for i, e in enumerate(u) if e != 0)


def degree(u: Sequence[int]) -> int:
    return sum(u)


def format_monomial(u: Sequence[int], names: Optional[Sequence[str]] = None) -> str:
    names = names or [f"x{i + 1}" for i in range(len(u))]
    factors = [names[i] if e == 1 else f"{names[i]}^{e}" for i, e in enumerate(u) if e]
    return "*".join(factors) if factors else "1"


@dataclass(frozen=True)
class Binomial:
    """x^{l+} - x^{l-} for a lattice vector l."""

    l: IntVec

    @classmethod
    def from_terms(cls, plus: Sequence[int], minus: Sequence[int]) -> "Binomial":
        return cls(tuple(a - b for a, b in zip(plus, minus)))

    @property
    def plus(self) -> Monomial:
        return tuple(max(x, 0) for x in self.l)

    @property
    def minus(self) -> Monomial:
        return tuple(max(-x, 0) for x in self.l)

    def __neg__(self) -> "Binomial":
        return Binomial(tuple(-x for x in self.l))

    def __str__(self) -> str:
        return f"{format_monomial(self.plus)} - {format_monomial(self.minus)}"


def minimalize(gens: Iterable[Sequence[int]]) -> FrozenSet[Monomial]:
    # sorting by degree lets a single pass discard multiples
    kept = []
    for g in sorted({tuple(g) for g in gens}, key=lambda g: (sum(g), g)):
        if not any(divides(k, g) for k in kept):
            kept.append(g)
    return frozenset(kept)


@dataclass(frozen=True)
class MonomialIdeal:
    n: int
    gens: FrozenSet[Monomial]

    def __post_init__(self):
        object.__setattr__(self, "gens", minimalize(self.gens))

    @classmethod
    def of(cls, gens: Iterable[Sequence[int]], n: int) -> "MonomialIdeal":
        return cls(n, frozenset(tuple(int(e) for e in g) for g in gens))

    @classmethod
    def unit(cls, n: int) -> "MonomialIdeal":
        return cls(n, frozenset({(0,) * n}))

    @classmethod
    def zero(cls, n: int) -> "MonomialIdeal":
        return cls(n, frozenset())

    def __contains__(self, m: Sequence[int]) -> bool:
        return any(divides(g, m) for g in self.gens)

    def __iter__(self) -> Iterator[Monomial]:
        return iter(self.sorted_gens)

    def __len__(self) -> int:
        return len(self.gens)

    @property
    def sorted_gens(self) -> Tuple[Monomial, ...]:
        return tuple(sorted(self.gens))

    @property
    def is_unit(self) -> bool:
        return (0,) * self.n in self.gens

    @property
    def is_zero(self) -> bool:
        return not self.gens

    def issubset(self, other: "MonomialIdeal") -> bool:
        return all(g in other for g in self.gens)

    def __str__(self) -> str:
        if self.is_zero:
            return "<0>"
        return "<" + ", ".join(format_monomial(g) for g in self.sorted_gens) + ">"


@lru_cache(maxsize=None)
def _degree_basis(rows: IntMat) -> IntMat:
    columns = tuple(tuple(r[k] for r in rows) for k in range(2))
    return nonzero_rows(hnf(columns)[0])


@dataclass(frozen=True)
class DegreeClass:
    """The degree of a monomial in N^n / L, by its reduced representative."""

    canonical: IntVec

    @classmethod
    def of(cls, u: Sequence[int], L: GaleLattice) -> "DegreeClass":
        v = list(u)
        for h in _degree_basis(L.rows):
            p = next(k for k, x in enumerate(h) if x)
            q = v[p] // h[p]
            if q:
                v = [a - q * b for a, b in zip(v, h)]
        return cls(tuple(v))


def _minimal_covers(supports: Sequence[IndexSet]) -> FrozenSet[IndexSet]:
    @lru_cache(maxsize=None)
    def covers(remaining: Tuple[IndexSet, ...]) -> FrozenSet[IndexSet]:
        if not remaining:
            return frozenset({frozenset()})
        first = remaining[0]
        out = set()
        for i in sorted(first):
            rest = tuple(s for s in remaining[1:] if i not in s)
            out.update(c | {i} for c in covers(rest))
        return frozenset(out)

    found = covers(tuple(sorted(set(supports), key=lambda s: (len(s), sorted(s)))))
    return frozenset(c for c in found if not any(d < c for d in found))


def minimal_primes(I: MonomialIdeal) -> FrozenSet[IndexSet]:
    """Delta(I): the index sets sigma such that P_sigma = <x_j : j not in sigma>
    is a minimal prime of I."""
    if I.is_unit:
        raise NotProper(f"{I} is the unit ideal")
    everything = frozenset(range(I.n))
    covers = _minimal_covers([support(g) for g in I.gens])
    return frozenset(everything - c for c in covers)


def radical(I: MonomialIdeal) -> MonomialIdeal:
    return MonomialIdeal.of((tuple(min(e, 1) for e in g) for g in I.gens), I.n)


def complement(sigma: Iterable[int], n: int) -> Tuple[int, ...]:
    sigma = set(sigma)
    return tuple(i for i in range(n) if i not in sigma)


def localize(I: MonomialIdeal, sigma: Iterable[int]) -> MonomialIdeal:
    """pi_sigma(I): set x_j = 1 for j in sigma; the result lives in the
    variables of the complement, in increasing order."""
    keep = complement(sigma, I.n)
    return MonomialIdeal.of((tuple(g[i] for i in keep) for g in I.gens), len(keep))


def extend(J: MonomialIdeal, variables: Sequence[int], n: int) -> MonomialIdeal:
    """The extension to S of an ideal in the given variables of S."""
    gens = []
    for g in J.gens:
        u = [0] * n
        for k, i in enumerate(variables):
            u[i] = g[k]
        gens.append(tuple(u))
    return MonomialIdeal.of(gens, n)


def delta_chamber(I: MonomialIdeal, L: GaleLattice) -> Chamber:
    """The chamber whose containing simplices are exactly the complements of
    the minimal primes of I."""
    complements = frozenset(
        frozenset(complement(sigma, L.n)) for sigma in minimal_primes(I)
    )
    if any(len(c) != 2 for c in complements):
        raise NotAChamber(f"{I} has a minimal prime of the wrong dimension")
    for chamber in chamber_complex(L).chambers:
        if pairs_containing(L, chamber.cone) == complements:
            return chamber
    raise NotAChamber(f"minimal primes of {I} do not match any chamber")


def default_search_cap(u: Sequence[int], L: GaleLattice) -> int:
    return 10 * (1 + max(u, default=0) + max(abs(x) for r in L.rows for x in r))


def _shell(r: int) -> Iterator[Tuple[int, int]]:
    if r == 0:
        yield (0, 0)
        return
    for a in range(-r, r + 1):
        yield (a, r)
        yield (a, -r)
    for b in range(-r + 1, r):
        yield (r, b)
        yield (-r, b)


def class_members(u: Sequence[int], L: GaleLattice, cap: Optional[int] = None) -> Iterator[Monomial]:
    """The monomials x^(u - Bz) >= 0 of the degree class of x^u, over lattice
    coordinates z with max(|z_1|, |z_2|) <= cap."""
    u = tuple(u)
    cap = default_search_cap(u, L) if cap is None else cap
    for a in range(-cap, cap + 1):
        lo, hi = -cap, cap
        for (p, q), ui in zip(L.rows, u):
            rest = ui - p * a
            if q > 0:
                hi = min(hi, rest // q)
            elif q < 0:
                lo = max(lo, -(rest // -q))
            elif rest < 0:
                hi = lo - 1
                break
        for b in range(lo, hi + 1):
            yield tuple(x - y for x, y in zip(u, L.vector((a, b))))


def standard_monomial(I: MonomialIdeal, u: Sequence[int], L: GaleLattice,
                      cap: Optional[int] = None) -> Monomial:
    """The monomial of the same degree as x^u that lies outside I."""
    u = tuple(u)
    if u not in I:
        return u
    cap = default_search_cap(u, L) if cap is None else cap
    for r in range(cap + 1):
        for z in _shell(r):
            Bz = L.vector(z)
            v = tuple(a - b for a, b in zip(u, Bz))
            if min(v) >= 0 and v not in I:
                return v
    raise CapExceeded(f"no standard monomial for {u} modulo {I} within radius {cap}")
