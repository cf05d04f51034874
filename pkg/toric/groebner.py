"""Buchberger's algorithm for lattice ideals, initial ideals and the
two-dimensional Groebner fan.

Every polynomial handled here is a binomial x^a - x^b with coefficients
+-1, stored as the marked pair (a, b) with x^a the larger term. Reduction of
a binomial by binomials rewrites each term separately, so the normal form of
x^p - x^q is x^nf(p) - x^nf(q).
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import FrozenSet, List, Optional, Sequence, Tuple, Union

from toric.errors import WeightOutsideSupport
from toric.geometry2d import (PLANE, Cone2, Ray2, chamber_complex, lift_weight, sweep,
                              weight_in_support)
from toric.graver import GraverBasis
from toric.ideals import (Binomial, Monomial, MonomialIdeal, divides, format_monomial,
                          mono_div, mono_lcm, mono_mul)
from toric.intlinalg import GaleLattice, IntVec, clockwise_normal, dot, solve_in_lattice

logger = logging.getLogger("groebner")

Marked = Tuple[Monomial, Monomial]


@dataclass(frozen=True)
class TermOrder:
    """The weight order of w, ties broken by graded lex (x1 > x2 > ...)."""

    w: IntVec

    def __post_init__(self):
        if any(x < 0 for x in self.w):
            raise ValueError(f"weight {self.w} has negative entries")

    def key(self, u: Sequence[int]) -> Tuple:
        return (dot(self.w, u), sum(u), tuple(u))

    def mark(self, a: Monomial, b: Monomial) -> Marked:
        return (a, b) if self.key(a) > self.key(b) else (b, a)

    def ties(self, a: Sequence[int], b: Sequence[int]) -> bool:
        return dot(self.w, a) == dot(self.w, b)


def grlex_key(u: Sequence[int]) -> Tuple:
    return (sum(u), tuple(u))


@dataclass(frozen=True)
class MarkedBasis:
    order: TermOrder
    elements: Tuple[Marked, ...]
    reduced: bool = True

    @property
    def leads(self) -> Tuple[Monomial, ...]:
        return tuple(a for a, _ in self.elements)

    def vectors(self) -> List[IntVec]:
        return [tuple(x - y for x, y in zip(a, b)) for a, b in self.elements]

    def initial_ideal(self) -> MonomialIdeal:
        n = len(self.order.w)
        return MonomialIdeal.of(self.leads, n)

    def __str__(self) -> str:
        return "{" + ", ".join(f"{format_monomial(a)} - {format_monomial(b)}" for a, b in self.elements) + "}"


def reduce_monomial(p: Monomial, G: Sequence[Marked]) -> Monomial:
    """Rewrite x^p by the marked binomials until no lead divides it."""
    changed = True
    while changed:
        changed = False
        for a, b in G:
            if divides(a, p):
                p = mono_mul(mono_div(p, a), b)
                changed = True
                break
    return p


def reduce(f: Marked, G: Sequence[Marked], order: TermOrder) -> Optional[Marked]:
    """Normal form of a binomial; None when it reduces to zero."""
    p, q = reduce_monomial(f[0], G), reduce_monomial(f[1], G)
    if p == q:
        return None
    return order.mark(p, q)


def spoly(f: Marked, g: Marked) -> Tuple[Monomial, Monomial]:
    m = mono_lcm(f[0], g[0])
    return mono_mul(mono_div(m, g[0]), g[1]), mono_mul(mono_div(m, f[0]), f[1])


def _coprime(a: Sequence[int], b: Sequence[int]) -> bool:
    return all(x == 0 or y == 0 for x, y in zip(a, b))


def minimalize(G: Sequence[Marked], order: TermOrder) -> List[Marked]:
    Gmin: List[Marked] = []
    for f in sorted(G, key=lambda h: order.key(h[0])):
        if all(not divides(g[0], f[0]) for g in Gmin):
            Gmin.append(f)
    return Gmin


def interreduce(G: Sequence[Marked]) -> List[Marked]:
    Gred = []
    for i, (a, b) in enumerate(G):
        others = list(G[:i]) + list(G[i + 1:])
        Gred.append((a, reduce_monomial(b, others)))
    return Gred


def buchberger(gens: Sequence[Binomial], order: TermOrder) -> MarkedBasis:
    """Reduced marked Groebner basis of the binomial ideal <gens>."""
    G: List[Marked] = []
    for g in gens:
        if any(g.l):
            G.append(order.mark(g.plus, g.minus))
    P = {(i, j) for i in range(len(G)) for j in range(i + 1, len(G))}

    while P:
        # normal selection: the pair with the smallest lcm
        i, j = min(P, key=lambda p: (order.key(mono_lcm(G[p[0]][0], G[p[1]][0])), p))
        P.remove((i, j))
        if _coprime(G[i][0], G[j][0]):
            continue
        r = reduce(spoly(G[i], G[j]), G, order)
        if r is not None:
            P |= {(k, len(G)) for k in range(len(G))}
            G.append(r)

    reduced = interreduce(minimalize(G, order))
    reduced.sort(key=lambda f: (grlex_key(f[0]), f[1]))
    logger.debug(f"Buchberger for w={order.w}: {len(reduced)} elements")
    return MarkedBasis(order, tuple(reduced))


@dataclass(frozen=True)
class WallIdeal:
    """An ideal with one binomial generator and otherwise monomial generators.

    Canonical form: `monomials` are the minimal generators of the grlex
    initial ideal other than the binomial's lead, and the binomial is marked
    with its grlex-larger term first.
    """

    n: int
    monomials: FrozenSet[Monomial]
    binomial: Marked

    @classmethod
    def from_flip(cls, I: MonomialIdeal, J: MonomialIdeal, u: Monomial, v: Monomial) -> "WallIdeal":
        """The wall ideal between I (containing x^u) and J (containing x^v)."""
        if grlex_key(u) > grlex_key(v):
            return cls(I.n, frozenset(I.gens - {u}), (u, v))
        return cls(J.n, frozenset(J.gens - {v}), (v, u))

    @property
    def sorted_monomials(self) -> Tuple[Monomial, ...]:
        return tuple(sorted(self.monomials))

    def __str__(self) -> str:
        a, b = self.binomial
        parts = [format_monomial(m) for m in self.sorted_monomials]
        parts.append(f"{format_monomial(a)} - {format_monomial(b)}")
        return "<" + ", ".join(parts) + ">"


InitialIdeal = Union[MonomialIdeal, WallIdeal]


def gale_weight(L: GaleLattice, w: Sequence[int]) -> IntVec:
    """w B, the image of a cost vector in the Gale plane."""
    return tuple(sum(w[i] * L.rows[i][k] for i in range(L.n)) for k in range(2))


def reduced_basis_for_weight(L: GaleLattice, Gr: GraverBasis, w_hat: Sequence[int]) -> MarkedBasis:
    w = lift_weight(L, w_hat)
    if w is None:
        raise WeightOutsideSupport(f"weight {tuple(w_hat)} lies outside pos(B)")
    return buchberger(list(Gr), TermOrder(w))


def initial_ideal(L: GaleLattice, Gr: GraverBasis, w: Sequence[int]) -> InitialIdeal:
    """in_w(I_L). Only w B matters; it is lifted to a nonnegative weight
    before running Buchberger."""
    w_hat = gale_weight(L, w)
    if w_hat == (0, 0) or not weight_in_support(L, w_hat):
        raise WeightOutsideSupport(f"w B = {w_hat} does not give an L-graded initial ideal")
    basis = reduced_basis_for_weight(L, Gr, w_hat)
    tied = [(a, b) for a, b in basis.elements if basis.order.ties(a, b)]
    leads = [a for a, b in basis.elements if not basis.order.ties(a, b)]
    if not tied:
        return MonomialIdeal.of(leads, L.n)
    if len(tied) > 1:
        # a nonzero w_hat lies on at most one line through the origin
        raise AssertionError(f"{len(tied)} binomials tie under w B = {w_hat}")
    return WallIdeal(L.n, frozenset(leads), tied[0])


def wall_ray(L: GaleLattice, l: Sequence[int]) -> IntVec:
    """The ray g with clockwise normal phi^{-1}(l)."""
    # clockwise_normal(g) = z, so g = -clockwise_normal(z)
    a, b = clockwise_normal(solve_in_lattice(L, l))
    return (-a, -b)


@dataclass(frozen=True)
class FanCone:
    rays: Tuple[int, int]
    ideal: MonomialIdeal


@dataclass(frozen=True)
class GroebnerFan2:
    support: str
    rays: Tuple[IntVec, ...]
    cones: Tuple[FanCone, ...]
    merged: int = field(default=0, compare=False)

    def cone(self, k: int) -> Cone2:
        i, j = self.cones[k].rays
        return Cone2(Ray2(self.rays[i]), Ray2(self.rays[j]))

    @property
    def ideals(self) -> List[MonomialIdeal]:
        return [c.ideal for c in self.cones]

    def index_of(self, I: MonomialIdeal) -> int:
        for k, c in enumerate(self.cones):
            if c.ideal == I:
                return k
        raise KeyError(str(I))

    def neighbours(self, k: int) -> List[int]:
        m = len(self.cones)
        out = []
        if k > 0:
            out.append(k - 1)
        elif self.support == PLANE and m > 1:
            out.append(m - 1)
        if k < m - 1:
            out.append(k + 1)
        elif self.support == PLANE and m > 1:
            out.append(0)
        return sorted(set(out))


def candidate_rays(L: GaleLattice, Gr: GraverBasis) -> List[IntVec]:
    """Chamber rays and the rays in the support normal to a Graver vector,
    in sweep order starting at the first chamber ray."""
    cc = chamber_complex(L)
    rays = {r.dir for r in cc.rays}
    for b in Gr:
        g = wall_ray(L, b.l)
        for d in (g, (-g[0], -g[1])):
            if cc.in_support(d):
                rays.add(d)
    _, ordered = sweep(list(rays))
    first = ordered.index(cc.rays[0].dir)
    return ordered[first:] + ordered[:first]


def _sector_ideal(L: GaleLattice, Gr: GraverBasis, s: IntVec, e: IntVec) -> MonomialIdeal:
    for k in range(1, 6):
        w_hat = (k * s[0] + e[0], k * s[1] + e[1])
        result = initial_ideal(L, Gr, lift_weight(L, w_hat))
        if isinstance(result, MonomialIdeal):
            return result
        logger.warning(f"sector weight {w_hat} lies on a wall, moving inward")
    raise AssertionError(f"no generic weight found in sector {s}, {e}")


def groebner_fan(L: GaleLattice, Gr: GraverBasis, jobs: int = 1) -> GroebnerFan2:
    cc = chamber_complex(L)
    rays = candidate_rays(L, Gr)
    sectors = list(zip(rays, rays[1:]))
    if cc.support == PLANE:
        sectors.append((rays[-1], rays[0]))

    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            ideals = list(pool.map(lambda se: _sector_ideal(L, Gr, *se), sectors))
    else:
        ideals = [_sector_ideal(L, Gr, s, e) for s, e in sectors]

    # merge neighbouring sectors that carry the same ideal
    cones: List[Tuple[IntVec, IntVec, MonomialIdeal]] = []
    merged = 0
    for (s, e), I in zip(sectors, ideals):
        if cones and cones[-1][2] == I:
            cones[-1] = (cones[-1][0], e, I)
            merged += 1
        else:
            cones.append((s, e, I))

    kept_rays = []
    for s, e, _ in cones:
        if s not in kept_rays:
            kept_rays.append(s)
        if e not in kept_rays:
            kept_rays.append(e)
    fan = GroebnerFan2(
        support=cc.support,
        rays=tuple(kept_rays),
        cones=tuple(FanCone((kept_rays.index(s), kept_rays.index(e)), I) for s, e, I in cones),
        merged=merged,
    )
    logger.info(f"Groebner fan: {len(fan.cones)} cones from {len(sectors)} sectors, {merged} merge(s)")
    return fan
