"""Graver bases of rank two lattices.

The Graver basis is the set of conformally minimal nonzero vectors of L,
where u is conformal to v (u <= v) when u+ <= v+ and u- <= v-. Elements are
stored once per sign pair, with the sign fixed by the lattice coordinates
z = phi^{-1}(l): z lies in the closed upper halfplane, ties going to
positive x.
"""

import itertools
import logging
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, List, Sequence, Set, Tuple

from toric.errors import NotWeaklyGraded
from toric.ideals import Binomial, MonomialIdeal
from toric.intlinalg import GaleLattice, IntVec, solve_in_lattice

logger = logging.getLogger("graver")

MAX_ORACLE_RADIUS = 64


def conformal(u: Sequence[int], v: Sequence[int]) -> bool:
    """u <= v in the conformal order."""
    return all(a * b >= 0 and abs(a) <= abs(b) for a, b in zip(u, v))


def _neg(v: Sequence[int]) -> IntVec:
    return tuple(-x for x in v)


def _l1(v: Sequence[int]) -> int:
    return sum(abs(x) for x in v)


def canonical_sign(L: GaleLattice, l: Sequence[int]) -> IntVec:
    z = solve_in_lattice(L, l)
    if z is None:
        raise ValueError(f"{tuple(l)} is not a lattice vector")
    if z[1] > 0 or (z[1] == 0 and z[0] > 0):
        return tuple(l)
    return _neg(l)


@dataclass(frozen=True)
class GraverBasis:
    n: int
    elements: Tuple[Binomial, ...]

    def __iter__(self) -> Iterator[Binomial]:
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, l: Sequence[int]) -> bool:
        vectors = self.vectors()
        return tuple(l) in vectors or _neg(l) in vectors

    def vectors(self) -> Set[IntVec]:
        return {b.l for b in self.elements}

    def signed(self) -> List[IntVec]:
        """Both signs of every element."""
        return [v for b in self.elements for v in (b.l, _neg(b.l))]

    def max_degree(self) -> int:
        return max((max(sum(b.plus), sum(b.minus)) for b in self.elements), default=0)


def make_basis(L: GaleLattice, vectors: Iterable[Sequence[int]]) -> GraverBasis:
    canon = {canonical_sign(L, v) for v in vectors if any(v)}
    ordered = sorted(canon, key=lambda v: (_l1(v), v))
    return GraverBasis(L.n, tuple(Binomial(v) for v in ordered))


def minimal_elements(vectors: Iterable[Sequence[int]]) -> List[IntVec]:
    kept: List[IntVec] = []
    for v in sorted({tuple(v) for v in vectors if any(v)}, key=lambda v: (_l1(v), v)):
        if not any(conformal(k, v) for k in kept):
            kept.append(v)
    return kept


def normal_form(v: Sequence[int], G: Sequence[Sequence[int]]) -> IntVec:
    """Subtract conformal elements of G from v until none applies."""
    v = tuple(v)
    reduced = True
    while reduced and any(v):
        reduced = False
        for g in G:
            if conformal(g, v):
                v = tuple(a - b for a, b in zip(v, g))
                reduced = True
                break
    return v


def graver_basis(L: GaleLattice) -> GraverBasis:
    """Completion: seed with +-(columns of B), reduce pairwise sums and add
    every nonzero residue until all sums reduce to zero."""
    seeds = [L.vector((1, 0)), L.vector((0, 1))]
    G: List[IntVec] = []
    for s in seeds:
        G.extend([s, _neg(s)])
    queue = deque(tuple(a + b for a, b in zip(f, g)) for f, g in itertools.combinations(G, 2))

    while queue:
        s = queue.popleft()
        r = normal_form(s, G)
        if not any(r):
            continue
        for new in (r, _neg(r)):
            queue.extend(tuple(a + b for a, b in zip(new, g)) for g in G)
            G.append(new)
    basis = make_basis(L, minimal_elements(G))
    logger.info(f"Graver basis: {len(basis)} elements (completion set of {len(G)})")
    return basis


def graver_box_oracle(L: GaleLattice, M: int) -> GraverBasis:
    """Conformally minimal elements among the lattice vectors B z, z in
    [-M, M]^2."""
    candidates = [
        L.vector((a, b))
        for a in range(-M, M + 1)
        for b in range(-M, M + 1)
        if (a, b) != (0, 0)
    ]
    return make_basis(L, minimal_elements(candidates))


def closure_holds(L: GaleLattice, basis: GraverBasis) -> bool:
    """True if the basis generates L and every pairwise sum of signed
    elements reduces to zero."""
    G = basis.signed()
    seeds = [L.vector((1, 0)), L.vector((0, 1))]
    if any(any(normal_form(s, G)) for s in seeds):
        return False
    return all(not any(normal_form(tuple(a + b for a, b in zip(f, g)), G))
               for f, g in itertools.combinations(G, 2))


def stable_box_oracle(L: GaleLattice, start: int = 1, max_radius: int = MAX_ORACLE_RADIUS) -> Tuple[GraverBasis, int]:
    """Double the box radius until the result is the same for two doublings
    in a row and passes the closure test. Returns the basis and the radius."""
    M = start
    previous = graver_box_oracle(L, M)
    unchanged = 0
    while M < max_radius:
        M *= 2
        current = graver_box_oracle(L, M)
        unchanged = unchanged + 1 if current == previous else 0
        previous = current
        if unchanged >= 2 and closure_holds(L, current):
            return current, M
    logger.warning(f"box oracle did not stabilize below radius {max_radius}")
    return previous, M


def is_weakly_graded(I: MonomialIdeal, Gr: GraverBasis) -> bool:
    return all(b.plus in I or b.minus in I for b in Gr)


def forced_ideal(M: MonomialIdeal, Gr: GraverBasis) -> MonomialIdeal:
    """The ideal generated by every x^u with x^u - x^v in the Graver basis
    and x^v outside M."""
    if not is_weakly_graded(M, Gr):
        raise NotWeaklyGraded(f"{M} misses both sides of some Graver binomial")
    gens = []
    for b in Gr:
        if b.minus not in M:
            gens.append(b.plus)
        if b.plus not in M:
            gens.append(b.minus)
    return MonomialIdeal.of(gens, M.n)
