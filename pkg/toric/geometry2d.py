"""Rational cones in the plane, the chamber complex of a Gale diagram and
Hilbert bases of two-dimensional cones.

Angular order is the counterclockwise sweep by angle measured from the
positive x-axis (through the positive y-axis first). A pointed or halfplane
support is swept from its first boundary ray; the full plane is swept from
the smallest angle. Cones are stored as (start, end) in sweep order.
"""

import itertools
import logging
from dataclasses import dataclass, field
from functools import cmp_to_key
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

from toric.errors import DegenerateGale, RankDeficient
from toric.intlinalg import GaleLattice, IntVec, cross, dot, primitive

logger = logging.getLogger("geometry2d")

POINTED = "pointed"
HALFPLANE = "halfplane"
PLANE = "plane"


@dataclass(frozen=True)
class Ray2:
    dir: IntVec
    sources: FrozenSet[int] = field(default=frozenset(), compare=False)

    def __post_init__(self):
        object.__setattr__(self, "dir", primitive(self.dir))


@dataclass(frozen=True)
class Cone2:
    start: Ray2
    end: Ray2

    def __post_init__(self):
        if cross(self.start.dir, self.end.dir) <= 0:
            raise ValueError(f"cone {self.start.dir}, {self.end.dir} is not pointed in sweep order")

    @property
    def rays(self) -> Tuple[IntVec, IntVec]:
        return self.start.dir, self.end.dir

    def contains(self, x: Sequence[int]) -> bool:
        return cross(self.start.dir, x) >= 0 and cross(x, self.end.dir) >= 0

    def contains_interior(self, x: Sequence[int]) -> bool:
        return cross(self.start.dir, x) > 0 and cross(x, self.end.dir) > 0

    def contains_cone(self, other: "Cone2") -> bool:
        return self.contains(other.start.dir) and self.contains(other.end.dir)

    def interior_point(self) -> IntVec:
        s, e = self.rays
        return (s[0] + e[0], s[1] + e[1])


@dataclass(frozen=True)
class Chamber:
    cone: Cone2
    pair: Tuple[int, int]  # (start index, end index), 0-based rows of B


@dataclass(frozen=True)
class ChamberComplex:
    support: str
    rays: Tuple[Ray2, ...]
    chambers: Tuple[Chamber, ...]

    def chamber_index(self, cone: Cone2) -> int:
        for k, chamber in enumerate(self.chambers):
            if chamber.cone.contains_cone(cone):
                return k
        raise ValueError(f"cone {cone.rays} lies in no chamber")

    def in_support(self, x: Sequence[int]) -> bool:
        if self.support == PLANE:
            return True
        return any(ch.cone.contains(x) for ch in self.chambers)

    def is_boundary(self, x: Sequence[int]) -> bool:
        """True if x spans a boundary ray of a pointed or halfplane support."""
        if self.support == PLANE:
            return False
        d = primitive(x)
        return d in (self.rays[0].dir, self.rays[-1].dir)


def _half(v: Sequence[int]) -> int:
    return 0 if v[1] > 0 or (v[1] == 0 and v[0] > 0) else 1


def _compare_angle(p: Sequence[int], q: Sequence[int]) -> int:
    hp, hq = _half(p), _half(q)
    if hp != hq:
        return hp - hq
    c = cross(p, q)
    return -1 if c > 0 else (1 if c < 0 else 0)


angle_key = cmp_to_key(_compare_angle)


def sort_angular(vectors: Sequence[Sequence[int]]) -> List[IntVec]:
    return sorted((tuple(v) for v in vectors), key=angle_key)


def _gap_at_least_pi(p: Sequence[int], q: Sequence[int]) -> bool:
    c = cross(p, q)
    return c < 0 or (c == 0 and dot(p, q) < 0)


def sweep(directions: Sequence[Sequence[int]]) -> Tuple[str, List[IntVec]]:
    """Distinct primitive directions in sweep order, and the support type."""
    ordered = sort_angular({primitive(d) for d in directions})
    if len(ordered) < 2:
        raise DegenerateGale(f"only {len(ordered)} distinct ray(s)")
    m = len(ordered)
    for k in range(m):
        p, q = ordered[k], ordered[(k + 1) % m]
        if _gap_at_least_pi(p, q):
            support = HALFPLANE if cross(p, q) == 0 else POINTED
            return support, ordered[k + 1:] + ordered[:k + 1]
    return PLANE, ordered


def chamber_complex(L: GaleLattice) -> ChamberComplex:
    sources: Dict[IntVec, List[int]] = {}
    for i, b in enumerate(L.rows):
        sources.setdefault(primitive(b), []).append(i)
    support, ordered = sweep(list(sources))
    rays = tuple(Ray2(d, frozenset(sources[d])) for d in ordered)

    pairs = list(zip(rays, rays[1:]))
    if support == PLANE:
        pairs.append((rays[-1], rays[0]))
    chambers = tuple(
        Chamber(Cone2(s, e), (min(s.sources), min(e.sources))) for s, e in pairs
    )
    logger.debug(f"chamber complex: {support} support, {len(chambers)} chambers")
    return ChamberComplex(support, rays, chambers)


def _lattice_coordinates(basis: Sequence[Sequence[int]]):
    """Maps between Z^2 coordinates and coordinates w.r.t. a lattice basis."""
    (u0, u1), (v0, v1) = basis
    det = u0 * v1 - v0 * u1
    if det == 0:
        raise RankDeficient(f"lattice basis {basis} is singular")

    def to_coords(x: Sequence[int]) -> IntVec:
        # det * M^{-1} x, direction-preserving up to sign(det)
        a = v1 * x[0] - v0 * x[1]
        b = -u1 * x[0] + u0 * x[1]
        return (a, b) if det > 0 else (-a, -b)

    def from_coords(c: Sequence[int]) -> IntVec:
        return (c[0] * u0 + c[1] * v0, c[0] * u1 + c[1] * v1)

    return to_coords, from_coords


STANDARD_LATTICE = ((1, 0), (0, 1))


def hilbert_basis(K: Cone2, lattice: Sequence[Sequence[int]] = STANDARD_LATTICE) -> Tuple[IntVec, ...]:
    """Minimal generators of K intersected with the lattice, in sweep order.

    Enumerates the lattice points of the closed parallelogram spanned by the
    primitive lattice generators of the two rays and keeps the irreducible
    ones.
    """
    to_coords, from_coords = _lattice_coordinates(lattice)
    p = primitive(to_coords(K.start.dir))
    q = primitive(to_coords(K.end.dir))
    D = cross(p, q)
    if D < 0:
        # the coordinate change reverses orientation
        p, q, D = q, p, -D

    xs = [0, p[0], q[0], p[0] + q[0]]
    ys = [0, p[1], q[1], p[1] + q[1]]
    points = [
        (x, y)
        for x in range(min(xs), max(xs) + 1)
        for y in range(min(ys), max(ys) + 1)
        if (x, y) != (0, 0) and 0 <= cross((x, y), q) <= D and 0 <= cross(p, (x, y)) <= D
    ]

    def in_cone(d):
        return cross(d, q) >= 0 and cross(p, d) >= 0

    basis = [
        x for x in points
        if not any(
            y != x and in_cone((x[0] - y[0], x[1] - y[1])) for y in points
        )
    ]
    # inside a pointed cone, a precedes b in sweep order iff cross(a, b) > 0
    out = [from_coords(x) for x in basis]
    out.sort(key=cmp_to_key(lambda a, b: -cross(a, b)))
    return tuple(out)


def is_unimodular(K: Cone2, lattice: Sequence[Sequence[int]] = STANDARD_LATTICE) -> bool:
    to_coords, _ = _lattice_coordinates(lattice)
    p = primitive(to_coords(K.start.dir))
    q = primitive(to_coords(K.end.dir))
    return abs(cross(p, q)) == 1


def hilbert_refinement(L: GaleLattice, lattice: Sequence[Sequence[int]] = STANDARD_LATTICE) -> Tuple[IntVec, ...]:
    """Rays of the fan subdividing every chamber by its Hilbert basis."""
    cc = chamber_complex(L)
    rays = {r.dir for r in cc.rays}
    for chamber in cc.chambers:
        rays.update(primitive(h) for h in hilbert_basis(chamber.cone, lattice))
    _, ordered = sweep(list(rays))
    return tuple(ordered)


def creeping_monotone(K: Cone2, basis: Sequence[Sequence[int]]) -> bool:
    """Along a Hilbert basis in sweep order, |b_start . g^perp| strictly
    increases and |b_end . g^perp| strictly decreases."""
    s, e = K.rays
    from_start = [abs(cross(s, g)) for g in basis]
    to_end = [abs(cross(e, g)) for g in basis]
    return (all(a < b for a, b in zip(from_start, from_start[1:]))
            and all(a > b for a, b in zip(to_end, to_end[1:])))


def simplex_pairs(L: GaleLattice) -> List[Tuple[int, int]]:
    """Index pairs (i, j) with b_i, b_j linearly independent, ordered so that
    cross(b_i, b_j) > 0."""
    pairs = []
    for i, j in itertools.combinations(range(L.n), 2):
        c = cross(L.rows[i], L.rows[j])
        if c > 0:
            pairs.append((i, j))
        elif c < 0:
            pairs.append((j, i))
    return pairs


def simplex_cone(L: GaleLattice, pair: Tuple[int, int]) -> Cone2:
    i, j = pair
    return Cone2(Ray2(L.rows[i]), Ray2(L.rows[j]))


def pairs_containing(L: GaleLattice, cone: Cone2) -> FrozenSet[FrozenSet[int]]:
    """All 2-simplices pos(b_i, b_j) containing the given cone."""
    return frozenset(
        frozenset(pair) for pair in simplex_pairs(L)
        if simplex_cone(L, pair).contains_cone(cone)
    )


def triangulation_for_weight(L: GaleLattice, w: Sequence[int]) -> FrozenSet[FrozenSet[int]]:
    """Maximal simplices sigma of the regular triangulation for the cost
    vector w: those whose complement pair spans a cone containing w B."""
    w_hat = tuple(sum(w[i] * L.rows[i][k] for i in range(L.n)) for k in range(2))
    everything = frozenset(range(L.n))
    return frozenset(
        everything - frozenset(pair) for pair in simplex_pairs(L)
        if simplex_cone(L, pair).contains(w_hat)
    )


def weight_in_support(L: GaleLattice, w_hat: Sequence[int]) -> bool:
    if L.cyclic or tuple(w_hat) == (0, 0):
        return True
    return any(simplex_cone(L, pair).contains(w_hat) for pair in simplex_pairs(L))


def lift_weight(L: GaleLattice, w_hat: Sequence[int]) -> Optional[IntVec]:
    """A nonnegative integer w with w B = c * w_hat for some c > 0, supported
    on (at most) two coordinates; None if w_hat lies outside pos(B)."""
    if tuple(w_hat) == (0, 0):
        return (0,) * L.n
    for i, j in simplex_pairs(L):
        bi, bj = L.rows[i], L.rows[j]
        det = cross(bi, bj)
        lam, mu = cross(w_hat, bj), cross(bi, w_hat)
        if lam >= 0 and mu >= 0:
            w = [0] * L.n
            w[i], w[j] = lam, mu
            logger.debug(f"lifted {tuple(w_hat)} to {tuple(w)} (scale {det})")
            return tuple(w)
    return None
