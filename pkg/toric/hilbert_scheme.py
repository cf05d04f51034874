"""Monomial L-graded ideals and the flips between them.

Every monomial L-graded ideal I is an initial ideal of I_L. It corresponds
to a chamber pos(b_i, b_j). Its special simplex sigma = [n] - {i, j} and
the localization I_sigma in the two variables x_i, x_j determine I, which
is the forced ideal of I_sigma. Flips replace one minimal generator x^u by
its standard monomial x^v and connect the ideals of neighbouring fan cones.
"""

import itertools
import logging
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

import numpy as np

from toric.errors import (FlipCountViolation, FlipTargetMismatch, InvalidPair, TooManyGraverElements,
                          WallNotCoherent, WitnessFailed)
from toric.geometry2d import Cone2, chamber_complex
from toric.graver import GraverBasis, forced_ideal, graver_basis, is_weakly_graded
from toric.groebner import GroebnerFan2, WallIdeal, groebner_fan, initial_ideal, wall_ray
from toric.ideals import (Binomial, DegreeClass, IndexSet, Monomial, MonomialIdeal, complement,
                          class_members, delta_chamber, extend, localize, standard_monomial, support)
from toric.intlinalg import GaleLattice, IntVec, cross, dot

logger = logging.getLogger("hilbert_scheme")

TRUE = "true"
FAKE = "fake"


@dataclass(frozen=True)
class Flip:
    binomial: Binomial
    kind: str
    target: Optional[MonomialIdeal] = None

    @property
    def u(self) -> Monomial:
        return self.binomial.plus

    @property
    def v(self) -> Monomial:
        return self.binomial.minus

    def __str__(self) -> str:
        return f"{self.binomial} ({self.kind})"


def special_simplex(I: MonomialIdeal, L: GaleLattice) -> Tuple[IndexSet, int, int]:
    """(sigma, i, j) for the chamber pos(b_i, b_j) of I, b_i being the
    counterclockwise-most ray."""
    chamber = delta_chamber(I, L)
    j, i = chamber.pair
    return frozenset(range(L.n)) - {i, j}, i, j


def pure_powers(J: MonomialIdeal) -> Optional[Tuple[int, ...]]:
    """Exponents a_k with x_k^{a_k} a minimal generator of J, for every k;
    None if J is not artinian."""
    out = []
    for k in range(J.n):
        powers = [g[k] for g in J.gens if support(g) == {k}]
        if not powers:
            return None
        out.append(powers[0])
    return tuple(out)


def coherence_witness(I: MonomialIdeal, L: GaleLattice, Gr: GraverBasis) -> IntVec:
    """A cost vector w with in_w(I_L) = I, supported on the chamber pair.

    With x_i^a and x_j^b the pure powers in I_sigma, take w_i = b, w_j = a.
    """
    sigma, i, j = special_simplex(I, L)
    variables = complement(sigma, L.n)
    powers = pure_powers(localize(I, sigma))
    if powers is None:
        raise WitnessFailed(f"localization of {I} at {sorted(sigma)} is not artinian")
    exps = dict(zip(variables, powers))
    a, b = exps[i], exps[j]
    w = [0] * L.n
    w[i], w[j] = b, a
    w = tuple(w)
    if initial_ideal(L, Gr, w) != I:
        raise WitnessFailed(f"w = {w} does not reproduce {I}")
    return w


def _chamber_weight(L: GaleLattice, pair: Tuple[int, int], w_hat: Sequence[int]) -> Tuple[int, int]:
    """Positive (w_s, w_e) with w_s b_s + w_e b_e a positive multiple of w_hat."""
    s, e = pair
    return cross(w_hat, L.rows[e]), cross(L.rows[s], w_hat)


def projected_initial_ideal(L: GaleLattice, pair: Tuple[int, int], w_hat: Sequence[int]) -> MonomialIdeal:
    """in_w of the lattice ideal of L projected to the two coordinates of a
    chamber pair, for a weight w_hat inside that chamber."""
    variables = tuple(sorted(pair))
    L_sigma = L.project(variables)
    ws, we = _chamber_weight(L, pair, w_hat)
    weights = {pair[0]: ws, pair[1]: we}
    w_sigma = tuple(weights[k] for k in variables)
    result = initial_ideal(L_sigma, graver_basis(L_sigma), w_sigma)
    if not isinstance(result, MonomialIdeal):
        raise WitnessFailed(f"weight {tuple(w_hat)} lies on a wall of the projected lattice")
    return result


def monomial_ideal_for_cone(fan: GroebnerFan2, k: int, L: GaleLattice, Gr: GraverBasis) -> MonomialIdeal:
    """The ideal of the k-th fan cone as the forced ideal of its special
    localization."""
    cone = fan.cone(k)
    cc = chamber_complex(L)
    chamber = cc.chambers[cc.chamber_index(cone)]
    variables = tuple(sorted(chamber.pair))
    I_sigma = projected_initial_ideal(L, chamber.pair, cone.interior_point())
    return forced_ideal(extend(I_sigma, variables, L.n), Gr)


def enumerate_monomial_ideals(L: GaleLattice, Gr: GraverBasis, fan: Optional[GroebnerFan2] = None
                              ) -> List[Tuple[Cone2, MonomialIdeal]]:
    fan = fan or groebner_fan(L, Gr)
    out = []
    for k, fan_cone in enumerate(fan.cones):
        I = monomial_ideal_for_cone(fan, k, L, Gr)
        if I != fan_cone.ideal:
            raise WitnessFailed(f"forced ideal {I} differs from initial ideal {fan_cone.ideal} on cone {k}")
        out.append((fan.cone(k), I))
    if len({I for _, I in out}) != len(out):
        raise WitnessFailed("two fan cones carry the same ideal")
    return out


def _oriented_graver(Gr: GraverBasis) -> List[Tuple[Monomial, Monomial]]:
    return [pair for b in Gr for pair in ((b.plus, b.minus), (b.minus, b.plus))]


def flip_target(I: MonomialIdeal, u: Monomial, v: Monomial, Gr: GraverBasis) -> MonomialIdeal:
    """Monomials of I forced by a Graver partner outside I, except x^u,
    together with x^v."""
    gens = [a for a, b in _oriented_graver(Gr) if a != u and a in I and b not in I]
    gens.append(v)
    return MonomialIdeal.of(gens, I.n)


def flips(I: MonomialIdeal, L: GaleLattice, Gr: GraverBasis, fan: Optional[GroebnerFan2] = None,
          cap: Optional[int] = None) -> List[Flip]:
    """The two flips of I, in the order of its sorted minimal generators."""
    fan = fan or groebner_fan(L, Gr)
    cc = chamber_complex(L)
    k = fan.index_of(I)
    cone = fan.cone(k)
    found = []
    for u in I.sorted_gens:
        v = standard_monomial(I, u, L, cap)
        if not any(v):
            others = [support(g) for g in I.gens if g != u]
            if all(not (support(u) & s) for s in others):
                found.append(Flip(Binomial(u), FAKE))
            continue
        g = wall_ray(L, tuple(a - b for a, b in zip(u, v)))
        neg = (-g[0], -g[1])
        if cone.start.dir in (g, neg):
            side, ray = -1, cone.start.dir
        elif cone.end.dir in (g, neg):
            side, ray = 1, cone.end.dir
        else:
            continue
        if cc.is_boundary(ray):
            continue
        target = flip_target(I, u, v, Gr)
        neighbour = fan.cones[(k + side) % len(fan.cones)].ideal
        if target != neighbour:
            raise FlipTargetMismatch(f"flip of {I} over x^{u} - x^{v} gives {target}, adjacent cone has {neighbour}")
        found.append(Flip(Binomial.from_terms(u, v), TRUE, target))
    if len(found) != 2:
        raise FlipCountViolation(f"{I} has {len(found)} flips")
    return found


def wall_coherence_witness(I: MonomialIdeal, J: MonomialIdeal, L: GaleLattice, Gr: GraverBasis,
                           fan: Optional[GroebnerFan2] = None) -> Tuple[WallIdeal, IntVec, str]:
    """The wall ideal W of two adjacent ideals and a weight w' with
    in_w'(I_L) = W. The last entry names the construction that worked:
    "composite" or "support-indicator"."""
    if I == J:
        raise InvalidPair(f"{I} cannot flip to itself")
    fan = fan or groebner_fan(L, Gr)
    flip = next((f for f in flips(I, L, Gr, fan) if f.kind == TRUE and f.target == J), None)
    if flip is None:
        raise InvalidPair(f"{I} and {J} do not differ by a flip")
    u, v = flip.u, flip.v
    W = WallIdeal.from_flip(I, J, u, v)

    w0 = coherence_witness(I, L, Gr)
    w1 = coherence_witness(J, L, Gr)
    d = tuple(a - b for a, b in zip(u, v))
    composite = tuple(dot(w0, d) * x - dot(w1, d) * y for x, y in zip(w1, w0))
    if initial_ideal(L, Gr, composite) == W:
        return W, composite, "composite"

    logger.warning(f"composite weight {composite} misses the wall of {I} and {J}")
    for alpha in sorted(I.gens - {u}):
        if standard_monomial(I, alpha, L) == standard_monomial(J, alpha, L):
            continue
        indicator = tuple(1 if e else 0 for e in alpha)
        if initial_ideal(L, Gr, indicator) == W:
            return W, indicator, "support-indicator"
    raise WallNotCoherent(f"no weight realises the wall ideal {W}")


def tangent_dimension(I: MonomialIdeal, L: GaleLattice, Gr: GraverBasis, cap: Optional[int] = None) -> int:
    """dim of the degree zero part of Hom(I, S/I).

    A homomorphism sends each minimal generator g_t to c_t x^{v_t}, v_t the
    standard monomial of g_t. Syzygies m_s g_s = m_t g_t glue c_s = c_t when
    both images survive in S/I and kill the surviving coefficient when only
    one does.
    """
    gens = list(I.sorted_gens)
    std = [standard_monomial(I, g, L, cap) for g in gens]
    parent = list(range(len(gens)))
    dead = [False] * len(gens)

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for s, t in itertools.combinations(range(len(gens)), 2):
        m = tuple(max(a, b) for a, b in zip(gens[s], gens[t]))
        image_s = tuple(mi - gi + vi for mi, gi, vi in zip(m, gens[s], std[s]))
        image_t = tuple(mi - gi + vi for mi, gi, vi in zip(m, gens[t], std[t]))
        out_s, out_t = image_s not in I, image_t not in I
        if out_s and out_t:
            parent[find(s)] = find(t)
        elif out_s:
            dead[s] = True
        elif out_t:
            dead[t] = True

    dead_roots = {find(t) for t in range(len(gens)) if dead[t]}
    return len({find(t) for t in range(len(gens))} - dead_roots)


def default_oracle_bounds(Gr: GraverBasis) -> Tuple[int, int]:
    d = max(Gr.max_degree(), 1)
    return 4 * d, d


def monomials_up_to(n: int, D: int):
    for total in range(D + 1):
        for bars in itertools.combinations(range(total + n - 1), n - 1):
            prev, exps = -1, []
            for b in bars:
                exps.append(b - prev - 1)
                prev = b
            exps.append(total + n - 2 - prev)
            yield tuple(exps)


def exhaustive_ideal_oracle(L: GaleLattice, Gr: GraverBasis, degree_bound: int, margin: int,
                            max_graver: int = 20, cap: Optional[int] = None) -> List[MonomialIdeal]:
    """Every ideal generated by one side of each Graver binomial that leaves
    exactly one standard monomial in the class of each monomial of degree
    <= degree_bound - margin. Class members come from the lattice search of
    class_members, so a standard monomial of any degree is counted."""
    if len(Gr) > max_graver:
        raise TooManyGraverElements(f"{len(Gr)} Graver elements exceed the oracle limit {max_graver}")

    representatives: Dict[DegreeClass, Monomial] = {}
    for m in monomials_up_to(L.n, degree_bound - margin):
        representatives.setdefault(DegreeClass.of(m, L), m)
    checked_classes = [
        np.array(list(class_members(u, L, cap)), dtype=np.int64).reshape(-1, L.n)
        for _, u in sorted(representatives.items(), key=lambda item: item[0].canonical)
    ]

    candidates = set()
    for choice in itertools.product((0, 1), repeat=len(Gr)):
        gens = [b.plus if side == 0 else b.minus for side, b in zip(choice, Gr)]
        candidates.add(MonomialIdeal.of(gens, L.n))

    found = []
    for I in sorted(candidates, key=lambda J: J.sorted_gens):
        if I.is_unit or not is_weakly_graded(I, Gr):
            continue
        if all(_single_standard(I, members) for members in checked_classes):
            found.append(I)
    logger.info(f"oracle: {len(found)} of {len(candidates)} candidate ideals are L-graded "
                f"on {len(checked_classes)} degree classes")
    return found


def _single_standard(I: MonomialIdeal, members: np.ndarray) -> bool:
    inside = np.zeros(len(members), dtype=bool)
    for g in I.gens:
        inside |= np.all(members >= np.asarray(g, dtype=np.int64), axis=1)
    return len(members) - int(inside.sum()) == 1


@dataclass(frozen=True)
class LocalizationFacts:
    sigma: IndexSet
    nonzero_off_sigma: bool
    weakly_graded: bool
    artinian: bool
    coherent: bool

    @property
    def holds(self) -> bool:
        return self.nonzero_off_sigma and self.weakly_graded and self.artinian and self.coherent


def localization_facts(I: MonomialIdeal, sigma: IndexSet, L: GaleLattice, Gr: GraverBasis) -> LocalizationFacts:
    """What is true of I_sigma at a minimal prime of I: every Graver vector
    is nonzero off sigma, and I_sigma is weakly graded for the projected
    lattice, artinian and an initial ideal of the projected lattice ideal."""
    variables = complement(sigma, L.n)
    nonzero = all(any(b.l[k] for k in variables) for b in Gr)
    I_sigma = localize(I, sigma)
    L_sigma = L.project(variables)
    Gr_sigma = graver_basis(L_sigma)
    coherent = I_sigma in groebner_fan(L_sigma, Gr_sigma).ideals
    return LocalizationFacts(
        sigma=sigma,
        nonzero_off_sigma=nonzero,
        weakly_graded=is_weakly_graded(I_sigma, Gr_sigma),
        artinian=pure_powers(I_sigma) is not None,
        coherent=coherent,
    )


@dataclass(frozen=True)
class FlipGraph:
    vertices: Tuple[MonomialIdeal, ...]
    edges: Tuple[Tuple[int, int, Flip], ...]
    fake: Dict[int, Tuple[Flip, ...]] = field(default_factory=dict, compare=False)
    shape: str = "path"

    def adjacency(self) -> FrozenSet[FrozenSet[int]]:
        return frozenset(frozenset((a, b)) for a, b, _ in self.edges)

    def is_connected(self) -> bool:
        if not self.vertices:
            return True
        reached, frontier = {0}, [0]
        while frontier:
            x = frontier.pop()
            for a, b, _ in self.edges:
                for y in ((b,) if a == x else (a,) if b == x else ()):
                    if y not in reached:
                        reached.add(y)
                        frontier.append(y)
        return len(reached) == len(self.vertices)


def flip_graph(L: GaleLattice, Gr: GraverBasis, fan: Optional[GroebnerFan2] = None) -> FlipGraph:
    fan = fan or groebner_fan(L, Gr)
    vertices = tuple(fan.ideals)
    edges, fake = [], {}
    for k, I in enumerate(vertices):
        for f in flips(I, L, Gr, fan):
            if f.kind == FAKE:
                fake.setdefault(k, []).append(f)
                continue
            t = vertices.index(f.target)
            if k < t:
                edges.append((k, t, f))
    shape = "cycle" if L.cyclic else "path"
    return FlipGraph(vertices, tuple(edges), {k: tuple(v) for k, v in fake.items()}, shape)
