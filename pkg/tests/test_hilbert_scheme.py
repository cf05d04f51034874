import pytest

from toric.errors import InvalidPair, TooManyGraverElements
from toric.graver import graver_basis
from toric.groebner import groebner_fan, initial_ideal
from toric.hilbert_scheme import (FAKE, TRUE, coherence_witness, default_oracle_bounds, enumerate_monomial_ideals,
                                  exhaustive_ideal_oracle, flip_graph, flips, localization_facts,
                                  monomial_ideal_for_cone, monomials_up_to, projected_initial_ideal, pure_powers,
                                  special_simplex, tangent_dimension, wall_coherence_witness)
from toric.ideals import MonomialIdeal, localize, minimal_primes
from toric.intlinalg import dot


def test_special_simplex(running, running_ideals):
    assert special_simplex(running_ideals[1], running) == (frozenset({0, 3}), 2, 1)
    assert special_simplex(running_ideals[0], running) == (frozenset({2, 3}), 1, 0)
    assert localize(running_ideals[1], {0, 3}) == MonomialIdeal.of([(1, 0), (0, 2)], 2)


def test_pure_powers():
    assert pure_powers(MonomialIdeal.of([(1, 0), (0, 2)], 2)) == (1, 2)
    assert pure_powers(MonomialIdeal.of([(1, 1), (0, 2)], 2)) is None


@pytest.mark.parametrize("k,w", [(0, (1, 2, 0, 0)), (1, (0, 2, 1, 0)), (2, (0, 1, 2, 0)), (3, (0, 0, 2, 1))])
def test_coherence_witness(running, running_graver, running_ideals, k, w):
    assert coherence_witness(running_ideals[k], running, running_graver) == w
    assert initial_ideal(running, running_graver, w) == running_ideals[k]


def test_projected_initial_ideal(running):
    # inside pos(b2, b3) the localization lives in x2, x3
    assert projected_initial_ideal(running, (1, 2), (-1, 2)) == MonomialIdeal.of([(1, 0), (0, 2)], 2)


def test_enumerate_monomial_ideals(running, running_graver, running_fan, running_ideals):
    found = enumerate_monomial_ideals(running, running_graver, running_fan)
    assert [I for _, I in found] == running_ideals
    assert [K.rays for K, _ in found] == [((1, 0), (0, 1)), ((0, 1), (-1, 1)), ((-1, 1), (-2, 1)), ((-2, 1), (-1, 0))]
    for k in range(4):
        assert monomial_ideal_for_cone(running_fan, k, running, running_graver) == running_ideals[k]


def test_flip_chain(running, running_graver, running_fan, running_ideals):
    summary = []
    for I in running_ideals:
        summary.append([(f.kind, f.binomial.l, f.target) for f in flips(I, running, running_graver, running_fan)])
    I1, I2, I3, I4 = running_ideals
    assert summary == [
        [(FAKE, (0, 1, 1, 0), None), (TRUE, (2, 0, -2, -2), I2)],
        [(TRUE, (-2, 0, 2, 2), I1), (TRUE, (2, 1, -1, -2), I3)],
        [(TRUE, (-2, -1, 1, 2), I2), (TRUE, (2, 2, 0, -2), I4)],
        [(TRUE, (-2, -2, 0, 2), I3), (FAKE, (0, 1, 1, 0), None)],
    ]


def test_flip_strings(running, running_graver, running_fan, running_ideals):
    fl = flips(running_ideals[0], running, running_graver, running_fan)
    assert [str(f) for f in fl] == ["x2*x3 - 1 (fake)", "x1^2 - x3^2*x4^2 (true)"]


def test_trivial_lattices_have_two_fake_flips(identity, double):
    for L, gens in [(identity, [(1, 0), (0, 1)]), (double, [(2, 0), (0, 2)])]:
        Gr = graver_basis(L)
        I = MonomialIdeal.of(gens, 2)
        fl = flips(I, L, Gr)
        assert [f.kind for f in fl] == [FAKE, FAKE]
        assert tangent_dimension(I, L, Gr) == 2


def test_cyclic_flips_are_true(cyclic):
    Gr = graver_basis(cyclic)
    fan = groebner_fan(cyclic, Gr)
    for k, I in enumerate(fan.ideals):
        fl = flips(I, cyclic, Gr, fan)
        assert [f.kind for f in fl] == [TRUE, TRUE]
        assert {fan.index_of(f.target) for f in fl} == set(fan.neighbours(k))


def test_tangent_dimension(running, running_graver, running_ideals):
    assert [tangent_dimension(I, running, running_graver) for I in running_ideals] == [2, 2, 2, 2]


def test_wall_coherence_composite(running, running_graver, running_fan, running_ideals):
    W, w, branch = wall_coherence_witness(running_ideals[1], running_ideals[2], running, running_graver, running_fan)
    assert W.binomial == ((2, 1, 0, 0), (0, 0, 1, 2))
    assert W.monomials == frozenset({(0, 1, 1, 0), (0, 0, 2, 2)})
    assert dot(w, (2, 1, -1, -2)) == 0
    assert branch == "composite"
    assert initial_ideal(running, running_graver, w) == W


def test_wall_coherence_first_flip(running, running_graver, running_fan, running_ideals):
    W, w, _ = wall_coherence_witness(running_ideals[0], running_ideals[1], running, running_graver, running_fan)
    assert W.binomial == ((0, 0, 2, 2), (2, 0, 0, 0))
    assert initial_ideal(running, running_graver, w) == W


def test_wall_coherence_rejects_bad_pairs(running, running_graver, running_fan, running_ideals):
    with pytest.raises(InvalidPair):
        wall_coherence_witness(running_ideals[0], running_ideals[0], running, running_graver, running_fan)
    with pytest.raises(InvalidPair):
        wall_coherence_witness(running_ideals[0], running_ideals[2], running, running_graver, running_fan)


def test_monomials_up_to():
    assert list(monomials_up_to(2, 2)) == [(0, 0), (0, 1), (1, 0), (0, 2), (1, 1), (2, 0)]
    assert len(list(monomials_up_to(4, 12))) == 1820


def test_exhaustive_oracle_matches_fan(running, running_graver, running_ideals):
    found = exhaustive_ideal_oracle(running, running_graver, degree_bound=12, margin=4)
    assert set(found) == set(running_ideals)
    assert default_oracle_bounds(running_graver) == (16, 4)


def test_exhaustive_oracle_on_trivial_lattices(identity, double):
    assert exhaustive_ideal_oracle(identity, graver_basis(identity), 4, 1) == [MonomialIdeal.of([(1, 0), (0, 1)], 2)]
    assert exhaustive_ideal_oracle(double, graver_basis(double), 8, 2) == [MonomialIdeal.of([(2, 0), (0, 2)], 2)]


def test_exhaustive_oracle_limit(running, running_graver):
    with pytest.raises(TooManyGraverElements):
        exhaustive_ideal_oracle(running, running_graver, 12, 4, max_graver=2)


def test_localization_facts(running, running_graver, running_ideals):
    for I in running_ideals:
        for sigma in minimal_primes(I):
            facts = localization_facts(I, sigma, running, running_graver)
            assert facts.holds, facts


def test_running_flip_graph(running, running_graver, running_fan):
    graph = flip_graph(running, running_graver, running_fan)
    assert graph.shape == "path"
    assert [(a, b) for a, b, _ in graph.edges] == [(0, 1), (1, 2), (2, 3)]
    assert sorted(graph.fake) == [0, 3]
    assert graph.is_connected()


def test_cyclic_flip_graph(cyclic):
    graph = flip_graph(cyclic, graver_basis(cyclic))
    assert graph.shape == "cycle"
    assert graph.adjacency() == frozenset({frozenset({0, 1}), frozenset({1, 2}), frozenset({0, 2})})
    assert not graph.fake
