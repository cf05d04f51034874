import numpy as np
import pytest

from toric.errors import CapExceeded, NotAChamber, NotProper
from toric.ideals import (Binomial, DegreeClass, MonomialIdeal, class_members, delta_chamber, extend, format_monomial,
                          localize, minimal_primes, radical, standard_monomial)
from toric.intlinalg import solve_in_lattice


def test_format_monomial():
    assert format_monomial((2, 1, 0, 0)) == "x1^2*x2"
    assert format_monomial((0, 0, 0)) == "1"


def test_binomial_terms():
    b = Binomial((2, 1, -1, -2))
    assert b.plus == (2, 1, 0, 0)
    assert b.minus == (0, 0, 1, 2)
    assert str(b) == "x1^2*x2 - x3*x4^2"
    assert Binomial.from_terms((0, 0, 1, 2), (2, 1, 0, 0)) == -b


def test_generators_are_minimalized():
    I = MonomialIdeal.of([(0, 1, 1, 0), (2, 1, 0, 0), (2, 2, 0, 0), (0, 2, 1, 0)], 4)
    assert I.sorted_gens == ((0, 1, 1, 0), (2, 1, 0, 0))
    assert (2, 5, 0, 3) in I
    assert (1, 1, 0, 9) not in I
    assert str(I) == "<x2*x3, x1^2*x2>"


def test_unit_and_zero_ideals():
    assert MonomialIdeal.unit(3).is_unit
    assert MonomialIdeal.zero(3).is_zero
    assert MonomialIdeal.of([(1, 0), (0, 0)], 2) == MonomialIdeal.unit(2)


def test_minimal_primes(running_ideals):
    # <x2x3, x1^2>: the minimal primes <x1, x2> and <x1, x3>
    assert minimal_primes(running_ideals[0]) == frozenset({frozenset({2, 3}), frozenset({1, 3})})
    for I in running_ideals:
        assert all(len(sigma) == 2 for sigma in minimal_primes(I))


def test_minimal_primes_of_unit_ideal():
    with pytest.raises(NotProper):
        minimal_primes(MonomialIdeal.unit(2))


def test_radical(running_ideals):
    assert radical(running_ideals[0]) == MonomialIdeal.of([(0, 1, 1, 0), (1, 0, 0, 0)], 4)
    assert radical(running_ideals[1]) == MonomialIdeal.of([(1, 1, 0, 0), (0, 1, 1, 0), (0, 0, 1, 1)], 4)


def test_localize_and_extend(running_ideals):
    I_sigma = localize(running_ideals[1], {0, 3})
    assert I_sigma == MonomialIdeal.of([(1, 0), (0, 2)], 2)
    assert extend(I_sigma, (1, 2), 4) == MonomialIdeal.of([(0, 1, 0, 0), (0, 0, 2, 0)], 4)


def test_delta_chamber(running, running_ideals):
    assert [delta_chamber(I, running).pair for I in running_ideals] == [(0, 1), (1, 2), (1, 2), (2, 3)]
    assert delta_chamber(running_ideals[0], running).cone.rays == ((1, 0), (0, 1))


def test_delta_chamber_rejects_non_graded_ideal(running):
    with pytest.raises(NotAChamber):
        delta_chamber(MonomialIdeal.of([(1, 0, 0, 0)], 4), running)


def test_degree_classes(running):
    assert DegreeClass.of((2, 0, 0, 0), running) == DegreeClass.of((0, 0, 2, 2), running)
    assert DegreeClass.of((0, 1, 1, 0), running) == DegreeClass.of((0, 0, 0, 0), running)
    assert DegreeClass.of((1, 0, 0, 0), running) != DegreeClass.of((0, 0, 0, 0), running)


def test_standard_monomial(running, running_ideals):
    assert standard_monomial(running_ideals[0], (2, 0, 0, 0), running) == (0, 0, 2, 2)
    assert standard_monomial(running_ideals[0], (0, 1, 1, 0), running) == (0, 0, 0, 0)
    assert standard_monomial(running_ideals[0], (1, 0, 3, 0), running) == (1, 0, 3, 0)
    assert standard_monomial(running_ideals[2], (2, 2, 0, 0), running) == (0, 0, 0, 2)


def test_standard_monomial_cap(running, running_ideals):
    # the standard monomial x4^2 of x1^2 x2^2 sits at lattice radius 2
    with pytest.raises(CapExceeded):
        standard_monomial(running_ideals[2], (2, 2, 0, 0), running, cap=1)


def test_class_members(running):
    members = list(class_members((0, 0, 6, 8), running, cap=2))
    assert len(members) == 9
    assert (0, 0, 6, 8) in members
    assert (2, 2, 6, 6) in members
    assert all(min(m) >= 0 for m in members)
    assert {DegreeClass.of(m, running) for m in members} == {DegreeClass.of((0, 0, 6, 8), running)}


def test_class_members_reach_standard_monomials_of_high_degree(running, running_ideals):
    # x2*x3 - 1 lies in the lattice ideal, so the class of x3^6*x4^8 is infinite
    members = list(class_members((0, 0, 6, 8), running))
    assert [m for m in members if m not in running_ideals[0]] == [(0, 0, 6, 8)]
    assert standard_monomial(running_ideals[0], (0, 0, 6, 8), running) == (0, 0, 6, 8)


@pytest.mark.parametrize("lattice", ["running", "cyclic"])
def test_degree_class_matches_lattice_membership(lattice, request):
    L = request.getfixturevalue(lattice)
    rng = np.random.default_rng(17)
    same = 0
    for u, v in rng.integers(0, 4, size=(1000, 2, L.n)).tolist():
        in_lattice = solve_in_lattice(L, [a - b for a, b in zip(u, v)]) is not None
        assert (DegreeClass.of(u, L) == DegreeClass.of(v, L)) == in_lattice
        same += in_lattice
    assert same > 0


def _random_ideals():
    rng = np.random.default_rng(23)
    ideals = [MonomialIdeal.of(rng.integers(0, 4, size=(k, 4)).tolist(), 4) for k in (1, 2, 3, 4, 5) * 8]
    return [I for I in ideals if not I.is_unit]


def test_radical_is_idempotent_and_keeps_minimal_primes(running_ideals):
    for I in running_ideals + _random_ideals():
        assert radical(radical(I)) == radical(I)
        assert minimal_primes(radical(I)) == minimal_primes(I)
